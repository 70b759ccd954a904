#include <doctest.h>

#include "oracle.hpp"
#include "vfk/error.hpp"
#include "vfk/generators.hpp"
#include "vfk/svp.hpp"

using namespace vfk;

TEST_CASE("gen_an") {
  const Superbase a3 = gen_an(3);
  CHECK(a3.vectors() == RationalMatrix{{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {-1, 0, 0, 1}});
  const Superbase a1 = gen_an(1);
  CHECK(a1.vectors() == RationalMatrix{{1, -1}, {-1, 1}});
  CHECK(selling_parameters(a1).entries() == RationalMatrix{{2, -2}, {-2, 2}});
  CHECK_THROWS_AS(gen_an(0), Error);
}

TEST_CASE("gen_anstar") {
  const GramMatrix g = selling_parameters(gen_anstar(3));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(g(i, j) == (i == j ? Rational(3, 4) : Rational(-1, 4)));
  }
  const Superbase s1 = gen_anstar(1);
  CHECK(s1.vectors() == RationalMatrix{{Rational(1, 2), Rational(-1, 2)}, {Rational(-1, 2), Rational(1, 2)}});
  CHECK(short_vector(selling_parameters(s1)).squared_length == Rational(1, 2));
}

TEST_CASE("gen_zn") {
  CHECK(gen_zn(2).vectors() == RationalMatrix{{1, 0}, {0, 1}, {-1, -1}});
  const auto g2 = graph_from_gram(selling_parameters(gen_zn(2)));
  CHECK(g2.weight(0, 2) == 1);
  CHECK(g2.weight(1, 2) == 1);
  CHECK(g2.weight(0, 1) == 0);
  CHECK(oracle::min_cut_weight(g2) == 1);
  for (std::size_t n = 1; n <= 10; ++n) {
    const GramMatrix g = selling_parameters(gen_zn(n));
    CHECK(g(n, n) == static_cast<long>(n));
    CHECK(oracle::min_gram_value(g.entries()) == 1);
    CHECK(short_vector(g).squared_length == 1);
  }
}

TEST_CASE("gen_paper_example") {
  const Superbase sb = gen_paper_example();
  const Rational h(1, 2);
  CHECK(sb.vectors() == RationalMatrix{{1, -h, 0}, {-h, 1, 0}, {0, 0, 1}, {-h, -h, -1}});
  const auto r = short_vector(selling_parameters(sb), StoerWagner{}, &sb);
  CHECK(r.subset == std::vector<std::size_t>{0, 1});
  CHECK(r.squared_length == h);
  for (std::size_t i = 0; i < 4; ++i) CHECK(dot(sb[i], sb[i]) > h);
}

TEST_CASE("gen_random_gram is deterministic and valid") {
  CHECK(gen_random_gram(5, 7, Rational(1, 2)) == gen_random_gram(5, 7, Rational(1, 2)));
  CHECK_FALSE(gen_random_gram(5, 7) == gen_random_gram(5, 8));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 12;
    const Rational density = make_rational(1 + seed % 4, 4);
    const GramMatrix g = gen_random_gram(n, seed, density);
    CHECK_NOTHROW(validate_gram(g.entries()));
    CHECK(stoer_wagner(graph_from_gram(g)).weight > 0);
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j <= n; ++j) {
        if (i == j) continue;
        CHECK(g(i, j) >= -4);
        CHECK(g(i, j).get_den() <= 8);
      }
    }
  }
  CHECK_THROWS_AS(gen_random_gram(3, 1, Rational(0)), Error);
  CHECK_THROWS_AS(gen_random_gram(3, 1, Rational(3, 2)), Error);
}

TEST_CASE("density 1 yields a complete support") {
  const auto g = graph_from_gram(gen_random_gram(8, 3, Rational(1)));
  CHECK(g.edge_count() == 9 * 8 / 2);
}

TEST_CASE("generator outputs validate up to n = 64") {
  for (std::size_t n = 1; n <= 64; ++n) {
    for (const auto& sb : {gen_an(n), gen_anstar(n), gen_zn(n)}) {
      CHECK_NOTHROW(validate_gram(selling_parameters(sb).entries()));
    }
  }
}

TEST_CASE("A_n and A_n* minimum cuts") {
  for (std::size_t n = 2; n <= 30; ++n) {
    const auto an = stoer_wagner(graph_from_gram(selling_parameters(gen_an(n))));
    CHECK(an.weight == 2);
    CHECK(oracle::is_cyclic_interval(an.side, n + 1));
    const auto as = stoer_wagner(graph_from_gram(selling_parameters(gen_anstar(n))));
    CHECK(as.weight == make_rational(static_cast<long>(n), static_cast<long>(n + 1)));
    CHECK(as.side.size() == 1);
  }
}

TEST_CASE("InstanceSpec dispatch") {
  CHECK(parse_family("anstar") == Family::AnStar);
  CHECK_FALSE(parse_family("dn").has_value());
  for (auto f : {Family::An, Family::AnStar, Family::Zn, Family::PaperExample, Family::RandomGram}) {
    CHECK(parse_family(family_name(f)) == f);
  }
  CHECK(generate({Family::PaperExample, 3, {}, {}}).superbase.has_value());
  CHECK_THROWS_AS(generate({Family::PaperExample, 4, {}, {}}), Error);
  CHECK_THROWS_AS(generate({Family::RandomGram, 4, {}, {}}), Error);
  const Instance r = generate({Family::RandomGram, 4, 9, Rational(1, 3)});
  CHECK(r.gram.has_value());
  CHECK(r.selling() == gen_random_gram(4, 9, Rational(1, 3)));
  CHECK_THROWS_AS(generate({Family::An, 0, {}, {}}), Error);
}
