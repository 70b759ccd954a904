#include "vfk/generators.hpp"

#include <numeric>
#include <utility>
#include <vector>

#include "vfk/error.hpp"
#include "vfk/rng.hpp"

namespace vfk {

namespace {

void require_dimension(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
}

}  // namespace

Superbase gen_an(std::size_t n) {
  require_dimension(n);
  const std::size_t count = n + 1;
  RationalMatrix v(count, RationalVector(count, Rational(0)));
  for (std::size_t i = 0; i < count; ++i) {
    v[i][i] = 1;
    v[i][(i + 1) % count] = -1;
  }
  return validate_superbase(std::move(v));
}

Superbase gen_anstar(std::size_t n) {
  require_dimension(n);
  const std::size_t count = n + 1;
  const Rational off = make_rational(-1, static_cast<unsigned long>(count));
  const Rational on = make_rational(static_cast<unsigned long>(n), static_cast<unsigned long>(count));
  RationalMatrix v(count, RationalVector(count, off));
  for (std::size_t i = 0; i < count; ++i) v[i][i] = on;
  return validate_superbase(std::move(v));
}

Superbase gen_zn(std::size_t n) {
  require_dimension(n);
  RationalMatrix v(n + 1, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    v[i][i] = 1;
    v[n][i] = -1;
  }
  return validate_superbase(std::move(v));
}

Superbase gen_paper_example() {
  const Rational half(1, 2);
  RationalMatrix v = {
      {Rational(1), -half, Rational(0)},
      {-half, Rational(1), Rational(0)},
      {Rational(0), Rational(0), Rational(1)},
      {-half, -half, Rational(-1)},
  };
  return validate_superbase(std::move(v));
}

GramMatrix gen_random_gram(std::size_t n, std::uint64_t seed, const Rational& density,
                           const RandomGramConfig& config) {
  require_dimension(n);
  if (density <= 0 || density > 1) {
    throw Error(ErrorCode::InvalidArgument, "density must lie in (0, 1]");
  }
  if (config.qmax == 0 || config.max_denominator == 0) {
    throw Error(ErrorCode::InvalidArgument, "qmax and max_denominator must be positive");
  }
  if (!density.get_num().fits_ulong_p() || !density.get_den().fits_ulong_p()) {
    throw Error(ErrorCode::InvalidArgument, "density numerator/denominator too large");
  }
  const std::uint64_t p_num = density.get_num().get_ui();
  const std::uint64_t p_den = density.get_den().get_ui();

  Xoshiro256 rng(seed);
  const std::size_t count = n + 1;

  auto draw_weight = [&]() {
    const std::uint64_t den = 1 + uniform_below(rng, config.max_denominator);
    const std::uint64_t num = 1 + uniform_below(rng, config.qmax * den);
    return make_rational(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  };

  // Random spanning tree: shuffle, then attach each vertex to an earlier one.
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = count - 1; i > 0; --i) {
    std::swap(order[i], order[uniform_below(rng, i + 1)]);
  }
  std::vector<std::vector<bool>> in_tree(count, std::vector<bool>(count, false));
  for (std::size_t k = 1; k < count; ++k) {
    const std::size_t parent = order[uniform_below(rng, k)];
    in_tree[order[k]][parent] = in_tree[parent][order[k]] = true;
  }

  RationalMatrix q(count, RationalVector(count, Rational(0)));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const bool keep = in_tree[i][j] || uniform_below(rng, p_den) < p_num;
      if (!keep) continue;
      q[i][j] = -draw_weight();
      q[j][i] = q[i][j];
      q[i][i] -= q[i][j];
      q[j][j] -= q[i][j];
    }
  }
  return validate_gram(std::move(q));
}

std::optional<Family> parse_family(const std::string& name) {
  if (name == "an") return Family::An;
  if (name == "anstar") return Family::AnStar;
  if (name == "zn") return Family::Zn;
  if (name == "paper_example") return Family::PaperExample;
  if (name == "random_gram") return Family::RandomGram;
  return std::nullopt;
}

std::string family_name(Family family) {
  switch (family) {
    case Family::An: return "an";
    case Family::AnStar: return "anstar";
    case Family::Zn: return "zn";
    case Family::PaperExample: return "paper_example";
    case Family::RandomGram: return "random_gram";
  }
  return "unknown";
}

GramMatrix Instance::selling() const {
  return superbase ? selling_parameters(*superbase) : *gram;
}

Instance generate(const InstanceSpec& spec) {
  require_dimension(spec.n);
  Instance out;
  switch (spec.family) {
    case Family::An: out.superbase = gen_an(spec.n); break;
    case Family::AnStar: out.superbase = gen_anstar(spec.n); break;
    case Family::Zn: out.superbase = gen_zn(spec.n); break;
    case Family::PaperExample:
      if (spec.n != 3) throw Error(ErrorCode::InvalidArgument, "paper_example has dimension 3");
      out.superbase = gen_paper_example();
      break;
    case Family::RandomGram:
      if (!spec.seed) throw Error(ErrorCode::InvalidArgument, "random_gram requires a seed");
      out.gram = gen_random_gram(spec.n, *spec.seed, spec.density.value_or(Rational(1, 2)));
      break;
  }
  return out;
}

}  // namespace vfk
