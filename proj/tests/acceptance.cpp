// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. All comparisons are exact rational equality.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "vfk/cli.hpp"
#include "vfk/generators.hpp"
#include "vfk/io.hpp"
#include "vfk/svp.hpp"

using namespace vfk;

namespace {

struct Check {
  bool ok = true;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

// Every instance touched by criteria 1-6, re-examined by criterion 8.
struct Registered {
  std::string label;
  GramMatrix gram;
  std::optional<Superbase> superbase;
};
std::vector<Registered> registry;

void remember(const std::string& label, const GramMatrix& g, const Superbase* sb = nullptr) {
  registry.push_back({label, g, sb ? std::optional<Superbase>(*sb) : std::nullopt});
}

std::string subset_label(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k] + 1);
  return out + "}";
}

bool is_difference_of_units(const RationalVector& v) {
  int plus = 0, minus = 0;
  for (const auto& x : v) {
    if (x == 1) {
      ++plus;
    } else if (x == -1) {
      ++minus;
    } else if (x != 0) {
      return false;
    }
  }
  return plus == 1 && minus == 1;
}

BinaryAssignment bits_of(std::uint32_t mask, std::size_t n) {
  std::vector<std::uint8_t> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = mask >> i & 1U;
  return BinaryAssignment(b);
}

// ---------------------------------------------------------------------------

Check criterion_paper_example() {
  Check c;
  const Superbase sb = gen_paper_example();
  const GramMatrix g = selling_parameters(sb);
  remember("paper_example", g, &sb);
  const auto r = short_vector(g, StoerWagner{}, &sb);
  const bool first = r.subset == std::vector<std::size_t>{0, 1};
  const bool second = r.subset == std::vector<std::size_t>{2, 3};
  c.expect(first || second, "subset " + subset_label(r.subset));
  if (first) {
    c.expect(*r.coordinates == RationalVector{Rational(1, 2), Rational(1, 2), Rational(0)},
             "coordinates of b_1 + b_2");
  }
  c.expect(r.squared_length == Rational(1, 2), "squared length " + to_string(r.squared_length));
  for (std::size_t i = 0; i < 4; ++i) {
    const Rational q = quadratic_form(g, BinaryAssignment::from_subset(4, {i}));
    c.expect(q > Rational(1, 2), "singleton " + std::to_string(i + 1) + " has Q = " + to_string(q));
  }
  return c;
}

Check criterion_an() {
  Check c;
  for (std::size_t n = 1; n <= 50; ++n) {
    const Superbase sb = gen_an(n);
    const GramMatrix g = selling_parameters(sb);
    remember("an " + std::to_string(n), g, &sb);
    const Cut cut = stoer_wagner(graph_from_gram(g));
    c.expect(cut.weight == 2, "A_" + std::to_string(n) + " cut weight " + to_string(cut.weight));
    c.expect(oracle::is_cyclic_interval(cut.side, n + 1),
             "A_" + std::to_string(n) + " side " + subset_label(cut.side) + " is not a cyclic interval");
    const auto r = short_vector(g, StoerWagner{}, &sb);
    c.expect(r.squared_length == 2, "A_" + std::to_string(n) + " squared length");
    c.expect(is_difference_of_units(*r.coordinates), "A_" + std::to_string(n) + " vector is not e_i - e_j");
  }
  return c;
}

Check criterion_anstar() {
  Check c;
  for (std::size_t n = 1; n <= 50; ++n) {
    const Superbase sb = gen_anstar(n);
    const GramMatrix g = selling_parameters(sb);
    remember("anstar " + std::to_string(n), g, &sb);
    const Cut cut = stoer_wagner(graph_from_gram(g));
    const Rational expected = make_rational(static_cast<long>(n), static_cast<long>(n + 1));
    c.expect(cut.weight == expected, "A_" + std::to_string(n) + "* cut weight " + to_string(cut.weight));
    c.expect(cut.side.size() == 1 || cut.side.size() == n,
             "A_" + std::to_string(n) + "* side " + subset_label(cut.side));
  }
  return c;
}

Check criterion_oracle_equivalence() {
  Check c;
  std::vector<std::pair<std::string, GramMatrix>> instances;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 10;
    instances.emplace_back("random_gram n=" + std::to_string(n) + " seed=" + std::to_string(seed),
                           gen_random_gram(n, seed));
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    instances.emplace_back("an " + std::to_string(n), selling_parameters(gen_an(n)));
    instances.emplace_back("anstar " + std::to_string(n), selling_parameters(gen_anstar(n)));
    instances.emplace_back("zn " + std::to_string(n), selling_parameters(gen_zn(n)));
  }
  instances.emplace_back("paper_example", selling_parameters(gen_paper_example()));

  for (const auto& [label, g] : instances) {
    remember(label, g);
    const WeightedGraph graph = graph_from_gram(g);
    const Rational sw = stoer_wagner(graph).weight;
    const Rational bf = brute_force_mincut(graph).weight;
    const Rational sv = brute_force_short_vector(g).squared_length;
    c.expect(sw == bf && bf == sv,
             label + ": " + to_string(sw) + " / " + to_string(bf) + " / " + to_string(sv));
  }
  return c;
}

Check criterion_reduction_identity() {
  Check c;
  std::vector<std::pair<std::string, GramMatrix>> small;
  for (std::size_t n = 1; n <= 6; ++n) {
    small.emplace_back("an", selling_parameters(gen_an(n)));
    small.emplace_back("anstar", selling_parameters(gen_anstar(n)));
    small.emplace_back("zn", selling_parameters(gen_zn(n)));
    for (std::uint64_t s = 0; s < 3; ++s) small.emplace_back("random_gram", gen_random_gram(n, 1000 + s));
  }
  small.emplace_back("paper_example", selling_parameters(gen_paper_example()));
  for (const auto& [label, g] : small) {
    remember(label, g);
    const std::size_t count = g.size();
    for (std::uint32_t mask = 1; mask + 1 < (1U << count); ++mask) {
      const auto r = verify_reduction(g, bits_of(mask, count));
      c.expect(r.quadratic_value == r.cut_value, label + " exhaustive mismatch");
    }
  }

  Xoshiro256 rng(20240601);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = 1 + uniform_below(rng, 20);
    const std::uint64_t seed = rng();
    const GramMatrix g = gen_random_gram(n, seed);
    if (k % 50 == 0) remember("random_gram reduction", g);
    std::vector<std::uint8_t> bits(n + 1);
    do {
      for (auto& b : bits) b = static_cast<std::uint8_t>(uniform_below(rng, 2));
    } while (!BinaryAssignment(bits).is_proper());
    const auto r = verify_reduction(g, BinaryAssignment(bits));
    c.expect(r.quadratic_value == r.cut_value, "random pair " + std::to_string(k));
  }
  return c;
}

Check criterion_randomized() {
  Check c;
  int matches = 0;
  const std::uint64_t master = 0x5eed;
  for (std::uint64_t k = 0; k < 100; ++k) {
    const std::size_t n = 1 + k % 10;
    const GramMatrix g = gen_random_gram(n, stream_seed(master, k));
    remember("karger instance " + std::to_string(k), g);
    const WeightedGraph graph = graph_from_gram(g);
    const Rational opt = stoer_wagner(graph).weight;
    const Cut ks = karger_stein(graph, stream_seed(master ^ 0xffff, k), default_karger_trials(n + 1));
    c.expect(ks.weight >= opt, "instance " + std::to_string(k) + " below optimum");
    if (ks.weight == opt) ++matches;
  }
  c.expect(matches >= 99, "only " + std::to_string(matches) + "/100 matched");
  return c;
}

Check criterion_scale() {
  Check c;
  std::istringstream no_input;
  std::ostringstream gen_out, err;
  int code = run_cli({"gen", "an", "500"}, no_input, gen_out, err);
  c.expect(code == 0, "gen an 500 failed: " + err.str());
  std::istringstream svp_in(gen_out.str());
  std::ostringstream svp_out;
  code = run_cli({"svp", "-", "--algorithm", "stoer-wagner", "--json"}, svp_in, svp_out, err);
  c.expect(code == 0, "svp failed: " + err.str());
  c.expect(svp_out.str().find("\"squared_length\":\"2\"") != std::string::npos,
           "unexpected output " + svp_out.str().substr(0, 200));
  return c;
}

Check criterion_structural() {
  Check c;
  Xoshiro256 rng(8);
  for (const auto& inst : registry) {
    const GramMatrix& g = inst.gram;
    const std::size_t count = g.size();
    c.expect(quadratic_form(g, BinaryAssignment(std::vector<std::uint8_t>(count, 1))) == 0,
             inst.label + ": Q(1) != 0");
    for (std::size_t i = 0; i < count; ++i) {
      Rational row = 0;
      for (std::size_t j = 0; j < count; ++j) row += g(i, j);
      c.expect(row == 0, inst.label + ": row sum");
    }
    if (count <= 11) {
      for (std::uint32_t mask = 0; mask < (1U << count); ++mask) {
        const auto u = bits_of(mask, count);
        c.expect(quadratic_form(g, u) == quadratic_form(g, u.complement()), inst.label + ": complement");
      }
    } else {
      for (int k = 0; k < 64; ++k) {
        std::vector<std::uint8_t> bits(count);
        for (auto& b : bits) b = static_cast<std::uint8_t>(uniform_below(rng, 2));
        const BinaryAssignment u(bits);
        c.expect(quadratic_form(g, u) == quadratic_form(g, u.complement()), inst.label + ": complement");
      }
    }
    const auto r = short_vector(g, StoerWagner{}, inst.superbase ? &*inst.superbase : nullptr);
    c.expect(r.squared_length > 0, inst.label + ": min-cut weight not positive");
    c.expect(!r.subset.empty() && r.subset.size() < count, inst.label + ": subset not proper");
    c.expect(quadratic_form(g, BinaryAssignment::from_subset(count, r.subset)) == r.squared_length,
             inst.label + ": certificate");
    if (inst.superbase) {
      c.expect(dot(*r.coordinates, *r.coordinates) == r.squared_length, inst.label + ": coordinates");
    }
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double budget_seconds;  // 0 = no time limit
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "three-dimensional example golden test", 1.0, criterion_paper_example},
      {"AC2", "A_n family, n = 1..50", 10.0, criterion_an},
      {"AC3", "A_n* family, n = 1..50", 10.0, criterion_anstar},
      {"AC4", "oracle equivalence (200 random + families, n <= 10)", 60.0, criterion_oracle_equivalence},
      {"AC5", "reduction identity (exhaustive n <= 6, 1000 random n <= 20)", 0.0,
       criterion_reduction_identity},
      {"AC6", "Karger-Stein default trials: >= 99/100, never below optimum", 0.0, criterion_randomized},
      {"AC7", "svp on A_500 (501-vertex cycle) in under 30 s", 30.0, criterion_scale},
      {"AC8", "structural invariants on every instance above", 0.0, criterion_structural},
  };

  int failures = 0;
  for (const auto& crit : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = crit.run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.first_failure = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (crit.budget_seconds > 0 && secs >= crit.budget_seconds) {
      result.expect(false, "took " + std::to_string(secs) + " s");
    }
    if (!result.ok) ++failures;
    std::printf("[%s] %s %s (%.3f s)%s%s\n", result.ok ? "PASS" : "FAIL", crit.id, crit.title, secs,
                result.ok ? "" : ": ", result.first_failure.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
