#include "vfk/svp.hpp"

#include <algorithm>
#include <stdexcept>
#include <type_traits>

#include "subset_enum.hpp"
#include "vfk/error.hpp"

namespace vfk {

std::string algorithm_name(const Algorithm& algorithm) {
  struct Visitor {
    std::string operator()(const StoerWagner&) const { return "stoer-wagner"; }
    std::string operator()(const KargerStein&) const { return "karger"; }
    std::string operator()(const BruteForce&) const { return "brute"; }
  };
  return std::visit(Visitor{}, algorithm);
}

namespace {

void check_enumerable(std::size_t count) {
  if (count > kMaxBruteForceVertices) {
    throw Error(ErrorCode::TooLarge, "exhaustive search limited to " +
                                         std::to_string(kMaxBruteForceVertices) +
                                         " superbase vectors, got " + std::to_string(count));
  }
}

}  // namespace

ShortVectorResult short_vector(const GramMatrix& g, const Algorithm& algorithm,
                               const Superbase* coords) {
  if (coords != nullptr && !(selling_parameters(*coords) == g)) {
    throw Error(ErrorCode::GramCoordsMismatch,
                "superbase inner products do not match the Gram matrix");
  }

  ShortVectorResult result;
  if (std::holds_alternative<BruteForce>(algorithm)) {
    result = brute_force_short_vector(g);
  } else {
    const WeightedGraph graph = graph_from_gram(g);
    Cut cut;
    if (const auto* ks = std::get_if<KargerStein>(&algorithm)) {
      const std::size_t trials = ks->trials.value_or(default_karger_trials(graph.vertex_count()));
      cut = karger_stein(graph, ks->seed, trials);
    } else {
      cut = stoer_wagner(graph);
    }
    if (cut.weight == 0) {
      throw Error(ErrorCode::ZeroWeightCut,
                  "minimum cut has weight 0; the Gram matrix cannot be of full rank");
    }
    result.subset = std::move(cut.side);
    result.squared_length = quadratic_form(g, BinaryAssignment::from_subset(g.size(), result.subset));
    if (result.squared_length != cut.weight) {
      throw std::logic_error("cut weight " + to_string(cut.weight) +
                             " disagrees with quadratic form " + to_string(result.squared_length));
    }
  }

  if (coords != nullptr) result.coordinates = coords->subset_sum(result.subset);
  return result;
}

ShortVectorResult brute_force_short_vector(const GramMatrix& g) {
  check_enumerable(g.size());
  const auto best = detail::minimize_subset_value(g.entries(), /*pin_first=*/false);
  ShortVectorResult result;
  result.subset = detail::mask_to_indices(best.mask);
  result.squared_length = best.value;
  return result;
}

namespace {

std::vector<Candidate> sorted_candidates(const GramMatrix& g, const Superbase* sb) {
  check_enumerable(g.size());
  struct Entry {
    detail::Mask mask;
    Rational value;
  };
  std::vector<Entry> entries;
  entries.reserve((std::size_t{1} << g.size()) - 2);
  detail::for_each_subset_value(
      g.entries(), /*pin_first=*/false, [&](detail::Mask mask, const auto& v, const Integer& scale) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::int64_t>) {
          entries.push_back({mask, make_rational(Integer(static_cast<long>(v)), scale)});
        } else {
          entries.push_back({mask, make_rational(v, scale)});
        }
      });
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.value != b.value) return a.value < b.value;
    return detail::subset_precedes(a.mask, b.mask);
  });

  std::vector<Candidate> out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    Candidate c;
    c.subset = detail::mask_to_indices(e.mask);
    if (sb != nullptr) c.coordinates = sb->subset_sum(c.subset);
    c.squared_length = std::move(e.value);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<Candidate> candidate_vectors(const Superbase& sb) {
  check_enumerable(sb.size());
  return sorted_candidates(selling_parameters(sb), &sb);
}

std::vector<Candidate> candidate_vectors(const GramMatrix& g) { return sorted_candidates(g, nullptr); }

ReductionCheck verify_reduction(const GramMatrix& g, const BinaryAssignment& u) {
  if (u.size() != g.size()) {
    throw Error(ErrorCode::LengthMismatch, "assignment has length " + std::to_string(u.size()) +
                                               ", expected " + std::to_string(g.size()));
  }
  if (!u.is_proper()) {
    throw Error(ErrorCode::ImproperAssignment, "assignment needs at least one 0 and one 1");
  }
  ReductionCheck check;
  check.quadratic_value = quadratic_form(g, u);
  check.cut_value = cut_weight(graph_from_gram(g), u.ones()).weight;
  return check;
}

}  // namespace vfk
