#include "vfk/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "vfk/error.hpp"
#include "vfk/generators.hpp"
#include "vfk/io.hpp"
#include "vfk/lattice.hpp"
#include "vfk/svp.hpp"

namespace vfk {

namespace {

using ordered_json = nlohmann::ordered_json;

// Failures that map to the usage/parse exit code.
struct UsageError {
  std::string message;
};

struct LoadedInput {
  std::optional<Superbase> superbase;
  GramMatrix gram;
};

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError{"cannot open '" + path + "'"};
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

LoadedInput load(const std::string& path, std::istream& in) {
  InputDocument doc = parse_input(read_source(path, in));
  if (doc.kind == DocumentKind::Superbase) {
    Superbase sb = validate_superbase(std::move(doc.entries));
    GramMatrix g = selling_parameters(sb);
    return {std::move(sb), std::move(g)};
  }
  return {std::nullopt, validate_gram(std::move(doc.entries))};
}

std::string join_indices(const std::vector<std::size_t>& idx, const char* sep) {
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += sep;
    s += std::to_string(idx[k] + 1);
  }
  return s;
}

std::string join_rationals(const RationalVector& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ' ';
    s += to_string(v[k]);
  }
  return s;
}

ordered_json rationals_json(const RationalVector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

ordered_json indices_json(const std::vector<std::size_t>& idx) {
  ordered_json a = ordered_json::array();
  for (std::size_t i : idx) a.push_back(i + 1);
  return a;
}

BinaryAssignment parse_assignment(const std::string& text) {
  std::vector<std::uint8_t> bits;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "0" || tok == "1") {
      bits.push_back(static_cast<std::uint8_t>(tok[0] - '0'));
    } else {
      throw UsageError{"--assignment entries must be 0 or 1, got '" + tok + "'"};
    }
  }
  if (bits.empty()) throw UsageError{"--assignment is empty"};
  return BinaryAssignment(std::move(bits));
}

// ---------------------------------------------------------------------------

struct SvpOptions {
  std::string file;
  std::string algorithm = "stoer-wagner";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  bool json = false;
};

int cmd_svp(const SvpOptions& o, std::istream& in, std::ostream& out) {
  const LoadedInput input = load(o.file, in);
  Algorithm algorithm = StoerWagner{};
  std::size_t trials = 0;
  if (o.algorithm == "karger") {
    trials = o.trials.value_or(default_karger_trials(input.gram.size()));
    if (trials == 0) throw UsageError{"--trials must be positive"};
    algorithm = KargerStein{o.seed.value_or(0), trials};
  } else if (o.algorithm == "brute") {
    algorithm = BruteForce{};
  }
  const ShortVectorResult r =
      short_vector(input.gram, algorithm, input.superbase ? &*input.superbase : nullptr);

  if (o.json) {
    ordered_json j;
    j["subset"] = indices_json(r.subset);
    j["squared_length"] = to_string(r.squared_length);
    if (r.coordinates) j["coordinates"] = rationals_json(*r.coordinates);
    j["algorithm"] = algorithm_name(algorithm);
    if (std::holds_alternative<KargerStein>(algorithm)) {
      j["seed"] = o.seed.value_or(0);
      j["trials"] = trials;
    }
    out << j.dump() << '\n';
  } else {
    out << "algorithm: " << algorithm_name(algorithm) << '\n';
    if (std::holds_alternative<KargerStein>(algorithm)) {
      out << "seed: " << o.seed.value_or(0) << '\n' << "trials: " << trials << '\n';
    }
    out << "subset: " << join_indices(r.subset, " ") << '\n';
    out << "squared_length: " << to_string(r.squared_length) << '\n';
    if (r.coordinates) out << "coordinates: " << join_rationals(*r.coordinates) << '\n';
  }
  return kExitOk;
}

int cmd_validate(const std::string& file, std::istream& in, std::ostream& out) {
  const LoadedInput input = load(file, in);
  if (input.superbase) {
    out << "valid superbase: " << input.superbase->size() << " vectors, n=" << input.superbase->dimension()
        << ", m=" << input.superbase->ambient_dimension() << '\n';
  } else {
    out << "valid gram: side " << input.gram.size() << ", n=" << input.gram.dimension() << '\n';
  }
  return kExitOk;
}

int cmd_candidates(const std::string& file, bool json, std::istream& in, std::ostream& out) {
  const LoadedInput input = load(file, in);
  const auto candidates =
      input.superbase ? candidate_vectors(*input.superbase) : candidate_vectors(input.gram);
  if (json) {
    ordered_json a = ordered_json::array();
    for (const auto& c : candidates) {
      ordered_json j;
      j["subset"] = indices_json(c.subset);
      j["squared_length"] = to_string(c.squared_length);
      if (c.coordinates) j["coordinates"] = rationals_json(*c.coordinates);
      a.push_back(std::move(j));
    }
    out << a.dump() << '\n';
  } else {
    out << "# subset\tsquared_length" << (input.superbase ? "\tcoordinates" : "") << '\n';
    for (const auto& c : candidates) {
      out << join_indices(c.subset, ",") << '\t' << to_string(c.squared_length);
      if (c.coordinates) out << '\t' << join_rationals(*c.coordinates);
      out << '\n';
    }
  }
  return kExitOk;
}

struct GenOptions {
  std::string family;
  std::optional<std::size_t> n;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> density;
  std::optional<std::string> output;
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
  const auto family = parse_family(o.family);
  if (!family) throw UsageError{"unknown family '" + o.family + "'"};
  InstanceSpec spec;
  spec.family = *family;
  if (o.n) {
    spec.n = *o.n;
  } else if (*family == Family::PaperExample) {
    spec.n = 3;
  } else {
    throw UsageError{"family '" + o.family + "' needs a dimension"};
  }
  if (*family == Family::RandomGram && !o.seed) throw UsageError{"random_gram needs --seed"};
  spec.seed = o.seed;
  if (o.density) {
    Rational d;
    if (!try_parse_rational(*o.density, d)) throw UsageError{"bad --density '" + *o.density + "'"};
    spec.density = d;
  }

  const Instance inst = generate(spec);
  std::string comment = family_name(spec.family) + " n=" + std::to_string(spec.n);
  if (spec.family == Family::RandomGram) {
    comment += " seed=" + std::to_string(*spec.seed) +
               " density=" + to_string(spec.density.value_or(Rational(1, 2)));
  }
  const std::string text =
      inst.superbase ? format_superbase(*inst.superbase, comment) : format_gram(*inst.gram, comment);

  if (o.output && *o.output != "-") {
    std::ofstream f(*o.output, std::ios::binary);
    if (!f) throw UsageError{"cannot write '" + *o.output + "'"};
    f << text;
  } else {
    out << text;
  }
  return kExitOk;
}

int cmd_verify(const std::string& file, const std::string& assignment, std::istream& in,
               std::ostream& out) {
  const LoadedInput input = load(file, in);
  const BinaryAssignment u = parse_assignment(assignment);
  const ReductionCheck check = verify_reduction(input.gram, u);
  const bool equal = check.quadratic_value == check.cut_value;
  out << "quadratic_form: " << to_string(check.quadratic_value) << '\n'
      << "cut_weight: " << to_string(check.cut_value) << '\n'
      << "equal: " << (equal ? "yes" : "no") << '\n';
  return equal ? kExitOk : kExitValidation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Shortest vectors of lattices of Voronoi's first kind via minimum cuts", "vfk"};
  app.require_subcommand(1);

  SvpOptions svp;
  auto* svp_cmd = app.add_subcommand("svp", "Compute a shortest nonzero lattice vector");
  svp_cmd->add_option("file", svp.file, "Superbase or Gram file ('-' for stdin)")->required();
  svp_cmd->add_option("--algorithm", svp.algorithm, "Minimum-cut algorithm")
      ->check(CLI::IsMember({"stoer-wagner", "karger", "brute"}));
  svp_cmd->add_option("--seed", svp.seed, "Master seed for --algorithm karger");
  svp_cmd->add_option("--trials", svp.trials, "Trial count for --algorithm karger");
  svp_cmd->add_flag("--json", svp.json, "Emit a single JSON object");

  std::string validate_file;
  auto* validate_cmd = app.add_subcommand("validate", "Check a superbase or Gram file");
  validate_cmd->add_option("file", validate_file)->required();

  std::string candidates_file;
  bool candidates_json = false;
  auto* candidates_cmd =
      app.add_subcommand("candidates", "List all 2^(n+1)-2 subset sums by squared length");
  candidates_cmd->add_option("file", candidates_file)->required();
  candidates_cmd->add_flag("--json", candidates_json);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("family", gen.family, "an | anstar | zn | paper_example | random_gram")
      ->required();
  gen_cmd->add_option("n", gen.n, "Lattice dimension");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--density", gen.density, "Edge probability in (0,1], e.g. 1/2");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  std::string verify_file;
  std::string verify_assignment;
  auto* verify_cmd = app.add_subcommand("verify", "Compare Q(u) with the cut weight of u");
  verify_cmd->add_option("file", verify_file)->required();
  verify_cmd->add_option("--assignment", verify_assignment, "Comma-separated bits, e.g. 1,1,0,0")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (svp_cmd->parsed()) return cmd_svp(svp, in, out);
    if (validate_cmd->parsed()) return cmd_validate(validate_file, in, out);
    if (candidates_cmd->parsed()) return cmd_candidates(candidates_file, candidates_json, in, out);
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_file, verify_assignment, in, out);
  } catch (const UsageError& e) {
    err << "error: " << e.message << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    const bool parse = e.code() == ErrorCode::ParseError || e.code() == ErrorCode::ShapeError;
    return parse ? kExitUsage : kExitValidation;
  }
  return kExitUsage;
}

}  // namespace vfk
