#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>

#include "vfk/cli.hpp"
#include "vfk/error.hpp"
#include "vfk/generators.hpp"
#include "vfk/io.hpp"
#include "vfk/lattice.hpp"
#include "vfk/mincut.hpp"
#include "vfk/svp.hpp"

namespace py = pybind11;

namespace {

py::object fraction_type() {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls;
}

py::object to_py(const vfk::Rational& r) { return fraction_type()(py::str(vfk::to_string(r))); }

py::list to_py(const vfk::RationalVector& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::list to_py(const vfk::RationalMatrix& m) {
  py::list out;
  for (const auto& row : m) out.append(to_py(row));
  return out;
}

vfk::Rational from_py(const py::handle& h) {
  if (py::isinstance<py::bool_>(h)) {
    throw vfk::Error(vfk::ErrorCode::InvalidArgument, "booleans are not rationals");
  }
  return vfk::parse_rational(py::str(h).cast<std::string>());
}

vfk::RationalMatrix matrix_from_py(const py::sequence& rows) {
  vfk::RationalMatrix m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    vfk::RationalVector v;
    for (const auto& x : py::reinterpret_borrow<py::sequence>(row)) v.push_back(from_py(x));
    m.push_back(std::move(v));
  }
  return m;
}

// A Superbase or GramMatrix passed from Python; exactly one pointer is set.
struct Lattice {
  const vfk::Superbase* superbase = nullptr;
  const vfk::GramMatrix* gram = nullptr;
};

Lattice lattice_from_py(const py::handle& h) {
  if (py::isinstance<vfk::Superbase>(h)) return {&h.cast<const vfk::Superbase&>(), nullptr};
  if (py::isinstance<vfk::GramMatrix>(h)) return {nullptr, &h.cast<const vfk::GramMatrix&>()};
  throw py::type_error("expected a Superbase or a GramMatrix");
}

vfk::GramMatrix gram_of(const py::handle& h) {
  const Lattice l = lattice_from_py(h);
  return l.superbase ? vfk::selling_parameters(*l.superbase) : *l.gram;
}

vfk::Algorithm make_algorithm(const std::string& name, std::uint64_t seed,
                              std::optional<std::size_t> trials) {
  if (name == "stoer-wagner") return vfk::StoerWagner{};
  if (name == "karger") return vfk::KargerStein{seed, trials};
  if (name == "brute") return vfk::BruteForce{};
  throw vfk::Error(vfk::ErrorCode::InvalidArgument,
                   "unknown algorithm '" + name + "' (expected stoer-wagner, karger or brute)");
}

py::object error_type;

void translate(const vfk::Error& e) {
  py::object exc = error_type(e.what());
  exc.attr("code") = vfk::error_code_name(e.code());
  exc.attr("indices") = py::cast(e.detail().indices);
  exc.attr("value") = e.detail().value ? to_py(*e.detail().value) : py::none();
  exc.attr("line") = e.detail().line;
  exc.attr("column") = e.detail().column;
  PyErr_SetObject(error_type.ptr(), exc.ptr());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact shortest-vector search for lattices of Voronoi's first kind";

  error_type = py::reinterpret_borrow<py::object>(
      py::exception<vfk::Error>(m, "VfkError", PyExc_ValueError));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const vfk::Error& e) {
      translate(e);
    }
  });

  py::class_<vfk::Superbase>(m, "Superbase")
      .def(py::init([](const py::sequence& vectors) {
             return vfk::validate_superbase(matrix_from_py(vectors));
           }),
           py::arg("vectors"))
      .def_property_readonly("vectors", [](const vfk::Superbase& s) { return to_py(s.vectors()); })
      .def_property_readonly("dimension", &vfk::Superbase::dimension)
      .def_property_readonly("ambient_dimension", &vfk::Superbase::ambient_dimension)
      .def("__len__", &vfk::Superbase::size)
      .def("gram", &vfk::selling_parameters)
      .def("subset_sum", [](const vfk::Superbase& s, const std::vector<std::size_t>& subset) {
        return to_py(s.subset_sum(subset));
      })
      .def("__eq__", [](const vfk::Superbase& a, const vfk::Superbase& b) { return a == b; })
      .def("__repr__", [](const vfk::Superbase& s) {
        return "Superbase(n=" + std::to_string(s.dimension()) +
               ", m=" + std::to_string(s.ambient_dimension()) + ")";
      });

  py::class_<vfk::GramMatrix>(m, "GramMatrix")
      .def(py::init([](const py::sequence& entries) {
             return vfk::validate_gram(matrix_from_py(entries));
           }),
           py::arg("entries"))
      .def_property_readonly("entries", [](const vfk::GramMatrix& g) { return to_py(g.entries()); })
      .def_property_readonly("dimension", &vfk::GramMatrix::dimension)
      .def("__len__", &vfk::GramMatrix::size)
      .def("__getitem__", [](const vfk::GramMatrix& g, std::pair<std::size_t, std::size_t> ij) {
        if (ij.first >= g.size() || ij.second >= g.size()) throw py::index_error();
        return to_py(g(ij.first, ij.second));
      })
      .def("__eq__", [](const vfk::GramMatrix& a, const vfk::GramMatrix& b) { return a == b; })
      .def("__repr__", [](const vfk::GramMatrix& g) {
        return "GramMatrix(n=" + std::to_string(g.dimension()) + ")";
      });

  py::class_<vfk::ShortVectorResult>(m, "ShortVectorResult")
      .def_readonly("subset", &vfk::ShortVectorResult::subset)
      .def_property_readonly("squared_length",
                             [](const vfk::ShortVectorResult& r) { return to_py(r.squared_length); })
      .def_property_readonly("coordinates", [](const vfk::ShortVectorResult& r) -> py::object {
        if (!r.coordinates) return py::none();
        return to_py(*r.coordinates);
      });

  py::class_<vfk::Candidate>(m, "Candidate")
      .def_readonly("subset", &vfk::Candidate::subset)
      .def_property_readonly("squared_length",
                             [](const vfk::Candidate& c) { return to_py(c.squared_length); })
      .def_property_readonly("coordinates", [](const vfk::Candidate& c) -> py::object {
        if (!c.coordinates) return py::none();
        return to_py(*c.coordinates);
      });

  m.def(
      "short_vector",
      [](const py::object& lattice, const std::string& algorithm, std::uint64_t seed,
         std::optional<std::size_t> trials) {
        const auto alg = make_algorithm(algorithm, seed, trials);
        return vfk::short_vector(gram_of(lattice), alg, lattice_from_py(lattice).superbase);
      },
      py::arg("lattice"), py::arg("algorithm") = "stoer-wagner", py::arg("seed") = 0,
      py::arg("trials") = py::none(),
      "Shortest nonzero vector as a subset of superbase indices (0-based).");

  m.def(
      "min_cut",
      [](std::size_t vertex_count, const py::sequence& edges, const std::string& algorithm,
         std::uint64_t seed, std::optional<std::size_t> trials) {
        std::vector<vfk::Edge> es;
        for (const auto& e : edges) {
          auto t = py::reinterpret_borrow<py::sequence>(e);
          if (t.size() != 3) {
            throw vfk::Error(vfk::ErrorCode::InvalidArgument, "edges are (u, v, weight) triples");
          }
          es.push_back({t[0].cast<std::size_t>(), t[1].cast<std::size_t>(), from_py(t[2])});
        }
        const auto gr = vfk::WeightedGraph::from_edges(vertex_count, es);
        vfk::Cut cut;
        if (algorithm == "stoer-wagner") {
          cut = vfk::stoer_wagner(gr);
        } else if (algorithm == "karger") {
          cut = vfk::karger_stein(gr, seed, trials.value_or(vfk::default_karger_trials(vertex_count)));
        } else if (algorithm == "brute") {
          cut = vfk::brute_force_mincut(gr);
        } else {
          make_algorithm(algorithm, seed, trials);  // throws
        }
        return py::make_tuple(cut.side, to_py(cut.weight));
      },
      py::arg("vertex_count"), py::arg("edges"), py::arg("algorithm") = "stoer-wagner",
      py::arg("seed") = 0, py::arg("trials") = py::none(),
      "Global minimum cut of a weighted graph. Returns (side, weight).");

  m.def(
      "quadratic_form",
      [](const py::object& lattice, const std::vector<std::uint8_t>& u) {
        return to_py(vfk::quadratic_form(gram_of(lattice), vfk::BinaryAssignment(u)));
      },
      py::arg("lattice"), py::arg("assignment"));

  m.def(
      "verify_reduction",
      [](const py::object& lattice, const std::vector<std::uint8_t>& u) {
        const auto r = vfk::verify_reduction(gram_of(lattice), vfk::BinaryAssignment(u));
        return py::make_tuple(to_py(r.quadratic_value), to_py(r.cut_value));
      },
      py::arg("lattice"), py::arg("assignment"),
      "Returns (Q(u), cut weight of {i : u_i = 1}).");

  m.def(
      "candidate_vectors",
      [](const py::object& lattice) {
        const Lattice l = lattice_from_py(lattice);
        return l.superbase ? vfk::candidate_vectors(*l.superbase) : vfk::candidate_vectors(*l.gram);
      },
      py::arg("lattice"));

  m.def(
      "generate",
      [](const std::string& family, std::optional<std::size_t> n, std::optional<std::uint64_t> seed,
         py::object density) -> py::object {
        auto fam = vfk::parse_family(family);
        if (!fam) throw vfk::Error(vfk::ErrorCode::InvalidArgument, "unknown family '" + family + "'");
        vfk::InstanceSpec spec;
        spec.family = *fam;
        spec.n = n.value_or(*fam == vfk::Family::PaperExample ? 3 : 1);
        spec.seed = seed;
        if (!density.is_none()) spec.density = from_py(density);
        auto inst = vfk::generate(spec);
        if (inst.superbase) return py::cast(std::move(*inst.superbase));
        return py::cast(std::move(*inst.gram));
      },
      py::arg("family"), py::arg("n") = py::none(), py::arg("seed") = py::none(),
      py::arg("density") = py::none(),
      "Families: an, anstar, zn, paper_example, random_gram (needs seed).");

  m.def(
      "loads",
      [](const std::string& text) -> py::object {
        auto doc = vfk::parse_input(text);
        if (doc.kind == vfk::DocumentKind::Superbase) {
          return py::cast(vfk::validate_superbase(std::move(doc.entries)));
        }
        return py::cast(vfk::validate_gram(std::move(doc.entries)));
      },
      py::arg("text"), "Parses and validates a superbase or gram document.");

  m.def(
      "dumps",
      [](const py::object& lattice, const std::string& comment) {
        const Lattice l = lattice_from_py(lattice);
        return l.superbase ? vfk::format_superbase(*l.superbase, comment)
                           : vfk::format_gram(*l.gram, comment);
      },
      py::arg("lattice"), py::arg("comment") = "");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = vfk::run_cli(args, in, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "",
      "Runs the vfk command line in-process. Returns (exit_code, stdout, stderr).");
}
