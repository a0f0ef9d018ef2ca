#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mclat/codes.hpp"
#include "mclat/json_io.hpp"
#include "mclat/lattices.hpp"
#include "mclat/matroids.hpp"
#include "mclat/pipeline.hpp"
#include "mclat/statepoly.hpp"

namespace py = pybind11;
using namespace mclat;

namespace pybind11::detail {

// mpz_class <-> python int, through decimal strings
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!isinstance<py::int_>(src)) return false;
    value = mpz_class(py::str(src).cast<std::string>());
    return true;
  }
  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

std::vector<std::pair<ExactPoly::Exps, Int>> poly_terms(const ExactPoly& p) {
  std::vector<std::pair<ExactPoly::Exps, Int>> out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) out.emplace_back(*it);
  return out;
}

}  // namespace

PYBIND11_MODULE(_mclat, m) {
  m.doc() = "exact graph invariants, binary codes and lattice theta series";

  py::register_exception<CapExceeded>(m, "CapExceeded");

  py::class_<ExactPoly>(m, "ExactPoly")
      .def_property_readonly("arity", &ExactPoly::arity)
      .def("terms", &poly_terms, "list of (exponent tuple, coefficient), descending")
      .def("coeff_sum", &ExactPoly::coeff_sum)
      .def("eval", &ExactPoly::eval)
      .def("__eq__", [](const ExactPoly& a, const ExactPoly& b) { return a == b; })
      .def("__str__", [](const ExactPoly& p) { return p.to_string(); })
      .def("__repr__", [](const ExactPoly& p) { return "ExactPoly(" + p.to_string() + ")"; });

  py::class_<QSeries>(m, "QSeries")
      .def_property_readonly("precision_quarters", &QSeries::precision)
      .def("coeffs",
           [](const QSeries& s) {
             std::map<long, Int> out(s.coeffs().begin(), s.coeffs().end());
             return out;
           })
      .def("coeff_at", &QSeries::coeff_at, py::arg("quarters"))
      .def("__eq__", [](const QSeries& a, const QSeries& b) { return a == b; })
      .def("__str__", [](const QSeries& s) { return s.to_string(); })
      .def("__repr__", [](const QSeries& s) { return "QSeries(" + s.to_string() + ")"; });

  py::class_<Multigraph>(m, "Multigraph")
      .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n_vertices"),
           py::arg("edges"))
      .def_property_readonly("num_vertices", &Multigraph::num_vertices)
      .def_property_readonly("num_edges", &Multigraph::num_edges)
      .def("edges", &Multigraph::edges)
      .def("degrees", &Multigraph::degrees)
      .def("relabeled", &Multigraph::relabeled)
      .def("to_text", &Multigraph::to_text)
      .def("__eq__", [](const Multigraph& a, const Multigraph& b) { return a == b; })
      .def("__repr__", [](const Multigraph& g) {
        return "Multigraph(" + std::to_string(g.num_vertices()) + " vertices, " +
               std::to_string(g.num_edges()) + " edges)";
      });

  m.def("parse_graph", [](const std::string& text) {
    ParsedGraph pg = parse_graph_text(text);
    return py::make_tuple(pg.graph, pg.marked);
  });
  m.def("path_graph", &path_graph, py::arg("n_edges"));
  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("join", &join);
  m.def("subdivide_edge", &subdivide_edge, py::arg("g"), py::arg("edge"), py::arg("times"));
  m.def("disjoint_union", &Multigraph::disjoint_union);
  m.def("is_isomorphic", &is_isomorphic, py::arg("g1"), py::arg("g2"), py::arg("cap") = 10);
  m.def("automorphism_count", &automorphism_count, py::arg("g"), py::arg("cap") = 10);

  py::class_<WeightMatrix>(m, "WeightMatrix")
      .def_property_readonly("states", &WeightMatrix::states)
      .def("prime", &WeightMatrix::prime, py::arg("i"), py::arg("j"))
      .def("__str__", &WeightMatrix::to_string);

  m.def("a_index", &a_index, py::arg("i"), py::arg("j"));
  m.def(
      "nth_prime", [](const Int& ell) { return nth_prime(ell); }, py::arg("ell"));
  m.def("paper_weight_matrix", [](int n) { return paper_weight_matrix(n); }, py::arg("n"));
  m.def(
      "admissible_matrix",
      [](long m_, int n) {
        auto [w, cert] = admissible_matrix(m_, n);
        return py::make_tuple(w, cert.ok);
      },
      py::arg("m"), py::arg("n"));

  py::class_<SymbolicStatePoly>(m, "SymbolicStatePoly")
      .def_readonly("n", &SymbolicStatePoly::n)
      .def_readonly("poly", &SymbolicStatePoly::poly);
  py::class_<PseudoStatePoly>(m, "PseudoStatePoly")
      .def_readonly("matrix", &PseudoStatePoly::matrix)
      .def_readonly("poly", &PseudoStatePoly::poly);

  m.def(
      "z_state_symbolic", [](const Multigraph& g, int n) { return z_state_symbolic(g, n); },
      py::arg("g"), py::arg("n"));
  m.def(
      "z_state_weighted",
      [](const Multigraph& g, const WeightMatrix& w) { return z_state_weighted(g, w); },
      py::arg("g"), py::arg("w"));
  m.def("edge_count_w1", &edge_count_w1);
  m.def("reconstruct_pseudo",
        py::overload_cast<const PseudoStatePoly&>(&reconstruct_pseudo));
  m.def("reconstruct_pseudo",
        py::overload_cast<const ExactPoly&, const WeightMatrix&>(&reconstruct_pseudo));
  m.def("reconstruct_symbolic", &reconstruct_symbolic);
  m.def("negami_specialize", &negami_specialize);

  py::class_<Matroid>(m, "Matroid")
      .def_static("graphic", &Matroid::graphic)
      .def_static("vector_f2",
                  [](const std::string& text) {
                    return Matroid::vector_f2(F2Matrix::parse(text));
                  })
      .def_property_readonly("ground_size", &Matroid::ground_size)
      .def("full_rank", &Matroid::full_rank)
      .def("rank", &Matroid::rank, py::arg("subset_mask"));
  m.def("incidence_matroid", &incidence_matroid);
  m.def("tutte_subset_expansion", &tutte_subset_expansion, py::arg("m"), py::arg("cap") = 24);
  m.def("tutte_deletion_contraction", &tutte_deletion_contraction);

  py::class_<BinaryCode>(m, "BinaryCode")
      .def_static("from_text",
                  [](const std::string& text) {
                    return BinaryCode::from_generator(F2Matrix::parse(text));
                  })
      .def_static("zero_code", &BinaryCode::zero_code)
      .def_static("direct_sum", &BinaryCode::direct_sum)
      .def_property_readonly("length", &BinaryCode::length)
      .def_property_readonly("dim", &BinaryCode::dim)
      .def("generator_text", [](const BinaryCode& c) { return c.generator().to_text(); })
      .def("dual", &BinaryCode::dual)
      .def("is_self_dual", &BinaryCode::is_self_dual)
      .def("is_doubly_even", &BinaryCode::is_doubly_even)
      .def("replicate4", &BinaryCode::replicate4)
      .def("__eq__", [](const BinaryCode& a, const BinaryCode& b) { return a == b; })
      .def("__repr__", [](const BinaryCode& c) {
        return "BinaryCode([" + std::to_string(c.length()) + "," + std::to_string(c.dim()) +
               "])";
      });

  m.def("code_from_matroid", &code_from_matroid);
  m.def("weight_enumerator_enum", &weight_enumerator_enum, py::arg("c"), py::arg("cap") = 24);
  m.def("weight_enumerator_greene", &weight_enumerator_greene, py::arg("m"),
        py::arg("cap") = 24);
  m.def("p8_polynomial", &p8_polynomial);
  m.def("p24_polynomial", &p24_polynomial);

  m.def("theta2", &theta2, py::arg("precision_quarters"));
  m.def("theta3", &theta3, py::arg("precision_quarters"));
  m.def("eisenstein_e4", &eisenstein_e4, py::arg("precision_quarters"));
  m.def("eisenstein_e6", &eisenstein_e6, py::arg("precision_quarters"));
  m.def("delta_series", &delta_series, py::arg("precision_quarters"));
  m.def("theta_from_code", &theta_from_code, py::arg("c"), py::arg("precision_quarters"),
        py::arg("cap_dim") = 24);
  m.def("theta_direct", &theta_direct, py::arg("c"), py::arg("precision_quarters"),
        py::arg("max_length") = 12);
  m.def("gram_determinant_str",
        [](const BinaryCode& c) { return gram_determinant(c).get_str(); });

  m.def("representable_d", &representable_d, py::arg("d"));
  m.def(
      "bpr_family",
      [](const Multigraph& g1, const std::vector<std::pair<int, int>>& marked1,
         const Multigraph& g2, const std::vector<std::pair<int, int>>& marked2, int m_,
         int n) {
        return bpr_family(ParsedGraph{g1, marked1}, ParsedGraph{g2, marked2}, m_, n);
      },
      py::arg("g1"), py::arg("marked1"), py::arg("g2"), py::arg("marked2"), py::arg("m"),
      py::arg("n"));
  m.def(
      "run_pipeline_json",
      [](const Multigraph& g1, const Multigraph& g2, long prec, int iso_cap) {
        PipelineOptions opts;
        opts.theta_precision_quarters = prec;
        opts.iso_cap = iso_cap;
        return report_to_json(run_pipeline(g1, g2, opts)).dump();
      },
      py::arg("g1"), py::arg("g2"), py::arg("precision_quarters") = 40,
      py::arg("iso_cap") = 10);
  m.def(
      "search_tequivalent",
      [](int max_v, int max_e, bool allow_parallel) {
        return search_tequivalent(max_v, max_e, {allow_parallel});
      },
      py::arg("max_vertices"), py::arg("max_edges"), py::arg("allow_parallel") = false);
}
