#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cbasis/blocks.hpp"
#include "cbasis/canonical.hpp"
#include "cbasis/crystal.hpp"
#include "cbasis/json_io.hpp"

namespace py = pybind11;
using namespace cbasis;

namespace {

Space space_of(const std::optional<std::string>& sigma, std::size_t n) {
  if (!sigma) return Space::c();
  SignVector s = parse_signs(*sigma);
  if (s.size() != n) throw std::invalid_argument("sigma length differs from the tuple length");
  return Space::a(std::move(s));
}

GenKind kind_of(const std::string& op) {
  if (op == "f") return GenKind::f;
  if (op == "e") return GenKind::e;
  throw std::invalid_argument("op must be 'f' or 'e'");
}

}  // namespace

PYBIND11_MODULE(_cbasis, m) {
  m.doc() = "Canonical bases of minuscule tensor spaces";

  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_AssertionError);

  py::class_<LaurentPoly>(m, "LaurentPoly")
      .def(py::init([](const std::string& text) { return parse_laurent(text); }), py::arg("text") = "0")
      .def("terms",
           [](const LaurentPoly& p) {
             std::vector<std::pair<int, py::int_>> out;
             for (const auto& [e, c] : p.terms()) out.emplace_back(e, py::int_(py::str(c.str())));
             return out;
           })
      .def("bar", &LaurentPoly::bar)
      .def("classify", [](const LaurentPoly& p) { return std::string(to_string(classify(p))); })
      .def("at_one", [](const LaurentPoly& p) { return py::int_(py::str(p.eval_at_one().str())); })
      .def("__add__", [](const LaurentPoly& a, const LaurentPoly& b) { return a + b; })
      .def("__sub__", [](const LaurentPoly& a, const LaurentPoly& b) { return a - b; })
      .def("__mul__", [](const LaurentPoly& a, const LaurentPoly& b) { return a * b; })
      .def("__eq__", [](const LaurentPoly& a, const LaurentPoly& b) { return a == b; })
      .def("__str__", &LaurentPoly::to_string)
      .def("__repr__", [](const LaurentPoly& p) { return "LaurentPoly('" + p.to_string() + "')"; });

  py::class_<TensorVec>(m, "TensorVec")
      .def_property_readonly("n", &TensorVec::n)
      .def_property_readonly("sigma",
                             [](const TensorVec& v) -> std::optional<std::string> {
                               if (v.space().is_c()) return std::nullopt;
                               return to_string(v.space().sigma);
                             })
      .def("coefficient", &TensorVec::coefficient, py::arg("b"))
      .def("terms",
           [](const TensorVec& v) {
             std::vector<std::pair<Tuple, LaurentPoly>> out(v.terms().begin(), v.terms().end());
             return out;
           })
      .def("at_one", &TensorVec::specialize_at_one)
      .def("to_json", [](const TensorVec& v) { return to_json(v).dump(); })
      .def("__len__", &TensorVec::size)
      .def("__eq__", [](const TensorVec& a, const TensorVec& b) { return a == b; })
      .def("__str__", &TensorVec::to_string)
      .def("__repr__", [](const TensorVec& v) { return "TensorVec('" + v.to_string() + "')"; });

  py::class_<CanonicalBasis>(m, "CanonicalBasis")
      .def(py::init([](std::size_t support_guard, std::size_t depth_guard) {
             return std::make_unique<CanonicalBasis>(Limits{support_guard, depth_guard});
           }),
           py::arg("support_guard") = Limits{}.support_guard, py::arg("depth_guard") = Limits{}.depth_guard)
      .def(
          "canonical",
          [](CanonicalBasis& cb, const Tuple& b, const std::optional<std::string>& sigma) {
            return cb.canonical(b, space_of(sigma, b.size())).vector;
          },
          py::arg("b"), py::arg("sigma") = py::none(), py::call_guard<py::gil_scoped_release>())
      .def(
          "rough",
          [](CanonicalBasis& cb, const Tuple& b, const std::optional<std::string>& sigma) {
            return cb.rough_invariant(b, space_of(sigma, b.size()));
          },
          py::arg("b"), py::arg("sigma") = py::none(), py::call_guard<py::gil_scoped_release>())
      .def("express_in_rough", &CanonicalBasis::express_in_rough, py::arg("v"))
      .def("certify_bar_invariant", &CanonicalBasis::certify_bar_invariant, py::arg("v"))
      .def("verify_ckw", &CanonicalBasis::verify_ckw, py::arg("b"), py::call_guard<py::gil_scoped_release>())
      .def("memo_size", &CanonicalBasis::memo_size);

  m.def(
      "bruhat_leq",
      [](const Tuple& a, const Tuple& b, const std::optional<std::string>& sigma) {
        return bruhat_leq(a, b, space_of(sigma, b.size()));
      },
      py::arg("a"), py::arg("b"), py::arg("sigma") = py::none());
  m.def(
      "bruhat_relation",
      [](const Tuple& a, const Tuple& b, const std::optional<std::string>& sigma) {
        return std::string(to_string(bruhat_compare(a, b, space_of(sigma, b.size())).relation));
      },
      py::arg("a"), py::arg("b"), py::arg("sigma") = py::none());
  m.def("prime_map", &prime_map, py::arg("b"));
  m.def("is_typical", &is_typical, py::arg("b"));
  m.def("is_antidominant", &is_antidominant, py::arg("b"));

  m.def(
      "construct_dominant",
      [](const Tuple& b) {
        DominantConstruction d = construct_dominant(b);
        return std::make_pair(d.a, d.word);
      },
      py::arg("b"));

  m.def(
      "crystal",
      [](const std::string& op, int i, const Tuple& b, const std::optional<std::string>& sigma) {
        return crystal_op(b, i, kind_of(op), space_of(sigma, b.size()));
      },
      py::arg("op"), py::arg("i"), py::arg("b"), py::arg("sigma") = py::none());
  m.def(
      "connect_to_z", [](const Tuple& b) { return to_string(connect_to_z(b).word); }, py::arg("b"));

  m.def(
      "weight_diagram", [](const Tuple& b) { return weight_diagram(b).render(); }, py::arg("b"));
  m.def(
      "block_stats",
      [](const Tuple& b) {
        const BlockStats s = block_stats(b);
        return std::make_tuple(s.n0, s.n1, s.atypicality);
      },
      py::arg("b"));

  m.def(
      "negativity_scan",
      [](const std::vector<Tuple>& tuples, unsigned threads) {
        ScanBudget budget;
        budget.threads = threads;
        const ScanReport r = negativity_scan(tuples, budget);
        std::vector<std::tuple<Tuple, Tuple, LaurentPoly>> hits;
        for (const auto& h : r.hits) hits.emplace_back(h.b, h.a, h.d);
        return hits;
      },
      py::arg("tuples"), py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
}
