#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "koszul/errors.hpp"
#include "koszul/io.hpp"
#include "koszul/stability.hpp"
#include "koszul/stirling.hpp"
#include "koszul/suites.hpp"

namespace py = pybind11;
using namespace koszul;

namespace {

// Partition -> coefficient, with exact rationals as "num/den" strings
py::dict expand(const SymFunc& f, const std::string& basis) {
  py::dict out;
  for (const auto& [p, c] : coefficients(f, parse_basis(basis))) out[py::tuple(py::cast(p))] = to_string(c);
  return out;
}

Kind kind_of(const std::string& s) {
  if (s == "os") return Kind::OS;
  if (s == "vg") return Kind::VG;
  if (s == "os-dual") return Kind::OS_DUAL;
  if (s == "vg-dual") return Kind::VG_DUAL;
  if (s == "digraph") return Kind::DIGRAPH;
  throw InvalidArgument("kind must be os, vg, os-dual, vg-dual or digraph");
}

}  // namespace

PYBIND11_MODULE(koszul, m) {
  m.doc() = "Koszul duals of supersolvable matroid algebras and Stirling representations";

  py::register_exception<Error>(m, "KoszulError");

  py::class_<SymFunc>(m, "SymFunc")
      .def_property_readonly("degree", &SymFunc::degree)
      .def("dim", [](const SymFunc& f) { return to_string(f.dim()); })
      .def("expand", &expand, py::arg("basis") = "s")
      .def("to_json", [](const SymFunc& f, const std::string& b) { return serialize_symfunc(f, parse_basis(b)); },
           py::arg("basis") = "s")
      .def_static("from_json", &parse_symfunc)
      .def_static("schur", [](std::vector<int> p) { return SymFunc::schur(p); })
      .def_static("h", [](std::vector<int> p) { return h_prod(p); })
      .def("schur_positive", [](const SymFunc& f) { return schur_positive(f) && schur_integral(f); })
      .def("h_positive", [](const SymFunc& f) { return h_positive_expansion(f).has_value(); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self == py::self)
      .def("__mul__", [](const SymFunc& a, const SymFunc& b) { return a * b; })
      .def("kronecker", [](const SymFunc& a, const SymFunc& b) { return kronecker(a, b); })
      .def("skew_by_p1", [](const SymFunc& a) { return skew_by_p1(a); })
      .def("__repr__", [](const SymFunc& f) { return "SymFunc(" + f.to_schur_string() + ")"; });

  m.def("os_char", &os_char, py::arg("n"), py::arg("i"));
  m.def("vg_char", &vg_char, py::arg("n"), py::arg("i"));
  m.def("os_dual_char", &os_dual_char, py::arg("n"), py::arg("i"));
  m.def("vg_dual_char", &vg_dual_char, py::arg("n"), py::arg("i"));
  m.def("primitives_os", &primitives_os, py::arg("n"), py::arg("i"));
  m.def("primitives_vg", &primitives_vg, py::arg("n"), py::arg("i"));
  m.def("ranktwo_dual_char", &ranktwo_dual_char, py::arg("n"), py::arg("i"));
  m.def("closed_form", &closed_form, py::arg("name"), py::arg("n"), py::arg("i"));
  m.def("closed_form_names", [] {
    std::vector<std::string> v;
    for (const auto& c : closed_form_library()) v.push_back(c.name);
    return v;
  });
  m.def("mansour_munagi_count", &mansour_munagi_count);

  m.def(
      "hilbert",
      [](const std::string& spec, const std::string& kind, int D) {
        return build_presentation(parse_matroid_spec(spec), kind_of(kind)).hilbert(D);
      },
      py::arg("input"), py::arg("kind") = "os", py::arg("D") = 8);
  m.def(
      "gb_certify",
      [](const std::string& spec, const std::string& kind, int D) {
        return gb_certify(build_presentation(parse_matroid_spec(spec), kind_of(kind)), D);
      },
      py::arg("input"), py::arg("kind"), py::arg("D") = 4);
  m.def(
      "normal_form",
      [](const std::string& spec, const std::string& kind, std::vector<int> word) {
        auto p = build_presentation(parse_matroid_spec(spec), kind_of(kind));
        Word w;
        for (int x : word) w.push_back(static_cast<char>(x - 1));
        py::dict out;
        for (const auto& [u, c] : p.normal_form(Poly{{w, Q(1)}})) {
          std::vector<int> letters;
          for (char ch : u) letters.push_back(ch + 1);
          out[py::tuple(py::cast(letters))] = to_string(c);
        }
        return out;
      },
      py::arg("input"), py::arg("kind"), py::arg("word"));
  m.def("koszul_reciprocity", [](const std::string& spec, int D) {
    auto in = parse_matroid_spec(spec);
    bool dig = in.type == MatroidInput::Type::Digraph;
    return koszul_reciprocity_check(build_presentation(in, dig ? Kind::DIGRAPH : Kind::OS).hilbert(D),
                                    build_presentation(in, Kind::OS_DUAL).hilbert(D), D);
  });

  m.def(
      "stability",
      [](const std::string& kind, int i, int n_max) {
        auto r = verify_bounds(parse_series_kind(kind), i, n_max);
        py::dict d;
        d["onset"] = r.stability.onset ? py::cast(*r.stability.onset) : py::none();
        d["theorem_bound"] = r.theorem_bound ? py::cast(*r.theorem_bound) : py::none();
        d["bound_checked"] = r.bound_checked;
        d["bound_holds"] = r.bound_holds;
        py::list obs;
        for (const auto& o : r.observations) obs.append(py::make_tuple(o.what, o.status));
        d["observations"] = obs;
        return d;
      },
      py::arg("kind"), py::arg("i"), py::arg("n_max"));
  m.def("branching_verify", [](int n, int i, const std::string& kind) {
    return branching_verify(n, i, parse_series_kind(kind));
  });
  m.def(
      "verify",
      [](const std::string& suite, bool quick) {
        auto r = run_suite(suite, quick, std::nullopt, 8);
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& c : r.checks) out.emplace_back(c.name, c.pass, c.detail);
        return out;
      },
      py::arg("suite"), py::arg("quick") = true);
}
