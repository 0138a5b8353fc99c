#include "koszul/suites.hpp"

#include "koszul/equivariant.hpp"
#include "koszul/errors.hpp"
#include "koszul/stability.hpp"
#include "koszul/stirling.hpp"

namespace koszul {

namespace {

std::string list(const std::vector<long long>& v) {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

MatroidInput braid_in(int n) { return parse_matroid("{\"braid\":{\"n\":" + std::to_string(n) + "}}"); }
MatroidInput uniform_in(int r, int n) {
  return parse_matroid("{\"uniform\":{\"r\":" + std::to_string(r) + ",\"n\":" + std::to_string(n) + "}}");
}

template <class F>
CheckResult guarded(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return {name, false, std::string("error: ") + e.what()};
  }
}

}  // namespace

std::vector<std::pair<std::string, MatroidInput>> default_inputs(bool quick) {
  std::vector<std::pair<std::string, MatroidInput>> v;
  for (int n = 3; n <= (quick ? 5 : 6); ++n) v.push_back({"braid:" + std::to_string(n), braid_in(n)});
  for (int n = 3; n <= (quick ? 6 : 8); ++n) v.push_back({"uniform:2," + std::to_string(n), uniform_in(2, n)});
  for (int n = 1; n <= (quick ? 4 : 6); ++n) v.push_back({"boolean:" + std::to_string(n), uniform_in(n, n)});
  return v;
}

SuiteReport suite_reciprocity(const std::vector<std::pair<std::string, MatroidInput>>& inputs, int D) {
  SuiteReport r{"reciprocity", {}};
  for (const auto& [name, in] : inputs)
    r.checks.push_back(guarded(name, [&, name = name, in = in] {
      std::vector<long long> a, b;
      if (in.type == MatroidInput::Type::Digraph) {
        a = build_presentation(in, Kind::DIGRAPH).hilbert(D);
        b = build_presentation(in, Kind::OS_DUAL).hilbert(D);
      } else {
        a = build_presentation(in, Kind::OS).hilbert(D);
        b = build_presentation(in, Kind::OS_DUAL).hilbert(D);
      }
      bool ok = koszul_reciprocity_check(a, b, D);
      if (is_oriented(in) && in.type != MatroidInput::Type::Digraph) {
        auto va = build_presentation(in, Kind::VG).hilbert(D);
        auto vb = build_presentation(in, Kind::VG_DUAL).hilbert(D);
        ok = ok && va == a && vb == b && koszul_reciprocity_check(va, vb, D);
      }
      return CheckResult{name, ok, "A: " + list(a) + "  A!: " + list(b)};
    }));
  return r;
}

SuiteReport suite_gb(const std::vector<std::pair<std::string, MatroidInput>>& inputs, int D) {
  SuiteReport r{"gb", {}};
  for (const auto& [name, in] : inputs) {
    std::vector<Kind> kinds = {Kind::OS, Kind::OS_DUAL};
    if (in.type == MatroidInput::Type::Digraph) kinds = {Kind::DIGRAPH, Kind::OS_DUAL};
    else if (is_oriented(in)) kinds = {Kind::OS, Kind::VG, Kind::OS_DUAL, Kind::VG_DUAL};
    for (Kind k : kinds) {
      std::string label = name + " " + kind_name(k);
      r.checks.push_back(guarded(label, [&] {
        auto p = build_presentation(in, k);
        bool ok = gb_certify(p, D);
        return CheckResult{label, ok, ok ? "certified through degree " + std::to_string(D) : "standard count differs"};
      }));
    }
  }
  return r;
}

SuiteReport suite_branching(int n_max, int i_max) {
  SuiteReport r{"branching", {}};
  for (auto k : {SeriesKind::OS, SeriesKind::VG, SeriesKind::OS_DUAL, SeriesKind::VG_DUAL})
    for (int n = 3; n <= n_max; ++n)
      for (int i = 0; i <= i_max; ++i) {
        std::string label = to_string(k) + " n=" + std::to_string(n) + " i=" + std::to_string(i);
        r.checks.push_back(guarded(label, [&] {
          bool a = branching_verify(n, i, k), b = branching_dimension_shadow(n, i, k);
          return CheckResult{label, a && b, a ? (b ? "" : "dimension shadow differs") : "character identity fails"};
        }));
      }
  return r;
}

SuiteReport suite_exactness(int n_max) {
  SuiteReport r{"exactness", {}};
  for (int n = 2; n <= n_max; ++n) {
    std::string label = "OS(Br_" + std::to_string(n) + ") with all-ones coefficients";
    r.checks.push_back(guarded(label, [&] {
      auto os = build_presentation(braid_in(n), Kind::OS);
      std::vector<Q> c(os.num_vars(), Q(1));
      auto rep = os_complex_exactness(os, c);
      bool nonneg = true;
      for (auto x : rep.h) nonneg = nonneg && x >= 0;
      return CheckResult{label, rep.exact && rep.squares_to_zero && nonneg, "H(t): " + list(rep.h)};
    }));
  }
  return r;
}

SuiteReport suite_injectivity(int n_max, int D) {
  SuiteReport r{"injectivity", {}};
  for (int n = 2; n <= n_max; ++n)
    for (Kind k : {Kind::OS_DUAL, Kind::VG_DUAL}) {
      int d = k == Kind::OS_DUAL ? 1 : 2;
      std::string label = std::string(k == Kind::OS_DUAL ? "OS" : "VG") + "(Br_" + std::to_string(n) +
                          ")^! right multiplication by p_" + std::to_string(d);
      r.checks.push_back(guarded(label, [&] {
        auto p = build_presentation(braid_in(n), k);
        std::vector<Q> c(p.num_vars(), Q(1));
        auto rep = dual_right_mult_injective(p, d, c, D);
        bool nonneg = true;
        for (auto x : rep.cokernel) nonneg = nonneg && x >= 0;
        return CheckResult{label, rep.injective && nonneg, "H!(t): " + list(rep.cokernel)};
      }));
    }
  return r;
}

SuiteReport suite_closed_forms(int n_max, int i_max) {
  SuiteReport r{"appendix-closed-forms", {}};
  for (const auto& cf : closed_form_library()) {
    r.checks.push_back(guarded(cf.name, [&] {
      int tried = 0;
      for (int n = 1; n <= n_max; ++n)
        for (int i = 0; i <= i_max; ++i) {
          if (!cf.in_range(n, i)) continue;
          bool os = cf.name.rfind("os", 0) == 0;
          SymFunc ref;
          if (cf.name.find("restriction") != std::string::npos) ref = skew_by_p1(os_dual_char(n, i));
          else if (cf.name == "os_dual_n5_step") ref = os_dual_char(5, i + 4) - os_dual_char(5, i);
          else ref = os ? os_dual_char(n, i) : vg_dual_char(n, i);
          ++tried;
          if (cf.eval(n, i) != ref)
            return CheckResult{cf.name, false, "differs at n=" + std::to_string(n) + " i=" + std::to_string(i)};
        }
      return CheckResult{cf.name, tried > 0, std::to_string(tried) + " cells"};
    }));
  }
  return r;
}

SuiteReport suite_pbw(int n_max, int i_max) {
  SuiteReport r{"pbw", {}};
  for (int n = 2; n <= n_max; ++n)
    for (bool os : {true, false}) {
      std::string label = std::string(os ? "OS" : "VG") + " n=" + std::to_string(n);
      r.checks.push_back(guarded(label, [&] {
        GradedCharacterSeries s;
        s.n = n;
        for (int d = 0; d <= i_max; ++d) s.terms.push_back(os ? os_dual_char(n, d) : vg_dual_char(n, d));
        PbwMode mode = os ? PbwMode::OS : PbwMode::VG;
        auto prims = primitives(s, mode, i_max);
        for (int d = 0; d <= i_max; ++d)
          if (pbw_reconstruct(prims, mode, d) != s.at(d))
            return CheckResult{label, false, "round trip fails in degree " + std::to_string(d)};
        for (const auto& l : prims)
          if (!schur_positive(l) || !schur_integral(l)) return CheckResult{label, false, "primitive not genuine"};
        return CheckResult{label, true, ""};
      }));
    }
  return r;
}

SuiteReport suite_oracle(int n_max) {
  SuiteReport r{"oracle", {}};
  for (int n = 2; n <= n_max; ++n)
    for (Kind k : {Kind::OS, Kind::VG}) {
      std::string label = std::string(k == Kind::OS ? "OS" : "VG") + "(Br_" + std::to_string(n) + ")";
      r.checks.push_back(guarded(label, [&] {
        auto p = build_presentation(braid_in(n), k);
        for (int d = 0; d <= n - 1; ++d) {
          SymFunc trace = frobenius(character(p, d, Lift::VertexToEdge), n);
          SymFunc pleth = k == Kind::OS ? os_char(n, d) : vg_char(n, d);
          if (trace != pleth) return CheckResult{label, false, "differs in degree " + std::to_string(d)};
        }
        return CheckResult{label, true, "degrees 0.." + std::to_string(n - 1)};
      }));
    }
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"reciprocity",           "gb",  "branching", "exactness", "injectivity",
                                                 "appendix-closed-forms", "pbw", "oracle"};
  return names;
}

SuiteReport run_suite(const std::string& name, bool quick, std::optional<MatroidInput> input, int D) {
  auto inputs = input ? std::vector<std::pair<std::string, MatroidInput>>{{"input", *input}} : default_inputs(quick);
  if (name == "reciprocity") return suite_reciprocity(inputs, D);
  if (name == "gb") {
    if (!input) {
      inputs.clear();
      for (int n = 3; n <= 5; ++n) inputs.push_back({"braid:" + std::to_string(n), braid_in(n)});
      for (int n = 3; n <= (quick ? 5 : 7); ++n) inputs.push_back({"uniform:2," + std::to_string(n), uniform_in(2, n)});
    }
    return suite_gb(inputs, std::min(D, quick ? 4 : 5));
  }
  if (name == "branching") return suite_branching(quick ? 6 : 8, quick ? 3 : 4);
  if (name == "exactness") return suite_exactness(5);
  if (name == "injectivity") return suite_injectivity(quick ? 4 : 5, std::min(D, 6));
  if (name == "appendix-closed-forms") return suite_closed_forms(quick ? 6 : 7, 6);
  if (name == "pbw") return suite_pbw(quick ? 5 : 6, quick ? 4 : 5);
  if (name == "oracle") return suite_oracle(quick ? 5 : 6);
  throw InvalidArgument("unknown suite " + name);
}

}  // namespace koszul
