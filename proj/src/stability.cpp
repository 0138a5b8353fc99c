#include "koszul/stability.hpp"

#include <algorithm>

#include "koszul/errors.hpp"
#include "koszul/stirling.hpp"

namespace koszul {

Multiset unpad(const SymFunc& f) {
  Multiset m;
  for (const auto& [lam, c] : f.to_schur()) m[Partition(lam.begin() + 1, lam.end())] += c;
  return m;
}

StabilityReport stable_form(const std::map<int, SymFunc>& seq, int i) {
  if (seq.size() < 3) throw InsufficientRange("need at least 3 values of n, got " + std::to_string(seq.size()));
  StabilityReport r;
  r.i = i;
  r.n_min = seq.begin()->first;
  r.n_max = seq.rbegin()->first;
  if (r.n_max - r.n_min + 1 != static_cast<int>(seq.size())) throw InvalidArgument("n-range is not contiguous");
  for (const auto& [n, f] : seq) {
    if (f.degree() != n && !f.is_zero()) throw DegreeMismatch("term at n=" + std::to_string(n) + " has wrong degree");
    r.per_n[n] = unpad(f);
  }
  const Multiset& top = r.per_n.at(r.n_max);
  if (r.per_n.at(r.n_max - 1) != top || r.per_n.at(r.n_max - 2) != top) return r;
  r.stable = top;
  int onset = r.n_max;
  while (onset - 1 >= r.n_min && r.per_n.at(onset - 1) == top) --onset;
  r.onset = onset;
  r.range_limited = onset == r.n_min;
  return r;
}

int induced_onset(const std::vector<Partition>& mus) {
  int best = 0;
  for (const auto& mu : mus) best = std::max(best, size(mu) + (mu.empty() ? 0 : mu[0]));
  return best;
}

std::string to_string(SeriesKind k) {
  switch (k) {
    case SeriesKind::OS: return "os";
    case SeriesKind::VG: return "vg";
    case SeriesKind::OS_DUAL: return "os-dual";
    case SeriesKind::VG_DUAL: return "vg-dual";
    case SeriesKind::PRIM_OS: return "prim-os";
    case SeriesKind::PRIM_VG: return "prim-vg";
    case SeriesKind::RANKTWO_DUAL: return "ranktwo-dual";
    case SeriesKind::RANKTWO_PRIM: return "ranktwo-prim";
  }
  return "?";
}

SeriesKind parse_series_kind(const std::string& s) {
  for (auto k : {SeriesKind::OS, SeriesKind::VG, SeriesKind::OS_DUAL, SeriesKind::VG_DUAL, SeriesKind::PRIM_OS,
                 SeriesKind::PRIM_VG, SeriesKind::RANKTWO_DUAL, SeriesKind::RANKTWO_PRIM})
    if (to_string(k) == s) return k;
  throw InvalidArgument("unknown series kind " + s);
}

namespace {

SymFunc ranktwo_primitive(int n, int i) {
  GradedCharacterSeries s;
  s.n = n;
  for (int d = 0; d <= i; ++d) s.terms.push_back(ranktwo_dual_char(n, d));
  return primitives(s, PbwMode::OS, i)[i - 1];
}

}  // namespace

SymFunc series_term(SeriesKind k, int n, int i) {
  switch (k) {
    case SeriesKind::OS: return os_char(n, i);
    case SeriesKind::VG: return vg_char(n, i);
    case SeriesKind::OS_DUAL: return os_dual_char(n, i);
    case SeriesKind::VG_DUAL: return vg_dual_char(n, i);
    case SeriesKind::PRIM_OS: return primitives_os(n, i);
    case SeriesKind::PRIM_VG: return primitives_vg(n, i);
    case SeriesKind::RANKTWO_DUAL: return ranktwo_dual_char(n, i);
    case SeriesKind::RANKTWO_PRIM: return ranktwo_primitive(n, i);
  }
  throw InvalidArgument("bad series kind");
}

BoundsReport verify_bounds(SeriesKind kind, int i, int n_max) {
  bool prim = kind == SeriesKind::PRIM_OS || kind == SeriesKind::PRIM_VG || kind == SeriesKind::RANKTWO_PRIM;
  if (i < (prim ? 1 : 0)) throw InvalidArgument(prim ? "primitives start at i = 1" : "negative degree");
  BoundsReport rep;
  rep.kind = kind;
  rep.i = i;
  rep.n_max = n_max;
  std::map<int, SymFunc> seq;
  for (int n = 2; n <= n_max; ++n) seq[n] = series_term(kind, n, i);
  rep.stability = stable_form(seq, i);

  switch (kind) {
    case SeriesKind::OS: rep.theorem_bound = 3 * i + 1; break;
    case SeriesKind::VG: rep.theorem_bound = 3 * i; break;
    case SeriesKind::OS_DUAL:
      rep.theorem_bound = 4 * i;
      if (i >= 1) rep.conjectured_onset = 4 * i;
      break;
    case SeriesKind::VG_DUAL:
      rep.theorem_bound = 3 * i;
      if (i >= 1) rep.conjectured_onset = 3 * i;
      break;
    case SeriesKind::PRIM_OS: rep.conjectured_onset = 2 * i; break;
    case SeriesKind::PRIM_VG:
      if (i >= 3) rep.conjectured_onset = 2 * i;
      break;
    case SeriesKind::RANKTWO_DUAL: {
      // sum of phi_{(n-d,1^d)} = Ind(kS_d x 1) for d <= i, with phi_{(n-i,1^i)} present
      std::vector<Partition> mus;
      for (int d = 0; d <= i; ++d)
        for (const auto& mu : partitions(d)) mus.push_back(mu);
      rep.theorem_bound = induced_onset(mus);
      break;
    }
    case SeriesKind::RANKTWO_PRIM: break;
  }

  auto& st = rep.stability;
  if (rep.theorem_bound) {
    int b = *rep.theorem_bound;
    st.claimed_bound = b;
    rep.bound_checked = n_max >= b + 2;
    if (rep.bound_checked) {
      // nothing below n_min is examined, so a bound under it is met from n_min on
      rep.bound_holds = st.onset && *st.onset <= std::max(b, st.n_min);
      st.bound_ok = rep.bound_holds;
    }
    if (kind == SeriesKind::RANKTWO_DUAL && rep.bound_checked) {
      // exact onset, so the value just below must differ
      rep.bound_holds = rep.bound_holds && *st.onset == b;
      st.exact = true;
    }
  }

  auto observe = [&](const std::string& what, int claimed, bool exact_onset) {
    Observation o;
    o.what = what;
    if (n_max < claimed + 2) {
      o.status = "inconclusive";
      o.detail = "n_max=" + std::to_string(n_max) + " leaves fewer than 3 values past " + std::to_string(claimed);
    } else if (!st.onset) {
      o.status = "fail";
      o.detail = "no stable tail observed";
    } else {
      bool good = exact_onset ? *st.onset == claimed : *st.onset <= claimed;
      o.status = good ? "pass" : "fail";
      o.detail = "observed onset " + std::to_string(*st.onset);
    }
    rep.observations.push_back(o);
  };
  if (rep.conjectured_onset)
    observe(to_string(kind) + " onset is exactly " + std::to_string(*rep.conjectured_onset) + " at i=" +
                std::to_string(i),
            *rep.conjectured_onset, true);
  if (kind == SeriesKind::RANKTWO_PRIM && i >= 3)
    observe("ranktwo-prim stable past " + std::to_string(2 * i - 1) + " at i=" + std::to_string(i), 2 * i - 1,
            false);
  return rep;
}

namespace {

bool is_primal(SeriesKind k) { return k == SeriesKind::OS || k == SeriesKind::VG; }
bool is_dual(SeriesKind k) { return k == SeriesKind::OS_DUAL || k == SeriesKind::VG_DUAL; }

SymFunc chi_def(int m) { return h_prod({m - 1, 1}); }

Q c1(int n, int k) { return n < 0 || k < 0 ? Q(0) : Q(stirling_first(n, k)); }
Q s2(int n, int k) { return n < 0 || k < 0 ? Q(0) : Q(stirling_second(n, k)); }

}  // namespace

bool branching_verify(int n, int i, SeriesKind kind) {
  if (n < 3) throw InvalidArgument("branching needs n >= 3");
  if (!is_primal(kind) && !is_dual(kind)) throw InvalidArgument("branching is stated for OS, VG and their duals");
  SymFunc chi = chi_def(n - 1);
  SymFunc lhs = skew_by_p1(series_term(kind, n, i));
  SymFunc rhs = series_term(kind, n - 1, i);
  if (i >= 1) {
    SymFunc prev = is_primal(kind) ? series_term(kind, n - 1, i - 1) : skew_by_p1(series_term(kind, n, i - 1));
    rhs += kronecker(chi, prev);
  }
  return lhs == rhs;
}

bool branching_dimension_shadow(int n, int i, SeriesKind kind) {
  if (n < 3) throw InvalidArgument("branching needs n >= 3");
  auto dim = [&](int m, int d) { return series_term(kind, m, d).dim(); };
  if (is_primal(kind)) {
    int k = n - i;
    Q c_nk = c1(n, k), c_a = c1(n - 1, k), c_b = c1(n - 1, k - 1);
    if (c_nk != (n - 1) * c_a + c_b) return false;
    return dim(n, i) == c_nk && (i < 1 || dim(n - 1, i - 1) == c_a) && dim(n - 1, i) == c_b;
  }
  if (is_dual(kind)) {
    // S(N,k) with N = n - 1 + i, k = n - 1
    int N = n - 1 + i, k = n - 1;
    Q s = s2(N, k), s_a = s2(N - 1, k), s_b = s2(N - 1, k - 1);
    if (s != k * s_a + s_b) return false;
    return dim(n, i) == s && (i < 1 || dim(n, i - 1) == s_a) && dim(n - 1, i) == s_b;
  }
  throw InvalidArgument("branching is stated for OS, VG and their duals");
}

BranchingEquivalence general_branching_equivalence(const GradedCharacterSeries& a, const GradedCharacterSeries& b,
                                                   const SymFunc& x, int i) {
  if (b.n != a.n - 1 || x.degree() != a.n - 1)
    throw DegreeMismatch("B and X must live in degree " + std::to_string(a.n - 1));
  BranchingEquivalence r;
  r.primal = true;
  for (int d = 0; d <= i; ++d) {
    SymFunc rhs = b.at(d);
    if (d >= 1) rhs += kronecker(x, b.at(d - 1));
    if (skew_by_p1(a.at(d)) != rhs) r.primal = false;
  }
  GradedCharacterSeries ad = dual_series_from_primal(a, i), bd = dual_series_from_primal(b, i);
  r.dual = true;
  for (int d = 0; d <= i; ++d) {
    SymFunc rhs = bd.at(d);
    if (d >= 1) rhs += kronecker(x, skew_by_p1(ad.at(d - 1)));
    if (skew_by_p1(ad.at(d)) != rhs) r.dual = false;
  }
  return r;
}

}  // namespace koszul
