#include "koszul/equivariant.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "koszul/errors.hpp"

namespace koszul {

Perm class_representative(const Partition& mu) {
  Perm g(size(mu));
  int start = 0;
  for (int len : mu) {
    for (int k = 0; k < len; ++k) g[start + k] = start + (k + 1) % len;
    start += len;
  }
  return g;
}

Partition cycle_type(const Perm& g) {
  std::vector<bool> seen(g.size(), false);
  Partition t;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = g[j]) {
      seen[j] = true;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.begin(), t.end(), std::greater<int>());
  return t;
}

int acting_degree(const Presentation& p, Lift lift) {
  if (lift == Lift::VertexToEdge) {
    if (!p.graph()) throw InvalidArgument("presentation was not built from a graph");
    return p.graph()->vertices;
  }
  return p.num_vars();
}

namespace {

bool vg_like(Kind k) { return k == Kind::VG || k == Kind::VG_DUAL; }

void check_automorphism(const Presentation& p, const SignedPermutation& g) {
  bool ok;
  if (p.kind() == Kind::DIGRAPH) {
    std::set<Word> rel;
    for (const auto& r : p.relations()) rel.insert(r.initial);
    ok = true;
    for (const auto& w : rel) {
      auto l = letters(w);
      if (!rel.count(make_word({g.target[l[0]], g.target[l[1]]}))) ok = false;
    }
  } else if (vg_like(p.kind())) {
    ok = is_automorphism(*p.oriented(), g);
  } else {
    for (int s : g.sign)
      if (s != 1) throw NotAutomorphism("signed action on an unsigned presentation");
    ok = is_automorphism(*p.matroid(), g);
  }
  if (!ok) throw NotAutomorphism("permutation does not preserve the (oriented) matroid");
}

}  // namespace

SignedPermutation variable_action(const Presentation& p, const Perm& sigma, Lift lift) {
  int n = p.num_vars();
  SignedPermutation on_original;
  if (lift == Lift::VertexToEdge) {
    if (!p.graph()) throw InvalidArgument("presentation was not built from a graph");
    on_original = lift_vertex_permutation(*p.graph(), sigma, vg_like(p.kind()));
  } else {
    if (static_cast<int>(sigma.size()) != n) throw InvalidArgument("permutation of the wrong size");
    on_original = SignedPermutation::plain(sigma);
  }
  if (p.original_element().empty()) return on_original;
  std::vector<int> reindex(n);
  for (int v = 0; v < n; ++v) reindex[p.original_element()[v]] = v;
  SignedPermutation g;
  for (int v = 0; v < n; ++v) {
    int e = p.original_element()[v];
    g.target.push_back(reindex[on_original.target[e]]);
    g.sign.push_back(on_original.sign[e]);
  }
  return g;
}

namespace {

Poly image_of(const SignedPermutation& g, const Word& w) {
  Word img;
  int s = 1;
  for (int l : letters(w)) {
    img.push_back(static_cast<char>(g.target[l]));
    s *= g.sign[l];
  }
  return Poly{{img, Q(s)}};
}

}  // namespace

Matrix action_matrix(const Presentation& p, const SignedPermutation& g, int d) {
  check_automorphism(p, g);
  const auto& b = p.basis(d);
  Matrix m;
  m.rows = m.cols = b.size();
  for (const auto& w : b) {
    SparseVec col;
    for (const auto& [u, c] : p.normal_form(image_of(g, w))) col.emplace_back(p.basis_index(d, u), c);
    normalize(col);
    m.columns.push_back(std::move(col));
  }
  return m;
}

Q trace_of(const Presentation& p, const SignedPermutation& g, int d) {
  check_automorphism(p, g);
  Q t = 0;
  for (const auto& w : p.basis(d)) {
    auto nf = p.normal_form(image_of(g, w));
    auto it = nf.find(w);
    if (it != nf.end()) t += it->second;
  }
  return t;
}

ClassFunction character(const Presentation& p, int d, Lift lift) {
  int n = acting_degree(p, lift);
  ClassFunction chi;
  for (const auto& mu : partitions(n)) chi[mu] = trace_of(p, variable_action(p, class_representative(mu), lift), d);
  return chi;
}

SymFunc frobenius(const ClassFunction& chi, int n) { return SymFunc::from_class_function(n, chi); }

GradedCharacterSeries equivariant_series(const Presentation& p, int D, Lift lift) {
  GradedCharacterSeries s;
  s.label = kind_name(p.kind());
  s.n = acting_degree(p, lift);
  for (int d = 0; d <= D; ++d) s.terms.push_back(frobenius(character(p, d, lift), s.n));
  return s;
}

GradedCharacterSeries dual_series_from_primal(const GradedCharacterSeries& primal, int D) {
  GradedCharacterSeries out;
  out.label = primal.label + "!";
  out.n = primal.n;
  out.terms.push_back(SymFunc::h(primal.n));
  for (int d = 1; d <= D; ++d) {
    SymFunc f = SymFunc::zero(primal.n);
    for (int i = 1; i <= d; ++i) {
      SymFunc a = primal.at(i);
      if (a.is_zero()) continue;
      SymFunc t = kronecker(a, out.terms[d - i]);
      if (i % 2) f += t;
      else f -= t;
    }
    out.terms.push_back(f);
  }
  return out;
}

SymFunc dual_character_recurrence(const GradedCharacterSeries& primal, int d) {
  return dual_series_from_primal(primal, d).terms[d];
}

SymFunc pbw_term(const std::vector<SymFunc>& prims, PbwMode mode, int d, int n) {
  SymFunc total = SymFunc::zero(n);
  for (const auto& lam : partitions(d)) {
    std::map<int, int> mult;
    for (int k : lam) ++mult[k];
    SymFunc t = SymFunc::h(n);
    for (auto [k, m] : mult) {
      const SymFunc& l = prims.at(k - 1);
      bool ext = mode == PbwMode::VG && k % 2 == 1;
      t = kronecker(t, ext ? ext_power(l, m) : sym_power(l, m));
    }
    total += t;
  }
  return total;
}

SymFunc pbw_reconstruct(const std::vector<SymFunc>& prims, PbwMode mode, int d) {
  if (prims.empty()) throw InvalidArgument("no primitives");
  int n = prims[0].degree();
  if (d == 0) return SymFunc::h(n);
  return pbw_term(prims, mode, d, n);
}

std::vector<SymFunc> primitives(const GradedCharacterSeries& dual, PbwMode mode, int i) {
  std::vector<SymFunc> prims;
  int n = dual.n;
  for (int j = 1; j <= i; ++j) {
    prims.push_back(SymFunc::zero(n));
    // the lambda = (j) term of the PBW sum is L_j itself
    SymFunc rest = pbw_term(prims, mode, j, n);
    SymFunc l = dual.at(j) - rest;
    for (const auto& [lam, c] : l.to_schur())
      if (c < 0 || !is_integer(c))
        throw NonGenuine("primitive of degree " + std::to_string(j) + " has coefficient " + c.get_str() + " on s" +
                         partition_to_string(lam));
    prims.back() = l;
  }
  return prims;
}

std::vector<Perm> generate_group(int n, const std::vector<Perm>& gens) {
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        Perm c(n);
        for (int x = 0; x < n; ++x) c[x] = g[a[x]];
        if (seen.insert(c).second) next.push_back(c);
      }
    frontier.swap(next);
  }
  return {seen.begin(), seen.end()};
}

SymFunc induced_trivial_character(int n, const std::vector<Perm>& elements) {
  std::set<Perm> h(elements.begin(), elements.end());
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  if (!h.count(id)) throw NotAGroup("identity missing");
  for (const auto& g : h) {
    if (static_cast<int>(g.size()) != n) throw NotAGroup("element of the wrong degree");
    for (const auto& k : h) {
      Perm c(n);
      for (int x = 0; x < n; ++x) c[x] = g[k[x]];
      if (!h.count(c)) throw NotAGroup("not closed under composition");
    }
  }
  SymFunc f = SymFunc::zero(n);
  for (const auto& g : h) f += SymFunc::p(cycle_type(g), Q(1, static_cast<long>(h.size())));
  return f;
}

}  // namespace koszul
