#include "koszul/presentation.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "koszul/errors.hpp"

namespace koszul {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::OS: return "OS";
    case Kind::VG: return "VG";
    case Kind::OS_DUAL: return "OS_DUAL";
    case Kind::VG_DUAL: return "VG_DUAL";
    case Kind::DIGRAPH: return "DIGRAPH";
  }
  return "?";
}

bool is_dual(Kind k) { return k == Kind::OS_DUAL || k == Kind::VG_DUAL; }

Word make_word(const std::vector<int>& ls) {
  Word w;
  for (int l : ls) w.push_back(static_cast<char>(l));
  return w;
}

std::vector<int> letters(const Word& w) {
  std::vector<int> r;
  for (char c : w) r.push_back(static_cast<unsigned char>(c));
  return r;
}

void add_term(Poly& p, const Word& w, const Q& c) {
  if (c == 0) return;
  auto [it, ins] = p.emplace(w, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

Poly poly_add(const Poly& a, const Poly& b, const Q& scale_b) {
  Poly r = a;
  for (const auto& [w, c] : b) add_term(r, w, c * scale_b);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [u, c] : a)
    for (const auto& [v, d] : b) add_term(r, u + v, c * d);
  return r;
}

std::string poly_to_string(const Poly& p, char var, const GroundOrder* labels) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : p) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Q a = abs(c);
    if (a != 1 || w.empty()) os << a.get_str();
    for (int l : letters(w)) os << var << (labels ? labels->label(l) : std::to_string(l + 1));
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- term order

bool TermOrder::less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  if (!dual) return a < b;
  for (std::size_t k = a.size(); k-- > 0;)
    if (a[k] != b[k]) return static_cast<unsigned char>(a[k]) > static_cast<unsigned char>(b[k]);
  return false;
}

std::uint64_t TermOrder::key(const Word& w) const {
  unsigned __int128 k = 0, base = 1;
  if (!dual) {
    for (char c : w) k = k * n + static_cast<unsigned char>(c);
  } else {
    for (char c : w) {
      k += base * (n - 1 - static_cast<unsigned char>(c));
      base *= n;
    }
  }
  if (k >> 64) throw InvalidArgument("word too long for 64-bit column keys");
  return static_cast<std::uint64_t>(k);
}

// ---------------------------------------------------------------- presentation

struct Presentation::Cache {
  std::mutex mu;
  std::map<int, std::vector<Word>> basis;
  std::map<int, std::unordered_map<Word, int>> index;
};

Presentation make_presentation(Kind kind, int n, Ambient ambient, std::vector<Relation> rels, GroundOrder labels) {
  if (n > 64) throw InvalidArgument("at most 64 variables");
  Presentation p;
  p.kind_ = kind;
  p.n_ = n;
  p.ambient_ = ambient;
  p.order_.dual = ambient == Ambient::Free;
  p.order_.n = n;
  p.labels_ = labels.size() ? std::move(labels) : GroundOrder::numbered(n);
  for (auto& r : rels) {
    r.poly = p.canonicalize(r.poly);
    if (r.poly.empty()) continue;
    Word lead = r.poly.begin()->first;
    for (const auto& [w, c] : r.poly)
      if (p.order_.less(lead, w)) lead = w;
    r.initial = lead;
    p.relations_.push_back(std::move(r));
  }
  p.build_rules();
  p.initial_.assign(static_cast<std::size_t>(n) * n, false);
  for (const auto& r : p.relations_) {
    auto l = letters(r.initial);
    p.initial_[l[0] * n + l[1]] = true;
  }
  return p;
}

void Presentation::build_rules() {
  rule_of_.assign(static_cast<std::size_t>(n_) * n_, -1);
  tails_.clear();
  for (const auto& r : relations_) {
    if (r.initial.size() != 2) throw InvalidArgument("relations must be quadratic");
    auto l = letters(r.initial);
    int& slot = rule_of_[l[0] * n_ + l[1]];
    if (slot >= 0) continue;
    Q lc = r.poly.at(r.initial);
    Poly tail;
    for (const auto& [w, c] : r.poly)
      if (w != r.initial) add_term(tail, w, -c / lc);
    slot = static_cast<int>(tails_.size());
    tails_.push_back(std::move(tail));
  }
  cache_ = std::make_shared<Cache>();
}

void Presentation::attach_matroid(const Matroid& m, std::optional<ModularDecomposition> d, std::vector<int> original) {
  matroid_ = m;
  dec_ = std::move(d);
  original_ = std::move(original);
}

Presentation Presentation::without_relation(std::size_t k) const {
  Presentation p = *this;
  p.relations_.erase(p.relations_.begin() + static_cast<long>(k));
  p.build_rules();
  return p;
}

const Poly* Presentation::rule(int a, int b) const {
  int r = rule_of_[a * n_ + b];
  return r < 0 ? nullptr : &tails_[r];
}

std::pair<int, Word> Presentation::canonicalize(const Word& w) const {
  if (ambient_ == Ambient::Free) return {1, w};
  Word s = w;
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < s.size(); ++i)
    for (std::size_t j = i; j > 0 && static_cast<unsigned char>(s[j - 1]) > static_cast<unsigned char>(s[j]); --j) {
      std::swap(s[j - 1], s[j]);
      sign = -sign;
    }
  if (ambient_ == Ambient::Commutative) return {1, s};
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == s[i - 1]) return {0, s};
  return {sign, s};
}

Poly Presentation::canonicalize(const Poly& p) const {
  Poly r;
  for (const auto& [w, c] : p) {
    auto [s, cw] = canonicalize(w);
    if (s) add_term(r, cw, c * s);
  }
  return r;
}

bool Presentation::find_reducible(const Word& w, std::size_t& i, std::size_t& j) const {
  auto at = [&](std::size_t k) { return static_cast<unsigned char>(w[k]); };
  if (ambient_ == Ambient::Free) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (rule_of_[at(k) * n_ + at(k + 1)] >= 0) {
        i = k;
        j = k + 1;
        return true;
      }
    return false;
  }
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (rule_of_[at(a) * n_ + at(b)] >= 0) {
        i = a;
        j = b;
        return true;
      }
  return false;
}

bool Presentation::is_standard(const Word& w) const {
  auto [s, cw] = canonicalize(w);
  if (s == 0 || cw != w) return false;
  auto ls = letters(w);
  for (std::size_t a = 0; a < ls.size(); ++a)
    for (std::size_t b = a + 1; b < ls.size(); ++b) {
      if (ambient_ == Ambient::Free && b != a + 1) break;
      if (initial_[ls[a] * n_ + ls[b]]) return false;
    }
  return true;
}

Poly Presentation::normal_form(const Poly& p) const {
  auto cmp = [this](const Word& a, const Word& b) { return order_.less(a, b); };
  std::map<Word, Q, decltype(cmp)> pending(cmp);
  auto push = [&](const Word& w, const Q& c) {
    if (c == 0) return;
    auto [it, ins] = pending.emplace(w, c);
    if (!ins) {
      it->second += c;
      if (it->second == 0) pending.erase(it);
    }
  };
  for (const auto& [w, c] : canonicalize(p)) push(w, c);
  Poly result;
  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    Word w = it->first;
    Q c = it->second;
    pending.erase(it);
    std::size_t i, j;
    if (!find_reducible(w, i, j)) {
      result.emplace(std::move(w), std::move(c));
      continue;
    }
    const Poly& tail = *rule(static_cast<unsigned char>(w[i]), static_cast<unsigned char>(w[j]));
    if (ambient_ == Ambient::Free) {
      Word pre = w.substr(0, i), post = w.substr(j + 1);
      for (const auto& [u, cu] : tail) push(pre + u + post, c * cu);
    } else {
      Word rest;
      for (std::size_t k = 0; k < w.size(); ++k)
        if (k != i && k != j) rest.push_back(w[k]);
      int s = canonicalize(Word{w[i], w[j]} + rest).first;
      for (const auto& [u, cu] : tail) {
        auto [s2, w2] = canonicalize(u + rest);
        if (s2) push(w2, c * cu * s * s2);
      }
    }
  }
  return result;
}

Poly Presentation::multiply(const Poly& a, const Poly& b) const { return normal_form(poly_mul(a, b)); }

const std::vector<Word>& Presentation::basis(int d) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->basis.find(d);
  if (it != cache_->basis.end()) return it->second;
  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    int start = 0;
    if (!cur.empty() && ambient_ != Ambient::Free)
      start = static_cast<unsigned char>(cur.back()) + (ambient_ == Ambient::Exterior ? 1 : 0);
    for (int l = start; l < n_; ++l) {
      bool ok = true;
      if (ambient_ == Ambient::Free) {
        ok = cur.empty() || initial_[static_cast<unsigned char>(cur.back()) * n_ + l] == false;
      } else {
        for (char c : cur)
          if (initial_[static_cast<unsigned char>(c) * n_ + l]) {
            ok = false;
            break;
          }
        if (ok && ambient_ == Ambient::Commutative && initial_[l * n_ + l] && !cur.empty() &&
            static_cast<unsigned char>(cur.back()) == l)
          ok = false;
      }
      if (!ok) continue;
      cur.push_back(static_cast<char>(l));
      self(self);
      cur.pop_back();
    }
  };
  if (d >= 0) rec(rec);
  std::unordered_map<Word, int> idx;
  for (std::size_t k = 0; k < out.size(); ++k) idx.emplace(out[k], static_cast<int>(k));
  cache_->index.emplace(d, std::move(idx));
  return cache_->basis.emplace(d, std::move(out)).first->second;
}

int Presentation::basis_index(int d, const Word& w) const {
  basis(d);
  std::lock_guard<std::mutex> lock(cache_->mu);
  const auto& idx = cache_->index.at(d);
  auto it = idx.find(w);
  return it == idx.end() ? -1 : it->second;
}

long long Presentation::dim(int d) const {
  if (d < 0) return 0;
  if (ambient_ != Ambient::Free) return static_cast<long long>(basis(d).size());
  if (d == 0) return 1;
  // transfer matrix on the last letter
  std::vector<long long> cnt(n_, 1);
  for (int step = 1; step < d; ++step) {
    std::vector<long long> next(n_, 0);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (!initial_[a * n_ + b]) next[b] += cnt[a];
    cnt.swap(next);
  }
  long long s = 0;
  for (long long c : cnt) s += c;
  return s;
}

std::vector<long long> Presentation::hilbert(int D) const {
  std::vector<long long> h;
  for (int d = 0; d <= D; ++d) h.push_back(dim(d));
  return h;
}

long long Presentation::ambient_dim(int d) const {
  Z r;
  switch (ambient_) {
    case Ambient::Free: mpz_ui_pow_ui(r.get_mpz_t(), n_, d); break;
    case Ambient::Exterior: mpz_bin_uiui(r.get_mpz_t(), n_, d); break;
    case Ambient::Commutative: mpz_bin_uiui(r.get_mpz_t(), n_ + d - 1, d); break;
  }
  return r.get_si();
}

// ---------------------------------------------------------------- builders

namespace {

ModularDecomposition need_decomposition(const Matroid& m, std::optional<ModularDecomposition> d) {
  if (d) return *d;
  auto r = supersolvable_decomposition(m);
  if (!r) throw NotSupersolvable("no chain of modular flats");
  return *r;
}

Poly monomial(std::initializer_list<std::pair<std::vector<int>, Q>> terms) {
  Poly p;
  for (const auto& [ls, c] : terms) add_term(p, make_word(ls), c);
  return p;
}

}  // namespace

Presentation os_presentation(const Matroid& m, std::optional<ModularDecomposition> d0) {
  auto d = need_decomposition(m, std::move(d0));
  Matroid mm = m.relabel(d.order);
  std::vector<Relation> rels;
  for (auto [i, j, k] : d.bez_circuits)
    rels.push_back({monomial({{{i, j}, 1}, {{i, k}, -1}, {{j, k}, 1}}), {}});
  auto p = make_presentation(Kind::OS, m.size(), Ambient::Exterior, rels, mm.ground());
  p.attach_matroid(mm, d, d.order);
  return p;
}

Presentation vg_presentation(const OrientedMatroid& om, std::optional<ModularDecomposition> d0) {
  auto d = need_decomposition(om.underlying(), std::move(d0));
  OrientedMatroid o2 = om.relabel(d.order);
  std::vector<Relation> rels;
  for (auto [i, j, k] : d.bez_circuits) {
    auto c = *o2.circuit_with_support(bit(i) | bit(j) | bit(k));
    rels.push_back({monomial({{{i, j}, c.sign(k)}, {{i, k}, c.sign(j)}, {{j, k}, c.sign(i)}}), {}});
  }
  for (int v = 0; v < om.size(); ++v) rels.push_back({monomial({{{v, v}, 1}}), {}});
  auto p = make_presentation(Kind::VG, om.size(), Ambient::Commutative, rels, o2.underlying().ground());
  p.attach_matroid(o2.underlying(), d, d.order);
  p.attach_oriented(o2);
  return p;
}

Presentation os_dual_presentation(const Matroid& m, std::optional<ModularDecomposition> d0) {
  auto d = need_decomposition(m, std::move(d0));
  Matroid mm = m.relabel(d.order);
  int n = m.size();
  std::vector<Relation> rels;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (d.block_of[i] == d.block_of[j]) continue;
      Poly r = monomial({{{j, i}, 1}, {{i, j}, -1}});
      for (int k : elements(mm.closure(bit(i) | bit(j)) & ~(bit(i) | bit(j)))) {
        add_term(r, make_word({j, k}), 1);
        add_term(r, make_word({k, j}), -1);
      }
      rels.push_back({r, {}});
    }
  auto p = make_presentation(Kind::OS_DUAL, n, Ambient::Free, rels, mm.ground());
  p.attach_matroid(mm, d, d.order);
  return p;
}

Presentation vg_dual_presentation(const OrientedMatroid& om, std::optional<ModularDecomposition> d0) {
  auto d = need_decomposition(om.underlying(), std::move(d0));
  OrientedMatroid o2 = om.relabel(d.order);
  const Matroid& mm = o2.underlying();
  int n = om.size();
  std::vector<Relation> rels;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (d.block_of[i] == d.block_of[j]) continue;
      Poly r = monomial({{{j, i}, 1}, {{i, j}, 1}});
      for (int k : elements(mm.closure(bit(i) | bit(j)) & ~(bit(i) | bit(j)))) {
        Q s = o2.chirotope2(j, i) * o2.chirotope2(j, k);
        add_term(r, make_word({j, k}), s);
        add_term(r, make_word({k, j}), s);
      }
      rels.push_back({r, {}});
    }
  auto p = make_presentation(Kind::VG_DUAL, n, Ambient::Free, rels, mm.ground());
  p.attach_matroid(mm, d, d.order);
  p.attach_oriented(o2);
  return p;
}

Presentation os_presentation(const GraphicMatroid& g) {
  auto p = os_presentation(g.om.underlying());
  p.attach_graph(g);
  return p;
}
Presentation vg_presentation(const GraphicMatroid& g) {
  auto p = vg_presentation(g.om);
  p.attach_graph(g);
  return p;
}
Presentation os_dual_presentation(const GraphicMatroid& g) {
  auto p = os_dual_presentation(g.om.underlying());
  p.attach_graph(g);
  return p;
}
Presentation vg_dual_presentation(const GraphicMatroid& g) {
  auto p = vg_dual_presentation(g.om);
  p.attach_graph(g);
  return p;
}

Presentation build_presentation(Kind kind, const GraphicMatroid& g) {
  switch (kind) {
    case Kind::OS: return os_presentation(g);
    case Kind::VG: return vg_presentation(g);
    case Kind::OS_DUAL: return os_dual_presentation(g);
    case Kind::VG_DUAL: return vg_dual_presentation(g);
    default: throw InvalidArgument("digraph algebras are not built from graphs");
  }
}

// ---------------------------------------------------------------- Kohno / I_2

std::vector<Poly> kohno_relations(const Matroid& m) {
  std::vector<Poly> out;
  for (Subset f : m.flats_of_rank(2))
    for (int j : elements(f)) {
      Poly r;
      for (int k : elements(f & ~bit(j))) {
        add_term(r, make_word({j, k}), 1);
        add_term(r, make_word({k, j}), -1);
      }
      out.push_back(r);
    }
  return out;
}

std::vector<Poly> kohno_relations(const OrientedMatroid& om) {
  std::vector<Poly> out;
  for (Subset f : om.underlying().flats_of_rank(2))
    for (int j : elements(f)) {
      Poly r;
      for (int k : elements(f & ~bit(j))) {
        Q s = om.chirotope2(j, k);
        add_term(r, make_word({j, k}), s);
        add_term(r, make_word({k, j}), s);
      }
      out.push_back(r);
    }
  return out;
}

namespace {

std::vector<Poly> quadratic_common(int n, bool anti) {
  std::vector<Poly> out;
  for (int k = 0; k < n; ++k) {
    out.push_back(monomial({{{k, k}, 1}}));
    for (int l = k + 1; l < n; ++l) out.push_back(monomial({{{k, l}, 1}, {{l, k}, anti ? 1 : -1}}));
  }
  return out;
}

}  // namespace

std::vector<Poly> quadratic_relations(const Matroid& m) {
  auto out = quadratic_common(m.size(), true);
  for (Subset c : m.circuits()) {
    if (popcount(c) != 3) continue;
    auto e = elements(c);
    out.push_back(monomial({{{e[0], e[1]}, 1}, {{e[0], e[2]}, -1}, {{e[1], e[2]}, 1}}));
  }
  return out;
}

std::vector<Poly> quadratic_relations(const OrientedMatroid& om) {
  auto out = quadratic_common(om.size(), false);
  for (const auto& c : om.signed_circuits()) {
    if (popcount(c.support()) != 3) continue;
    auto e = elements(c.support());
    out.push_back(monomial({{{e[0], e[1]}, c.sign(e[2])}, {{e[0], e[2]}, c.sign(e[1])}, {{e[1], e[2]}, c.sign(e[0])}}));
  }
  return out;
}

Q pairing(const Poly& y, const Poly& x) {
  Q s = 0;
  for (const auto& [w, c] : y) {
    auto it = x.find(w);
    if (it != x.end()) s += c * it->second;
  }
  return s;
}

// ---------------------------------------------------------------- digraphs

Presentation digraph_monomial_algebra(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (auto [u, v] : arcs) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidArgument("arc endpoint out of range");
    a[u][v] = true;
  }
  std::vector<Relation> rels;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (!a[u][v]) rels.push_back({monomial({{{u, v}, 1}}), {}});
  return make_presentation(Kind::DIGRAPH, n, Ambient::Free, rels, GroundOrder::numbered(n));
}

Presentation digraph_dual(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (auto [u, v] : arcs) a.at(u).at(v) = true;
  std::vector<std::pair<int, int>> comp;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (!a[u][v]) comp.emplace_back(u, v);
  return digraph_monomial_algebra(n, comp);
}

long long walk_hilbert(int n, const std::vector<std::pair<int, int>>& arcs, int d) {
  if (d <= 0) return d == 0 ? 1 : 0;
  std::vector<long long> cnt(n, 1);
  for (int s = 1; s < d; ++s) {
    std::vector<long long> nx(n, 0);
    for (auto [u, v] : arcs) nx[v] += cnt[u];
    cnt.swap(nx);
  }
  long long t = 0;
  for (long long c : cnt) t += c;
  return t;
}

bool koszul_reciprocity_check(const std::vector<long long>& a, const std::vector<long long>& b, int D) {
  for (int d = 0; d <= D; ++d) {
    Z s = 0;
    for (int i = 0; i <= d; ++i) {
      Z ai = i < static_cast<int>(a.size()) ? Z(static_cast<long>(a[i])) : Z(0);
      Z bj = d - i < static_cast<int>(b.size()) ? Z(static_cast<long>(b[d - i])) : Z(0);
      s += (i % 2 ? -1 : 1) * ai * bj;
    }
    if (s != (d == 0 ? 1 : 0)) return false;
  }
  return true;
}

std::vector<long long> product_hilbert(const std::vector<int>& exponents, int D, bool dual) {
  std::vector<long long> h(D + 1, 0);
  h[0] = 1;
  for (int e : exponents) {
    std::vector<long long> nh(D + 1, 0);
    for (int i = 0; i <= D; ++i) {
      if (!dual) {
        nh[i] += h[i];
        if (i + 1 <= D) nh[i + 1] += e * h[i];
      } else {
        long long pw = 1;
        for (int k = 0; i + k <= D; ++k, pw *= e) nh[i + k] += pw * h[i];
      }
    }
    h.swap(nh);
  }
  return h;
}

// ---------------------------------------------------------------- GB certificate

namespace {

void enumerate_words(int n, int len, Ambient amb, const std::function<void(const Word&)>& f) {
  Word cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == len) {
      f(cur);
      return;
    }
    int start = 0;
    if (!cur.empty() && amb != Ambient::Free)
      start = static_cast<unsigned char>(cur.back()) + (amb == Ambient::Exterior ? 1 : 0);
    for (int l = start; l < n; ++l) {
      cur.push_back(static_cast<char>(l));
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
}

}  // namespace

namespace {

GbDegreeReport gb_degree(const Presentation& p, int d) {
  int n = p.num_vars();
  GbDegreeReport r{d, p.ambient_dim(d), 0, 0, p.dim(d)};
  if (d >= 2) {
    Echelon e;
    auto add_row = [&](const Poly& poly) {
      SparseVec v;
      for (const auto& [w, c] : poly) v.emplace_back(p.order().key(w), c);
      normalize(v);
      e.insert(std::move(v));
    };
    for (const auto& rel : p.relations()) {
      if (p.ambient() == Ambient::Free) {
        for (int a = 0; a <= d - 2; ++a)
          enumerate_words(n, a, Ambient::Free, [&](const Word& u) {
            enumerate_words(n, d - 2 - a, Ambient::Free, [&](const Word& v) {
              Poly row;
              for (const auto& [w, c] : rel.poly) add_term(row, u + w + v, c);
              add_row(row);
            });
          });
      } else {
        enumerate_words(n, d - 2, p.ambient(), [&](const Word& m) {
          Poly row;
          for (const auto& [w, c] : rel.poly) {
            auto [s, cw] = p.canonicalize(m + w);
            if (s) add_term(row, cw, c * s);
          }
          add_row(row);
        });
      }
    }
    r.rank = static_cast<long long>(e.rank());
  }
  r.quotient = r.ambient - r.rank;
  return r;
}

}  // namespace

std::vector<GbDegreeReport> gb_certify_report(const Presentation& p, int D) {
  std::vector<GbDegreeReport> out;
  for (int d = 0; d <= D; ++d) out.push_back(gb_degree(p, d));
  return out;
}

// stops at the first degree where the counts differ
bool gb_certify(const Presentation& p, int D) {
  for (int d = 0; d <= D; ++d) {
    auto r = gb_degree(p, d);
    if (r.quotient != r.standard) return false;
  }
  return true;
}

Matrix mult_matrix(const Presentation& p, const Poly& g, int d, Side side) {
  if (g.empty()) throw InvalidArgument("multiplier must be nonzero");
  int e = static_cast<int>(g.begin()->first.size());
  for (const auto& [w, c] : g)
    if (static_cast<int>(w.size()) != e) throw InvalidArgument("multiplier must be homogeneous");
  const auto& src = p.basis(d);
  Matrix m;
  m.rows = p.basis(d + e).size();
  m.cols = src.size();
  for (const auto& w : src) {
    Poly one{{w, Q(1)}};
    Poly prod = p.normal_form(side == Side::Left ? poly_mul(g, one) : poly_mul(one, g));
    SparseVec col;
    for (const auto& [u, c] : prod) {
      int idx = p.basis_index(d + e, u);
      if (idx < 0) throw InvalidArgument("normal form left the standard basis");
      col.emplace_back(idx, c);
    }
    normalize(col);
    m.columns.push_back(std::move(col));
  }
  return m;
}

// ---------------------------------------------------------------- exactness / injectivity

namespace {

std::string flat_label(const Presentation& p, Subset f) {
  std::string s = "{";
  bool first = true;
  for (int v : elements(f)) {
    if (!first) s += ",";
    s += p.variables().label(v);
    first = false;
  }
  return s + "}";
}

}  // namespace

ExactnessReport os_complex_exactness(const Presentation& os, const std::vector<Q>& c) {
  if (os.kind() != Kind::OS && os.kind() != Kind::VG) throw InvalidArgument("needs a primal presentation");
  const Matroid* m = os.matroid();
  int n = os.num_vars();
  if (static_cast<int>(c.size()) != n) throw InvalidArgument("one coefficient per ground element");
  std::vector<Q> cv(n);
  for (int v = 0; v < n; ++v) cv[v] = c[os.original_element()[v]];
  for (Subset f : m->all_flats()) {
    if (f == 0 || !m->is_connected(f)) continue;
    Q s = 0;
    for (int v : elements(f)) s += cv[v];
    if (s == 0) throw NotGeneric("coefficients sum to zero on the connected flat " + flat_label(os, f));
  }
  Poly x;
  for (int v = 0; v < n; ++v) add_term(x, make_word({v}), cv[v]);
  ExactnessReport r;
  int top = m->rank();
  std::vector<Matrix> mats;
  for (int i = 0; i <= top; ++i) {
    r.dims.push_back(os.dim(i));
    mats.push_back(mult_matrix(os, x, i, Side::Left));
    r.ranks.push_back(static_cast<int>(rank(mats.back())));
  }
  r.squares_to_zero = true;
  for (int i = 0; i + 1 <= top; ++i)
    if (!multiply(mats[i + 1], mats[i]).is_zero()) r.squares_to_zero = false;
  r.exact = true;
  for (int i = 0; i <= top; ++i) {
    long long prev = i ? r.ranks[i - 1] : 0;
    if (r.dims[i] != r.ranks[i] + prev) r.exact = false;
    r.h.push_back(r.ranks[i]);
  }
  return r;
}

InjectivityReport dual_right_mult_injective(const Presentation& dual, int d, const std::vector<Q>& c, int D) {
  if (!is_dual(dual.kind())) throw InvalidArgument("needs a dual presentation");
  int n = dual.num_vars();
  if (static_cast<int>(c.size()) != n) throw InvalidArgument("one coefficient per ground element");
  std::vector<Q> cv(n);
  for (int v = 0; v < n; ++v) cv[v] = c[dual.original_element()[v]];
  const auto& dec = *dual.decomposition();
  for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
    bool any = false;
    for (int e : dec.blocks[b]) any = any || c[e] != 0;
    if (!any) throw NotEGeneric("all coefficients vanish on block " + std::to_string(b + 1));
  }
  Poly pd;
  for (int v = 0; v < n; ++v) add_term(pd, Word(d, static_cast<char>(v)), cv[v]);
  InjectivityReport r;
  r.degree_of_element = d;
  r.injective = true;
  for (int i = 0; i <= D; ++i) r.dims.push_back(dual.dim(i));
  for (int i = 0; i + d <= D; ++i) {
    auto rk = static_cast<long long>(rank(mult_matrix(dual, pd, i, Side::Right)));
    r.ranks.push_back(rk);
    if (rk != r.dims[i]) r.injective = false;
  }
  for (int j = 0; j <= D; ++j) r.cokernel.push_back(r.dims[j] - (j >= d ? r.ranks[j - d] : 0));
  return r;
}

std::map<Subset, std::vector<Word>> flat_decomposition(const Presentation& os, int d) {
  std::map<Subset, std::vector<Word>> out;
  const Matroid* m = os.matroid();
  for (const auto& w : os.basis(d)) {
    Subset s = 0;
    for (int v : letters(w)) s |= bit(v);
    Subset f = m->closure(s), orig = 0;
    for (int v : elements(f)) orig |= bit(os.original_element()[v]);
    out[orig].push_back(w);
  }
  return out;
}

// ---------------------------------------------------------------- rgf

Word rgf_to_word(int n, const std::vector<int>& rgf) {
  if (rgf.empty() || rgf[0] != 1) throw InvalidArgument("restricted growth function must start with 1");
  Word w;
  int top = 1;
  for (std::size_t t = 1; t < rgf.size(); ++t) {
    int v = rgf[t];
    if (v == top + 1) {
      top = v;
    } else if (v >= 1 && v <= top) {
      // y_{v, top+1}
      w.push_back(static_cast<char>(braid_edge_index(v - 1, top)));
    } else {
      throw InvalidArgument("not a restricted growth function");
    }
  }
  if (top != n - 1) throw InvalidArgument("wrong number of blocks");
  return w;
}

std::vector<int> word_to_rgf(int n, const Word& w) {
  std::vector<int> r{1};
  int block = 1;  // current vertex b (0-based) of edges (a,b)
  for (int v : letters(w)) {
    int b = 1;
    while (b * (b + 1) / 2 <= v) ++b;
    int a = v - b * (b - 1) / 2;
    if (b < block) throw InvalidArgument("word is not standard");
    while (block < b) r.push_back(++block);
    r.push_back(a + 1);
  }
  while (block < n - 1) r.push_back(++block);
  return r;
}

std::vector<std::pair<std::vector<int>, Word>> rgf_bijection(int n, int i) {
  std::vector<std::pair<std::vector<int>, Word>> out;
  int len = n - 1 + i, k = n - 1;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int mx) -> void {
    int pos = static_cast<int>(cur.size());
    if (pos == len) {
      if (mx == k) out.emplace_back(cur, rgf_to_word(n, cur));
      return;
    }
    if (k - mx > len - pos) return;
    for (int v = 1; v <= std::min(mx + 1, k); ++v) {
      cur.push_back(v);
      self(self, std::max(mx, v));
      cur.pop_back();
    }
  };
  if (k >= 1) {
    cur.push_back(1);
    rec(rec, 1);
  }
  return out;
}

}  // namespace koszul
