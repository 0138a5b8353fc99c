#include "koszul/matroid.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

#include "koszul/errors.hpp"
#include "koszul/rational.hpp"

namespace koszul {

std::vector<int> elements(Subset s) {
  std::vector<int> r;
  while (s) {
    r.push_back(__builtin_ctzll(s));
    s &= s - 1;
  }
  return r;
}

Subset subset_of(const std::vector<int>& elems) {
  Subset s = 0;
  for (int e : elems) s |= bit(e);
  return s;
}

GroundOrder::GroundOrder(std::vector<std::string> labels) : labels_(std::move(labels)) {}

GroundOrder GroundOrder::numbered(int n) {
  std::vector<std::string> l;
  for (int i = 1; i <= n; ++i) l.push_back(std::to_string(i));
  return GroundOrder(l);
}

std::optional<int> GroundOrder::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

namespace {

std::string mask_str(Subset s) {
  std::string r = "{";
  bool first = true;
  for (int e : elements(s)) {
    if (!first) r += ",";
    r += std::to_string(e + 1);
    first = false;
  }
  return r + "}";
}

Subset map_subset(Subset s, const std::vector<int>& f) {
  Subset r = 0;
  for (int e : elements(s)) r |= bit(f[e]);
  return r;
}

}  // namespace

// ---------------------------------------------------------------- Matroid

struct Matroid::FlatCache {
  std::mutex mu;
  std::map<int, std::vector<Subset>> by_rank;
};

Matroid Matroid::from_circuits_unchecked(int n, std::vector<Subset> circuits, GroundOrder labels) {
  Matroid m;
  m.n_ = n;
  m.circuits_ = std::move(circuits);
  std::sort(m.circuits_.begin(), m.circuits_.end());
  m.labels_ = labels.size() ? std::move(labels) : GroundOrder::numbered(n);
  m.cache_ = std::make_shared<FlatCache>();
  return m;
}

Matroid Matroid::from_circuits(int n, const std::vector<Subset>& circuits, GroundOrder labels) {
  if (n < 0 || n > 64) throw CircuitAxiomViolation("ground set size must be in [0,64]");
  Subset all = n == 64 ? ~Subset(0) : bit(n) - 1;
  std::vector<Subset> cs = circuits;
  std::sort(cs.begin(), cs.end());
  if (std::adjacent_find(cs.begin(), cs.end()) != cs.end())
    throw CircuitAxiomViolation("repeated circuit");
  for (Subset c : cs) {
    if (c == 0) throw CircuitAxiomViolation("empty circuit");
    if (c & ~all) throw CircuitAxiomViolation("circuit " + mask_str(c) + " leaves the ground set");
  }
  for (Subset a : cs)
    for (Subset b : cs)
      if (a != b && (a & b) == a)
        throw CircuitAxiomViolation("circuit " + mask_str(a) + " is contained in " + mask_str(b));
  for (size_t x = 0; x < cs.size(); ++x)
    for (size_t y = x + 1; y < cs.size(); ++y) {
      Subset u = cs[x] | cs[y];
      for (int e : elements(cs[x] & cs[y])) {
        Subset rest = u & ~bit(e);
        bool found = std::any_of(cs.begin(), cs.end(), [&](Subset c) { return (c & rest) == c; });
        if (!found)
          throw CircuitAxiomViolation("elimination fails for " + mask_str(cs[x]) + ", " + mask_str(cs[y]) +
                                      " at " + std::to_string(e + 1));
      }
    }
  return from_circuits_unchecked(n, cs, labels);
}

Matroid Matroid::uniform(int r, int n) {
  if (r < 0 || r > n) throw InvalidArgument("uniform matroid needs 0 <= r <= n");
  std::vector<Subset> cs;
  if (r < n) {
    std::vector<int> idx(r + 1);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      cs.push_back(subset_of(idx));
      int i = r;
      while (i >= 0 && idx[i] == n - (r + 1) + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j <= r; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return from_circuits_unchecked(n, cs, GroundOrder::numbered(n));
}

bool Matroid::is_independent(Subset s) const {
  for (Subset c : circuits_)
    if ((c & s) == c) return false;
  return true;
}

int Matroid::rank(Subset s) const {
  Subset ind = 0;
  for (int e : elements(s)) {
    Subset t = ind | bit(e);
    bool ok = true;
    for (Subset c : circuits_)
      if (contains(c, e) && (c & t) == c) {
        ok = false;
        break;
      }
    if (ok) ind = t;
  }
  return popcount(ind);
}

Subset Matroid::closure(Subset s) const {
  Subset r = s;
  for (Subset c : circuits_) {
    Subset rest = c & ~s;
    if (popcount(rest) == 1) r |= rest;
  }
  return r;
}

const std::vector<Subset>& Matroid::flats_of_rank(int k) const {
  auto* fc = cache_.get();
  std::lock_guard<std::mutex> lock(fc->mu);
  for (int j = 0; j <= k; ++j) {
    if (fc->by_rank.count(j)) continue;
    std::set<Subset> out;
    if (j == 0) {
      out.insert(closure(0));
    } else {
      for (Subset f : fc->by_rank.at(j - 1))
        for (int e : elements(ground_set() & ~f)) out.insert(closure(f | bit(e)));
    }
    fc->by_rank[j] = std::vector<Subset>(out.begin(), out.end());
  }
  return fc->by_rank.at(k);
}

std::vector<Subset> Matroid::all_flats() const {
  std::vector<Subset> r;
  for (int k = 0; k <= rank(); ++k) {
    const auto& f = flats_of_rank(k);
    r.insert(r.end(), f.begin(), f.end());
  }
  return r;
}

bool Matroid::is_simple() const {
  for (Subset c : circuits_)
    if (popcount(c) <= 2) return false;
  return true;
}

bool Matroid::is_connected(Subset f) const {
  if (f == 0) return false;
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Subset c : circuits_) {
    if ((c & f) != c) continue;
    auto es = elements(c);
    for (size_t i = 1; i < es.size(); ++i) parent[find(es[i])] = find(es[0]);
  }
  auto es = elements(f);
  int root = find(es[0]);
  return std::all_of(es.begin(), es.end(), [&](int e) { return find(e) == root; });
}

Matroid Matroid::relabel(const std::vector<int>& perm) const {
  std::vector<int> inv(n_);
  for (int k = 0; k < n_; ++k) inv[perm[k]] = k;
  std::vector<Subset> cs;
  for (Subset c : circuits_) cs.push_back(map_subset(c, inv));
  std::vector<std::string> l;
  for (int k = 0; k < n_; ++k) l.push_back(labels_.label(perm[k]));
  return from_circuits_unchecked(n_, cs, GroundOrder(l));
}

// ---------------------------------------------------------------- oriented

namespace {

// Dense exact helpers for small realizations
int rank_of_columns(const std::vector<std::vector<long>>& cols, const std::vector<int>& which) {
  if (which.empty()) return 0;
  size_t rows = cols[which[0]].size();
  std::vector<std::vector<Q>> a(rows, std::vector<Q>(which.size()));
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < which.size(); ++c) a[r][c] = cols[which[c]][r];
  int rk = 0;
  for (size_t c = 0; c < which.size() && rk < static_cast<int>(rows); ++c) {
    size_t p = rk;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rk]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == static_cast<size_t>(rk) || a[r][c] == 0) continue;
      Q f = a[r][c] / a[rk][c];
      for (size_t k = c; k < which.size(); ++k) a[r][k] -= f * a[rk][k];
    }
    ++rk;
  }
  return rk;
}

// Kernel vector of columns known to form a circuit
std::vector<Q> circuit_kernel(const std::vector<std::vector<long>>& cols, const std::vector<int>& which) {
  size_t rows = cols[which[0]].size(), m = which.size();
  std::vector<std::vector<Q>> a(rows, std::vector<Q>(m));
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < m; ++c) a[r][c] = cols[which[c]][r];
  std::vector<int> pivcol;
  size_t rk = 0;
  for (size_t c = 0; c < m && rk < rows; ++c) {
    size_t p = rk;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rk]);
    Q inv = 1 / a[rk][c];
    for (size_t k = 0; k < m; ++k) a[rk][k] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rk || a[r][c] == 0) continue;
      Q f = a[r][c];
      for (size_t k = 0; k < m; ++k) a[r][k] -= f * a[rk][k];
    }
    pivcol.push_back(static_cast<int>(c));
    ++rk;
  }
  // the single free column is set to 1
  size_t free = 0;
  while (std::find(pivcol.begin(), pivcol.end(), static_cast<int>(free)) != pivcol.end()) ++free;
  std::vector<Q> x(m, 0);
  x[free] = 1;
  for (size_t r = 0; r < pivcol.size(); ++r) x[pivcol[r]] = -a[r][free];
  return x;
}

}  // namespace

OrientedMatroid OrientedMatroid::from_signed_circuits(int n, const std::vector<SignedCircuit>& circuits,
                                                      GroundOrder labels) {
  std::set<SignedCircuit> all;
  for (const auto& c : circuits) {
    if (c.pos & c.neg) throw CircuitAxiomViolation("element with both signs in a signed circuit");
    if (c.support() == 0) throw CircuitAxiomViolation("empty signed circuit");
    all.insert(c);
    all.insert(-c);
  }
  std::map<Subset, std::vector<SignedCircuit>> by;
  for (const auto& c : all) by[c.support()].push_back(c);
  std::vector<Subset> supports;
  for (auto& [s, v] : by) {
    if (v.size() != 2) throw CircuitAxiomViolation("support " + mask_str(s) + " carries more than one sign pattern up to negation");
    supports.push_back(s);
  }
  Matroid m = Matroid::from_circuits(n, supports, labels);
  std::vector<SignedCircuit> cs(all.begin(), all.end());
  // weak elimination
  for (const auto& x : cs)
    for (const auto& y : cs) {
      if (x == -y) continue;
      for (int e : elements(x.pos & y.neg)) {
        Subset zp = (x.pos | y.pos) & ~bit(e), zn = (x.neg | y.neg) & ~bit(e);
        bool ok = std::any_of(cs.begin(), cs.end(),
                              [&](const SignedCircuit& z) { return (z.pos & zp) == z.pos && (z.neg & zn) == z.neg; });
        if (!ok) throw CircuitAxiomViolation("signed elimination fails at element " + std::to_string(e + 1));
      }
    }
  return from_signed_circuits_unchecked(m, cs);
}

OrientedMatroid OrientedMatroid::from_signed_circuits_unchecked(Matroid underlying, std::vector<SignedCircuit> cs) {
  OrientedMatroid om;
  om.m_ = std::move(underlying);
  std::sort(cs.begin(), cs.end());
  om.circuits_ = std::move(cs);
  for (const auto& c : om.circuits_)
    if (c.sign(__builtin_ctzll(c.support())) == 1) om.by_support_[c.support()] = c;
  om.build_chirotopes();
  return om;
}

OrientedMatroid OrientedMatroid::from_vectors(const std::vector<std::vector<long>>& columns, GroundOrder labels) {
  int n = static_cast<int>(columns.size());
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  int r = rank_of_columns(columns, all);
  std::vector<SignedCircuit> cs;
  std::vector<Subset> found;
  for (int sz = 1; sz <= r + 1; ++sz) {
    std::vector<int> idx(sz);
    std::iota(idx.begin(), idx.end(), 0);
    if (sz > n) break;
    while (true) {
      Subset s = subset_of(idx);
      bool has_sub = std::any_of(found.begin(), found.end(), [&](Subset c) { return (c & s) == c; });
      if (!has_sub && rank_of_columns(columns, idx) < sz) {
        auto x = circuit_kernel(columns, idx);
        SignedCircuit c;
        for (int k = 0; k < sz; ++k) (x[k] > 0 ? c.pos : c.neg) |= bit(idx[k]);
        cs.push_back(c);
        found.push_back(s);
      }
      int i = sz - 1;
      while (i >= 0 && idx[i] == n - sz + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return from_signed_circuits(n, cs, labels.size() ? labels : GroundOrder::numbered(n));
}

OrientedMatroid OrientedMatroid::uniform(int r, int n) {
  std::vector<std::vector<long>> cols;
  for (int t = 1; t <= n; ++t) {
    std::vector<long> v;
    long p = 1;
    for (int k = 0; k < r; ++k, p *= t) v.push_back(p);
    cols.push_back(v);
  }
  return from_vectors(cols);
}

std::optional<SignedCircuit> OrientedMatroid::circuit_with_support(Subset s) const {
  auto it = by_support_.find(s);
  if (it == by_support_.end()) return std::nullopt;
  return it->second;
}

void OrientedMatroid::build_chirotopes() {
  chi_.clear();
  if (!m_.is_simple() || m_.rank() < 2) return;
  for (Subset f : m_.flats_of_rank(2)) {
    auto es = elements(f);
    int a = es[0], b = es[1];
    std::map<std::pair<int, int>, int> chi;
    auto set = [&](int x, int y, int v) {
      chi[{x, y}] = v;
      chi[{y, x}] = -v;
    };
    set(a, b, 1);
    auto circ = [&](int x, int y, int z) { return *circuit_with_support(bit(x) | bit(y) | bit(z)); };
    for (size_t k = 2; k < es.size(); ++k) {
      int x = es[k];
      auto c = circ(a, b, x);
      // lambda_b det(b,a) + lambda_x det(x,a) = 0
      set(a, x, -c.sign(b) * c.sign(x) * chi[{a, b}]);
    }
    for (size_t p = 1; p < es.size(); ++p)
      for (size_t q = p + 1; q < es.size(); ++q) {
        int x = es[p], y = es[q];
        if (chi.count({x, y})) continue;
        auto c = circ(a, x, y);
        // lambda_a det(a,y) + lambda_x det(x,y) = 0
        set(x, y, -c.sign(a) * c.sign(x) * chi[{a, y}]);
      }
    chi_[f] = std::move(chi);
  }
}

int OrientedMatroid::chirotope2(int j, int k) const {
  if (j == k) throw NotRankTwoCoplanar("equal elements");
  Subset f = m_.closure(bit(j) | bit(k));
  auto it = chi_.find(f);
  if (it == chi_.end()) throw NotRankTwoCoplanar("no rank-two chirotope for " + mask_str(f));
  return it->second.at({j, k});
}

OrientedMatroid OrientedMatroid::with_flipped_chirotope(Subset f) const {
  OrientedMatroid r = *this;
  auto it = r.chi_.find(f);
  if (it == r.chi_.end()) throw NotRankTwoCoplanar(mask_str(f) + " is not a rank-two flat");
  for (auto& [k, v] : it->second) v = -v;
  return r;
}

OrientedMatroid OrientedMatroid::relabel(const std::vector<int>& perm) const {
  int n = size();
  std::vector<int> inv(n);
  for (int k = 0; k < n; ++k) inv[perm[k]] = k;
  std::vector<SignedCircuit> cs;
  for (const auto& c : circuits_) cs.push_back({map_subset(c.pos, inv), map_subset(c.neg, inv)});
  OrientedMatroid r;
  r.m_ = m_.relabel(perm);
  std::sort(cs.begin(), cs.end());
  r.circuits_ = cs;
  for (const auto& c : cs)
    if (c.sign(__builtin_ctzll(c.support())) == 1) r.by_support_[c.support()] = c;
  // carry chirotopes over so flipped choices survive relabelling
  for (const auto& [f, chi] : chi_) {
    std::map<std::pair<int, int>, int> nc;
    for (const auto& [p, v] : chi) nc[{inv[p.first], inv[p.second]}] = v;
    r.chi_[map_subset(f, inv)] = nc;
  }
  return r;
}

// ---------------------------------------------------------------- graphs

GraphicMatroid graphic(int vertices, const std::vector<std::pair<int, int>>& edges) {
  if (vertices < 0) throw InvalidGraph("negative vertex count");
  if (edges.size() > 64) throw InvalidGraph("more than 64 edges");
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> norm;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) throw InvalidGraph("edge endpoint out of range");
    if (u == v) throw InvalidGraph("loop at vertex " + std::to_string(u + 1));
    auto e = std::minmax(u, v);
    if (!seen.insert(e).second)
      throw InvalidGraph("repeated edge " + std::to_string(e.first + 1) + std::to_string(e.second + 1));
    norm.emplace_back(e.first, e.second);
  }
  int m = static_cast<int>(norm.size());
  std::vector<std::vector<std::pair<int, int>>> adj(vertices);  // (neighbour, edge)
  for (int k = 0; k < m; ++k) {
    adj[norm[k].first].push_back({norm[k].second, k});
    adj[norm[k].second].push_back({norm[k].first, k});
  }
  std::map<Subset, SignedCircuit> cycles;
  // simple cycles through their smallest vertex s
  for (int s = 0; s < vertices; ++s) {
    std::vector<int> path{s};
    std::vector<int> path_edges;
    std::vector<bool> on(vertices, false);
    on[s] = true;
    auto dfs = [&](auto&& self, int u) -> void {
      for (auto [w, k] : adj[u]) {
        if (w == s && path.size() >= 3) {
          SignedCircuit c;
          std::vector<int> pv = path;
          pv.push_back(s);
          std::vector<int> pe = path_edges;
          pe.push_back(k);
          for (size_t t = 0; t < pe.size(); ++t) {
            bool forward = pv[t] < pv[t + 1];
            (forward ? c.pos : c.neg) |= bit(pe[t]);
          }
          cycles.emplace(c.support(), c);
        } else if (w > s && !on[w]) {
          on[w] = true;
          path.push_back(w);
          path_edges.push_back(k);
          self(self, w);
          path.pop_back();
          path_edges.pop_back();
          on[w] = false;
        }
      }
    };
    dfs(dfs, s);
  }
  std::vector<SignedCircuit> cs;
  std::vector<Subset> supports;
  for (auto& [sup, c] : cycles) {
    cs.push_back(c);
    cs.push_back(-c);
    supports.push_back(sup);
  }
  std::vector<std::string> labels;
  for (auto [u, v] : norm) labels.push_back(std::to_string(u + 1) + std::to_string(v + 1));
  GraphicMatroid g;
  g.vertices = vertices;
  g.edges = norm;
  g.om = OrientedMatroid::from_signed_circuits_unchecked(Matroid::from_circuits_unchecked(m, supports, GroundOrder(labels)), cs);
  return g;
}

GraphicMatroid braid(int n) {
  std::vector<std::pair<int, int>> e;
  for (int b = 1; b < n; ++b)
    for (int a = 0; a < b; ++a) e.emplace_back(a, b);
  return graphic(n, e);
}

int braid_edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  return b * (b - 1) / 2 + a;
}

// ---------------------------------------------------------------- modularity

bool is_modular_flat(const Matroid& m, Subset f) {
  int rf = m.rank(f);
  for (Subset g : m.all_flats())
    if (rf + m.rank(g) != m.rank(f & g) + m.rank(m.closure(f | g))) return false;
  return true;
}

bool is_modular_coatom(const Matroid& m, Subset ambient, Subset g) {
  auto out = elements(ambient & ~g);
  for (size_t a = 0; a < out.size(); ++a)
    for (size_t b = a + 1; b < out.size(); ++b)
      if ((m.closure(bit(out[a]) | bit(out[b])) & g) == 0) return false;
  return true;
}

std::optional<ModularDecomposition> supersolvable_decomposition(const Matroid& m) {
  if (!m.is_simple()) throw NotSimple("matroid has loops or parallel elements");
  Subset f = m.ground_set();
  int r = m.rank();
  std::vector<std::vector<int>> top_down;
  for (int k = r; k >= 1; --k) {
    std::optional<std::vector<int>> best;
    Subset best_flat = 0;
    for (Subset g : m.flats_of_rank(k - 1)) {
      if ((g & f) != g || !is_modular_coatom(m, f, g)) continue;
      auto es = elements(g);
      if (!best || es < *best) {
        best = es;
        best_flat = g;
      }
    }
    if (!best) return std::nullopt;
    top_down.push_back(elements(f & ~best_flat));
    f = best_flat;
  }
  ModularDecomposition d;
  d.blocks.assign(top_down.rbegin(), top_down.rend());
  d.reindex.assign(m.size(), -1);
  for (size_t p = 0; p < d.blocks.size(); ++p) {
    d.exponents.push_back(static_cast<int>(d.blocks[p].size()));
    for (int e : d.blocks[p]) {
      d.reindex[e] = static_cast<int>(d.order.size());
      d.order.push_back(e);
      d.block_of.push_back(static_cast<int>(p));
    }
  }
  for (Subset c : m.circuits()) {
    if (popcount(c) != 3) continue;
    std::array<int, 3> t;
    auto es = elements(c);
    for (int k = 0; k < 3; ++k) t[k] = d.reindex[es[k]];
    std::sort(t.begin(), t.end());
    if (d.block_of[t[0]] < d.block_of[t[1]] && d.block_of[t[1]] == d.block_of[t[2]]) d.bez_circuits.push_back(t);
  }
  std::sort(d.bez_circuits.begin(), d.bez_circuits.end());
  return d;
}

// ---------------------------------------------------------------- NBC

std::vector<std::vector<int>> nbc_sets(const Matroid& m, const std::vector<int>& rank_of, int k) {
  int n = m.size();
  std::vector<int> by_rank(n);
  for (int e = 0; e < n; ++e) by_rank[rank_of[e]] = e;
  std::vector<Subset> broken;
  for (Subset c : m.circuits()) {
    auto es = elements(c);
    int mn = *std::min_element(es.begin(), es.end(), [&](int a, int b) { return rank_of[a] < rank_of[b]; });
    broken.push_back(c & ~bit(mn));
  }
  std::vector<std::vector<int>> out;
  if (k > n || k < 0) return out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Subset s = 0;
    std::vector<int> es;
    for (int i : idx) {
      s |= bit(by_rank[i]);
      es.push_back(by_rank[i]);
    }
    if (std::none_of(broken.begin(), broken.end(), [&](Subset b) { return (b & s) == b; })) out.push_back(es);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<std::vector<int>> nbc_sets(const ModularDecomposition& d, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  int nb = static_cast<int>(d.blocks.size());
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int p = from; p < nb; ++p)
      for (int e : d.blocks[p]) {
        cur.push_back(d.reindex[e]);
        self(self, p + 1);
        cur.pop_back();
      }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- automorphisms

SignedPermutation SignedPermutation::plain(std::vector<int> target) {
  SignedPermutation g;
  g.sign.assign(target.size(), 1);
  g.target = std::move(target);
  return g;
}

namespace {

bool is_bijection(const SignedPermutation& g, int n) {
  if (g.size() != n || static_cast<int>(g.sign.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int t : g.target) {
    if (t < 0 || t >= n || hit[t]) return false;
    hit[t] = true;
  }
  for (int s : g.sign)
    if (s != 1 && s != -1) return false;
  return true;
}

}  // namespace

bool is_automorphism(const Matroid& m, const SignedPermutation& g) {
  for (int s : g.sign)
    if (s != 1) throw SignedOnPlainMatroid("signed permutation applied to an unoriented matroid");
  if (!is_bijection(g, m.size())) return false;
  const auto& cs = m.circuits();  // kept sorted
  for (Subset c : cs)
    if (!std::binary_search(cs.begin(), cs.end(), map_subset(c, g.target))) return false;
  return true;
}

bool is_automorphism(const OrientedMatroid& om, const SignedPermutation& g) {
  if (!is_bijection(g, om.size())) return false;
  const auto& cs = om.signed_circuits();  // kept sorted
  for (const auto& c : cs) {
    SignedCircuit img;
    for (int e : elements(c.support())) {
      int s = c.sign(e) * g.sign[e];
      (s > 0 ? img.pos : img.neg) |= bit(g.target[e]);
    }
    if (!std::binary_search(cs.begin(), cs.end(), img)) return false;
  }
  return true;
}

SignedPermutation lift_vertex_permutation(const GraphicMatroid& g, const std::vector<int>& sigma, bool signed_lift) {
  std::map<std::pair<int, int>, int> index;
  for (size_t k = 0; k < g.edges.size(); ++k) index[g.edges[k]] = static_cast<int>(k);
  SignedPermutation out;
  for (auto [u, v] : g.edges) {
    int a = sigma.at(u), b = sigma.at(v);
    auto it = index.find(std::minmax(a, b));
    if (it == index.end()) throw NotAutomorphism("vertex permutation does not preserve the edge set");
    out.target.push_back(it->second);
    out.sign.push_back(signed_lift && a > b ? -1 : 1);
  }
  return out;
}

}  // namespace koszul
