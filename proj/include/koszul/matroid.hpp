#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace koszul {

// Subsets of the ground set as bitmasks; ground sets have at most 64 elements.
using Subset = std::uint64_t;

inline Subset bit(int i) { return Subset(1) << i; }
inline int popcount(Subset s) { return __builtin_popcountll(s); }
inline bool contains(Subset s, int i) { return (s >> i) & 1; }
std::vector<int> elements(Subset s);
Subset subset_of(const std::vector<int>& elems);

// Labels of the ground set E = {0, ..., n-1}, in the order used for all
// monomial orders downstream.
class GroundOrder {
 public:
  GroundOrder() = default;
  explicit GroundOrder(std::vector<std::string> labels);
  static GroundOrder numbered(int n);  // "1", ..., "n"
  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
};

class Matroid {
 public:
  Matroid() = default;
  // Validates the circuit axioms; throws CircuitAxiomViolation
  static Matroid from_circuits(int n, const std::vector<Subset>& circuits, GroundOrder labels = {});
  // Same, without validating the axioms; for constructions known to be matroids
  static Matroid from_circuits_unchecked(int n, std::vector<Subset> circuits, GroundOrder labels = {});
  static Matroid uniform(int r, int n);

  int size() const { return n_; }
  const GroundOrder& ground() const { return labels_; }
  const std::vector<Subset>& circuits() const { return circuits_; }
  Subset ground_set() const { return n_ == 64 ? ~Subset(0) : bit(n_) - 1; }

  bool is_independent(Subset s) const;
  int rank(Subset s) const;
  int rank() const { return rank(ground_set()); }
  Subset closure(Subset s) const;
  bool is_flat(Subset s) const { return closure(s) == s; }
  const std::vector<Subset>& flats_of_rank(int k) const;
  std::vector<Subset> all_flats() const;
  bool is_simple() const;
  // M|F is not a direct sum of two nonempty restrictions
  bool is_connected(Subset f) const;
  // Relabel so that new element k is old element perm[k]
  Matroid relabel(const std::vector<int>& perm) const;

 private:
  int n_ = 0;
  GroundOrder labels_;
  std::vector<Subset> circuits_;
  struct FlatCache;
  std::shared_ptr<FlatCache> cache_;
};

struct SignedCircuit {
  Subset pos = 0, neg = 0;
  Subset support() const { return pos | neg; }
  SignedCircuit operator-() const { return {neg, pos}; }
  bool operator<(const SignedCircuit& o) const { return std::pair(pos, neg) < std::pair(o.pos, o.neg); }
  bool operator==(const SignedCircuit& o) const { return pos == o.pos && neg == o.neg; }
  int sign(int e) const { return contains(pos, e) ? 1 : contains(neg, e) ? -1 : 0; }
};

class OrientedMatroid {
 public:
  OrientedMatroid() = default;
  // Both X and -X are stored; a list containing only one of each pair is completed.
  static OrientedMatroid from_signed_circuits(int n, const std::vector<SignedCircuit>& circuits,
                                              GroundOrder labels = {});
  // Realizable oriented matroid of the columns of an integer matrix (rows = coordinates)
  static OrientedMatroid from_vectors(const std::vector<std::vector<long>>& columns, GroundOrder labels = {});
  static OrientedMatroid uniform(int r, int n);  // moment curve realization
  // No validation; circuits must contain both orientations of each circuit
  static OrientedMatroid from_signed_circuits_unchecked(Matroid underlying, std::vector<SignedCircuit> circuits);

  const Matroid& underlying() const { return m_; }
  int size() const { return m_.size(); }
  const std::vector<SignedCircuit>& signed_circuits() const { return circuits_; }
  // Signed circuit with the given support and sign +1 on its smallest element
  std::optional<SignedCircuit> circuit_with_support(Subset s) const;

  // Rank-two chirotope restricted to the rank-two flat spanned by j,k.
  // Defined up to a global sign on each flat; throws NotRankTwoCoplanar when
  // cl{j,k} is not a rank-two flat.
  int chirotope2(int j, int k) const;
  // Copy with the chirotope of the rank-two flat f negated
  OrientedMatroid with_flipped_chirotope(Subset f) const;
  OrientedMatroid relabel(const std::vector<int>& perm) const;

 private:
  void build_chirotopes();
  Matroid m_;
  std::vector<SignedCircuit> circuits_;
  std::map<Subset, SignedCircuit> by_support_;
  // rank-two flat -> antisymmetric sign matrix indexed by positions in the flat
  std::map<Subset, std::map<std::pair<int, int>, int>> chi_;
};

// Graphs on vertices 0..V-1; edges are (u,v) with u != v.
struct GraphicMatroid {
  OrientedMatroid om;
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // edge k = (u,v), u < v
};
// Throws InvalidGraph on loops, repeated edges or bad endpoints
GraphicMatroid graphic(int vertices, const std::vector<std::pair<int, int>>& edges);
// Braid arrangement: the complete graph on n vertices with edges in colex
// order 12, 13, 23, 14, 24, 34, ...
GraphicMatroid braid(int n);
// Index of edge {a,b} (0-based vertices) in braid order
int braid_edge_index(int a, int b);

bool is_modular_flat(const Matroid& m, Subset f);
// Coatom criterion: for every j != k outside f some i in f lies in cl{j,k}
bool is_modular_coatom(const Matroid& m, Subset ambient, Subset g);

struct ModularDecomposition {
  std::vector<std::vector<int>> blocks;  // original element indices, block E_1 first
  std::vector<int> exponents;
  std::vector<int> order;    // new position -> original element
  std::vector<int> reindex;  // original element -> new position
  // 3-circuits {i<j<k} (new indices) with i in an earlier block than j,k
  std::vector<std::array<int, 3>> bez_circuits;
  std::vector<int> block_of;  // new position -> block number (0-based)
};

// Throws NotSimple; returns nullopt when not supersolvable
std::optional<ModularDecomposition> supersolvable_decomposition(const Matroid& m);

// NBC sets of size k for the linear order given by rank_of[e] (smaller = earlier)
std::vector<std::vector<int>> nbc_sets(const Matroid& m, const std::vector<int>& rank_of, int k);
// Partial transversals of the blocks (new indices)
std::vector<std::vector<int>> nbc_sets(const ModularDecomposition& d, int k);

// Signed permutation of the ground set: e -> sign[e] * target[e]
struct SignedPermutation {
  std::vector<int> target;
  std::vector<int> sign;
  static SignedPermutation plain(std::vector<int> target);
  int size() const { return static_cast<int>(target.size()); }
};

bool is_automorphism(const Matroid& m, const SignedPermutation& g);  // throws SignedOnPlainMatroid
bool is_automorphism(const OrientedMatroid& om, const SignedPermutation& g);

// Lift of a vertex permutation to the edges of a graph. With signed = true an
// edge (u<v) gets sign -1 exactly when sigma(u) > sigma(v).
SignedPermutation lift_vertex_permutation(const GraphicMatroid& g, const std::vector<int>& sigma, bool signed_lift);

}  // namespace koszul
