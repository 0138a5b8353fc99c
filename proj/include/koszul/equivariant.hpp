#pragma once

#include <map>
#include <string>
#include <vector>

#include "koszul/linalg.hpp"
#include "koszul/presentation.hpp"
#include "koszul/symfunc.hpp"

namespace koszul {

using ClassFunction = std::map<Partition, Q>;
using Perm = std::vector<int>;  // 0-based images

struct GradedCharacterSeries {
  std::string label;
  int n = 0;
  std::vector<SymFunc> terms;  // terms[i] has degree n
  // zero character beyond the stored range
  SymFunc at(int i) const { return i >= 0 && i < static_cast<int>(terms.size()) ? terms[i] : SymFunc::zero(n); }
};

// (1 2 ... mu_1)(mu_1+1 ...)... on {0..n-1}
Perm class_representative(const Partition& mu);
Partition cycle_type(const Perm& g);

// How S_n reaches the variables: through the vertices of the underlying
// graph, or directly on the ground set.
enum class Lift { VertexToEdge, Direct };
int acting_degree(const Presentation& p, Lift lift);
// Signed permutation of the variables induced by sigma; VG kinds use the
// sign-twisted lift. Throws NotAutomorphism.
SignedPermutation variable_action(const Presentation& p, const Perm& sigma, Lift lift);

// Matrix of g (acting on variables) on DegreeBasis(d). Throws NotAutomorphism.
Matrix action_matrix(const Presentation& p, const SignedPermutation& g, int d);
Q trace_of(const Presentation& p, const SignedPermutation& g, int d);
ClassFunction character(const Presentation& p, int d, Lift lift);
SymFunc frobenius(const ClassFunction& chi, int n);
GradedCharacterSeries equivariant_series(const Presentation& p, int D, Lift lift);

// [A^!_d] = sum_{i=1}^d (-1)^{i-1} [A_i] * [A^!_{d-i}]
GradedCharacterSeries dual_series_from_primal(const GradedCharacterSeries& primal, int D);
SymFunc dual_character_recurrence(const GradedCharacterSeries& primal, int d);

// PBW convention: OS uses symmetric powers throughout; VG uses exterior
// powers on odd degrees and symmetric powers on even degrees.
enum class PbwMode { OS, VG };
// Degree-d part of the PBW product built from prims[j-1] = L_j
SymFunc pbw_term(const std::vector<SymFunc>& prims, PbwMode mode, int d, int n);
SymFunc pbw_reconstruct(const std::vector<SymFunc>& prims, PbwMode mode, int d);
// L_1..L_i from a dual series; NonGenuine if some L_j is not a genuine character
std::vector<SymFunc> primitives(const GradedCharacterSeries& dual, PbwMode mode, int i);

// Elements of the subgroup of S_n generated by gens
std::vector<Perm> generate_group(int n, const std::vector<Perm>& gens);
// Permutation character of S_n on the cosets of H; NotAGroup if H is not closed
SymFunc induced_trivial_character(int n, const std::vector<Perm>& elements);

}  // namespace koszul
