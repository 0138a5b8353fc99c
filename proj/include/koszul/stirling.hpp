#pragma once

#include <functional>
#include <string>
#include <vector>

#include "koszul/equivariant.hpp"
#include "koszul/symfunc.hpp"

namespace koszul {

// Characters of OS(Br_n)_i and VG(Br_n)_i from the plethystic formulas
SymFunc os_char(int n, int i);
SymFunc vg_char(int n, int i);
GradedCharacterSeries os_series(int n);  // degrees 0..n-1
GradedCharacterSeries vg_series(int n);
// Duals through the recurrence, memoized per (n,i)
SymFunc os_dual_char(int n, int i);
SymFunc vg_dual_char(int n, int i);
// Primitives L_i of the holonomy Lie algebras
SymFunc primitives_os(int n, int i);
SymFunc primitives_vg(int n, int i);

// [OS(U_{2,n})^!_i] as a sum of h_{n-d} h_1^d
SymFunc ranktwo_dual_char(int n, int i);
// phi_{(n-d,1^d)} = h_{n-d} h_1^d, zero when d > n
SymFunc phi_hook(int n, int d);

// Named closed forms, evaluated at (n, i) = (index of Br_n, degree)
struct ClosedForm {
  std::string name;
  std::string range;  // human-readable stated range
  std::function<bool(int, int)> in_range;
  std::function<SymFunc(int, int)> eval;
};
const std::vector<ClosedForm>& closed_form_library();
SymFunc closed_form(const std::string& name, int n, int i);  // OutOfStatedRange

// Coefficient sequences behind the n = 4, 5 closed forms
struct OsBr4Coeffs {
  Q a, b, c, d;  // f = a h1^4 + b h1^2 h2 + c h2^2 + d h4
};
OsBr4Coeffs os_br4_coeffs(int i);
struct VgBr4Coeffs {
  Q a, b, d;  // f = a h1^4 + b h2 e2 + d h4
};
VgBr4Coeffs vg_br4_coeffs(int i);
Q os_br5_alpha(int k, int i);
Q os_br5_beta(int k, int i);

// h-product helper: zero if any part is negative, zero parts dropped
SymFunc h_prod(std::vector<int> parts);

// Induced trivial characters of the named subgroups used in permutation decompositions
// "C3" < S3, "I2(4)" < S4 (dihedral of order 8), "V4" < S4, "G2" = <(12)(34)> < S4, "C4" < S4, "A3" < S3
std::vector<Perm> named_subgroup(const std::string& name);
int named_subgroup_degree(const std::string& name);
SymFunc named_subgroup_character(const std::string& name);
// Generators of the Young subgroup S_{b1} x S_{b2} x ... on consecutive points starting at offset
std::vector<Perm> young_generators(int n, const std::vector<int>& blocks, int offset = 0);

struct PermTerm {
  Q coeff;  // must be a nonnegative integer
  SymFunc character;
  std::string label;
};
bool perm_decomposition_verify(const SymFunc& f, const std::vector<PermTerm>& terms);
// Nonnegative h-expansion when one exists
std::optional<std::map<Partition, Q>> h_positive_expansion(const SymFunc& f);
bool has_negative_character_value(const SymFunc& f);

// Claimed decompositions
std::vector<PermTerm> os_dual_deg2_doubled_decomposition(int n);  // 2 * OS(Br_n)^!_2, n >= 4
std::vector<PermTerm> os_br4_decomposition(int i);
std::vector<PermTerm> vg_br4_decomposition(int i);  // empty when b_i > 0 or b_i = -1
std::vector<PermTerm> os_br5_decomposition(int i);
// 2 * VG(Br_5)^!_2; found by search, no printed decomposition exists
std::vector<PermTerm> vg_dual_deg2_n5_doubled_decomposition();
std::vector<PermTerm> ranktwo_decomposition(int n, int i);

long long mansour_munagi_count(int n_total, int blocks);
struct AlternatingSumReport {
  SymFunc sum;
  bool schur_positive = false;
  Z dim, stirling_sum;
  long long brute_force = 0;
  bool dims_match = false;
};
AlternatingSumReport alternating_sum_check(int n, int i);

struct BooleanReport {
  bool os_wedge = false;        // OS_i = wedge^i of the permutation rep = hook_i + hook_{i-1}
  bool dual_h_positive = false;
  bool dual_dims = false;
  bool ok() const { return os_wedge && dual_h_positive && dual_dims; }
};
BooleanReport boolean_formulas_check(int n, int dual_degree = 4);

// Report only: is vg_dual_char(n,i+1) - vg_dual_char(n,i) Schur positive
bool vg_injection_conjecture_holds(int n, int i);

}  // namespace koszul
