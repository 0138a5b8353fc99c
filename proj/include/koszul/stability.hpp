#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "koszul/equivariant.hpp"
#include "koszul/symfunc.hpp"

namespace koszul {

// Schur multiset with the first row stripped: s_{lambda[n]} -> lambda
using Multiset = std::map<Partition, Q>;
Multiset unpad(const SymFunc& f);

struct StabilityReport {
  int i = 0;
  int n_min = 0, n_max = 0;
  std::map<int, Multiset> per_n;
  std::optional<Multiset> stable;  // set when the top three examined n agree
  std::optional<int> onset;        // smallest examined n from which all later n agree
  bool exact = false;              // onset proven by the induced-module formula, not just observed
  bool range_limited = true;       // onset sits at n_min, or fewer than three values past it
  std::optional<int> claimed_bound;
  std::optional<bool> bound_ok;    // stable for every examined n >= claimed_bound
};

// seq must cover a contiguous range; throws InsufficientRange with fewer than 3 values
StabilityReport stable_form(const std::map<int, SymFunc>& seq, int i);

// Onset for a sum of Ind(S^mu x 1) classes: max(|mu| + mu_1)
int induced_onset(const std::vector<Partition>& mus);

enum class SeriesKind { OS, VG, OS_DUAL, VG_DUAL, PRIM_OS, PRIM_VG, RANKTWO_DUAL, RANKTWO_PRIM };
std::string to_string(SeriesKind k);
SeriesKind parse_series_kind(const std::string& s);  // InvalidArgument
SymFunc series_term(SeriesKind k, int n, int i);

struct Observation {
  std::string what;
  std::string status;  // pass | fail | inconclusive
  std::string detail;
};

struct BoundsReport {
  SeriesKind kind;
  int i = 0, n_max = 0;
  StabilityReport stability;
  std::optional<int> theorem_bound;  // stable for n >= bound
  bool bound_checked = false;        // n_max >= bound + 2
  bool bound_holds = true;           // hard assertion when checked
  std::optional<int> conjectured_onset;
  std::vector<Observation> observations;  // conjectures, never fatal
  bool ok() const { return !bound_checked || bound_holds; }
};
BoundsReport verify_bounds(SeriesKind kind, int i, int n_max);

// Equivariant lifts of the Stirling recurrences, restricting S_n to S_{n-1}.
// OS/VG: X(n,i) restricted = h_{n-2}h_1 * X(n-1,i-1) + X(n-1,i).
// Duals: X!(n,i) restricted = h_{n-2}h_1 * (X!(n,i-1) restricted) + X!(n-1,i).
bool branching_verify(int n, int i, SeriesKind kind);
// dims of both sides agree with the c(n,k) and S(n,k) recurrences
bool branching_dimension_shadow(int n, int i, SeriesKind kind);

// Given A over S_n, B and X over S_{n-1}: the primal relation
// A_d restricted = B_d + X * B_{d-1} for d <= i, and the dual relation
// A!_d restricted = B!_d + X * (A!_{d-1} restricted) for d <= i.
struct BranchingEquivalence {
  bool primal = false, dual = false;
  bool equivalent() const { return primal == dual; }
};
BranchingEquivalence general_branching_equivalence(const GradedCharacterSeries& a, const GradedCharacterSeries& b,
                                                   const SymFunc& x, int i);

}  // namespace koszul
