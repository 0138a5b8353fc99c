#pragma once

#include <map>
#include <string>
#include <vector>

#include "koszul/rational.hpp"

namespace koszul {

// Weakly decreasing positive parts. The empty partition is the partition of 0.
using Partition = std::vector<int>;

// All partitions of n in reverse-lex order: (n), (n-1,1), ..., (1^n).
const std::vector<Partition>& partitions(int n);
// Partitions of n with exactly k parts, reverse-lex.
std::vector<Partition> partitions_with_length(int n, int k);
int size(const Partition& p);
std::string partition_to_string(const Partition& p);
// true if a precedes b in reverse-lex order
bool revlex_less(const Partition& a, const Partition& b);
Z z_lambda(const Partition& mu);
Partition conjugate(const Partition& p);
// Cycle type of g^k where g has cycle type mu
Partition power_map(const Partition& mu, int k);

// chi^lambda(mu), Murnaghan-Nakayama
Z mn_character(const Partition& lambda, const Partition& mu);

// Homogeneous symmetric function of fixed degree, stored in the power-sum basis.
class SymFunc {
 public:
  SymFunc() = default;
  explicit SymFunc(int degree) : degree_(degree) {}

  static SymFunc zero(int degree) { return SymFunc(degree); }
  static SymFunc one() { return p({}); }
  static SymFunc p(const Partition& mu, const Q& c = 1);
  static SymFunc h(const Partition& lambda);
  static SymFunc e(const Partition& lambda);
  static SymFunc schur(const Partition& lambda);
  static SymFunc h(int n) { return n == 0 ? one() : h(Partition{n}); }
  static SymFunc e(int n) { return n == 0 ? one() : e(Partition{n}); }
  // Frobenius image of a class function (values indexed by cycle type)
  static SymFunc from_class_function(int degree, const std::map<Partition, Q>& values);

  int degree() const { return degree_; }
  const std::map<Partition, Q>& p_coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Q p_coeff(const Partition& mu) const;
  // Character value on the class of cycle type mu
  Q class_value(const Partition& mu) const;
  std::map<Partition, Q> class_function() const;
  // Character degree, the value on the identity
  Q dim() const;

  std::map<Partition, Q> to_schur() const;  // sparse, zeros dropped
  std::map<Partition, Q> to_h() const;
  std::map<Partition, Q> to_e() const;
  static SymFunc from_schur(int degree, const std::map<Partition, Q>& coeffs);
  static SymFunc from_h(int degree, const std::map<Partition, Q>& coeffs);

  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc& operator*=(const Q& s);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator-(SymFunc a) { return a *= Q(-1); }
  friend SymFunc operator*(SymFunc a, const Q& s) { return a *= s; }
  friend SymFunc operator*(const Q& s, SymFunc a) { return a *= s; }
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);  // ordinary product
  bool operator==(const SymFunc& o) const { return degree_ == o.degree_ && c_ == o.c_; }
  bool operator!=(const SymFunc& o) const { return !(*this == o); }

  // Human-readable Schur expansion, e.g. "2 s[3] + s[2,1]"
  std::string to_schur_string() const;

 private:
  void add_term(const Partition& mu, const Q& c);
  int degree_ = 0;
  std::map<Partition, Q> c_;
};

SymFunc multiply(const SymFunc& f, const SymFunc& g);
// Internal (Kronecker) product; DegreeMismatch when degrees differ
SymFunc kronecker(const SymFunc& f, const SymFunc& g);
// f[g]
SymFunc plethysm(const SymFunc& f, const SymFunc& g);
SymFunc omega(const SymFunc& f);
// Restriction S_n -> S_{n-1}, the adjoint of multiplication by p_1
SymFunc skew_by_p1(const SymFunc& f);
// s_nu^perp f
SymFunc skew(const SymFunc& f, const Partition& nu);
// Inner symmetric and exterior powers of an S_n character
SymFunc sym_power(const SymFunc& f, int m);
SymFunc ext_power(const SymFunc& f, int m);
// Hall inner product
Q hall(const SymFunc& f, const SymFunc& g);

bool schur_positive(const SymFunc& f);
bool schur_integral(const SymFunc& f);
bool h_positive(const SymFunc& f);

// (1/n) sum_{d|n} mu(d) p_d^{n/d}
SymFunc lie_char(int n);
SymFunc sgn_lie_char(int n);
// Plethystic OS / VG characters attached to a cycle type
SymFunc os_lambda(const Partition& lambda);
SymFunc vg_lambda(const Partition& lambda);

int moebius(int n);
// Unsigned Stirling numbers of the first kind, Stirling numbers of the second kind
Z stirling_first(int n, int k);
Z stirling_second(int n, int k);
// Coefficients c_0..c_m of (1/m) sum_{d|m} mu(d) x^{m/d}
std::vector<Q> necklace_poly(int m);

// (n - |lambda|, lambda); PadTooSmall when n - |lambda| < lambda_1
Partition pad(const Partition& lambda, int n);

}  // namespace koszul
