#include "koszul/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

void gen_partitions(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

std::map<int, Z> multiplicities(const Partition& p) {
  std::map<int, Z> m;
  for (int x : p) m[x] += 1;
  return m;
}

Partition merge(const Partition& a, const Partition& b) {
  Partition r;
  r.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r), std::greater<int>());
  return r;
}

Partition remove_one(const Partition& p, int k) {
  Partition r = p;
  r.erase(std::find(r.begin(), r.end(), k));
  return r;
}

}  // namespace

const std::vector<Partition>& partitions(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  Partition cur;
  if (n >= 0) gen_partitions(n, n, cur, out);
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Partition> partitions_with_length(int n, int k) {
  std::vector<Partition> out;
  for (const auto& p : partitions(n))
    if (static_cast<int>(p.size()) == k) out.push_back(p);
  return out;
}

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

std::string partition_to_string(const Partition& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

bool revlex_less(const Partition& a, const Partition& b) {
  // (n) comes first, so "less" means lexicographically greater
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Z z_lambda(const Partition& mu) {
  Z z = 1;
  for (auto& [part, m] : multiplicities(mu)) {
    Z f;
    mpz_fac_ui(f.get_mpz_t(), m.get_ui());
    Z pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), part, m.get_ui());
    z *= f * pw;
  }
  return z;
}

Partition conjugate(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  for (int j = 1; j <= p[0]; ++j) {
    int cnt = 0;
    for (int x : p)
      if (x >= j) ++cnt;
    c.push_back(cnt);
  }
  return c;
}

Partition power_map(const Partition& mu, int k) {
  Partition r;
  for (int l : mu) {
    int g = std::gcd(l, k);
    for (int i = 0; i < g; ++i) r.push_back(l / g);
  }
  std::sort(r.begin(), r.end(), std::greater<int>());
  return r;
}

// --- Murnaghan-Nakayama on beta sets ---------------------------------------

namespace {

std::mutex mn_mu;
std::map<std::pair<Partition, Partition>, Z> mn_cache;

Z mn_rec(const Partition& lambda, const Partition& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, mu);
  {
    std::lock_guard<std::mutex> lock(mn_mu);
    auto it = mn_cache.find(key);
    if (it != mn_cache.end()) return it->second;
  }
  int r = mu[0];
  Partition rest(mu.begin() + 1, mu.end());
  int L = static_cast<int>(lambda.size());
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = lambda[i] + (L - 1 - i);
  Z total = 0;
  for (int i = 0; i < L; ++i) {
    int b = beta[i], t = b - r;
    if (t < 0 || std::find(beta.begin(), beta.end(), t) != beta.end()) continue;
    int between = 0;
    for (int c : beta)
      if (c > t && c < b) ++between;
    std::vector<int> nb = beta;
    nb[i] = t;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    Partition nl;
    for (int j = 0; j < L; ++j) {
      int part = nb[j] - (L - 1 - j);
      if (part > 0) nl.push_back(part);
    }
    Z v = mn_rec(nl, rest);
    if (between % 2) total -= v;
    else total += v;
  }
  std::lock_guard<std::mutex> lock(mn_mu);
  mn_cache.emplace(std::move(key), total);
  return total;
}

}  // namespace

Z mn_character(const Partition& lambda, const Partition& mu) {
  if (size(lambda) != size(mu)) throw DegreeMismatch("mn_character");
  return mn_rec(lambda, mu);
}

// --- SymFunc ----------------------------------------------------------------

void SymFunc::add_term(const Partition& mu, const Q& c) {
  if (c == 0) return;
  auto [it, inserted] = c_.emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

SymFunc SymFunc::p(const Partition& mu, const Q& c) {
  SymFunc f(size(mu));
  f.add_term(mu, c);
  return f;
}

namespace {

std::mutex basis_mu;
std::map<int, SymFunc> h_cache, e_cache;
std::map<Partition, SymFunc> hl_cache;

const SymFunc& h_single(int n) {
  std::lock_guard<std::mutex> lock(basis_mu);
  auto it = h_cache.find(n);
  if (it != h_cache.end()) return it->second;
  SymFunc f(n);
  for (const auto& mu : partitions(n)) f += SymFunc::p(mu, Q(1) / Q(z_lambda(mu)));
  return h_cache.emplace(n, f).first->second;
}

const SymFunc& e_single(int n) {
  std::lock_guard<std::mutex> lock(basis_mu);
  auto it = e_cache.find(n);
  if (it != e_cache.end()) return it->second;
  SymFunc f(n);
  for (const auto& mu : partitions(n)) {
    Q c = Q(1) / Q(z_lambda(mu));
    if ((n - static_cast<int>(mu.size())) % 2) c = -c;
    f += SymFunc::p(mu, c);
  }
  return e_cache.emplace(n, f).first->second;
}

}  // namespace

SymFunc SymFunc::h(const Partition& lambda) {
  {
    std::lock_guard<std::mutex> lock(basis_mu);
    auto it = hl_cache.find(lambda);
    if (it != hl_cache.end()) return it->second;
  }
  SymFunc f = one();
  for (int k : lambda) f = f * h_single(k);
  std::lock_guard<std::mutex> lock(basis_mu);
  hl_cache.emplace(lambda, f);
  return f;
}

SymFunc SymFunc::e(const Partition& lambda) {
  SymFunc f = one();
  for (int k : lambda) f = f * e_single(k);
  return f;
}

SymFunc SymFunc::schur(const Partition& lambda) {
  int n = size(lambda);
  SymFunc f(n);
  for (const auto& mu : partitions(n))
    f.add_term(mu, Q(mn_character(lambda, mu)) / Q(z_lambda(mu)));
  return f;
}

SymFunc SymFunc::from_class_function(int degree, const std::map<Partition, Q>& values) {
  SymFunc f(degree);
  for (const auto& [mu, v] : values) {
    if (size(mu) != degree) throw DegreeMismatch("class function on " + partition_to_string(mu));
    f.add_term(mu, v / Q(z_lambda(mu)));
  }
  return f;
}

Q SymFunc::p_coeff(const Partition& mu) const {
  auto it = c_.find(mu);
  return it == c_.end() ? Q(0) : it->second;
}

Q SymFunc::class_value(const Partition& mu) const { return p_coeff(mu) * Q(z_lambda(mu)); }

std::map<Partition, Q> SymFunc::class_function() const {
  std::map<Partition, Q> v;
  for (const auto& mu : partitions(degree_)) v[mu] = class_value(mu);
  return v;
}

Q SymFunc::dim() const { return class_value(Partition(degree_, 1)); }

std::map<Partition, Q> SymFunc::to_schur() const {
  std::map<Partition, Q> out;
  for (const auto& lam : partitions(degree_)) {
    Q v = 0;
    for (const auto& [mu, c] : c_) v += c * Q(mn_character(lam, mu));
    if (v != 0) out[lam] = v;
  }
  return out;
}

std::map<Partition, Q> SymFunc::to_h() const {
  // h_lambda only involves p_mu with mu refining lambda, so the transition
  // matrix is triangular in reverse-lex order
  std::map<Partition, Q> out;
  SymFunc r = *this;
  for (const auto& lam : partitions(degree_)) {
    Q c = r.p_coeff(lam);
    if (c == 0) continue;
    SymFunc hl = h(lam);
    Q x = c / hl.p_coeff(lam);
    out[lam] = x;
    r -= hl * x;
  }
  return out;
}

std::map<Partition, Q> SymFunc::to_e() const { return omega(*this).to_h(); }

SymFunc SymFunc::from_schur(int degree, const std::map<Partition, Q>& coeffs) {
  SymFunc f(degree);
  for (const auto& [lam, c] : coeffs) f += schur(lam) * c;
  return f;
}

SymFunc SymFunc::from_h(int degree, const std::map<Partition, Q>& coeffs) {
  SymFunc f(degree);
  for (const auto& [lam, c] : coeffs) f += h(lam) * c;
  return f;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  if (degree_ != o.degree_) throw DegreeMismatch("sum of degrees " + std::to_string(degree_) + " and " + std::to_string(o.degree_));
  for (const auto& [mu, c] : o.c_) add_term(mu, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += o * Q(-1); }

SymFunc& SymFunc::operator*=(const Q& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [mu, c] : c_) c *= s;
  return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  SymFunc r(a.degree() + b.degree());
  for (const auto& [m1, c1] : a.p_coeffs())
    for (const auto& [m2, c2] : b.p_coeffs()) r.add_term(merge(m1, m2), c1 * c2);
  return r;
}

std::string SymFunc::to_schur_string() const {
  auto s = to_schur();
  if (s.empty()) return "0";
  std::vector<Partition> keys;
  for (auto& [k, v] : s) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), revlex_less);
  std::ostringstream os;
  bool first = true;
  for (const auto& k : keys) {
    Q c = s[k];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Q a = abs(c);
    if (a != 1) os << a.get_str() << " ";
    os << "s" << partition_to_string(k);
    first = false;
  }
  return os.str();
}

// --- operations ---------------------------------------------------------------

SymFunc multiply(const SymFunc& f, const SymFunc& g) { return f * g; }

SymFunc kronecker(const SymFunc& f, const SymFunc& g) {
  if (f.degree() != g.degree())
    throw DegreeMismatch("kronecker product of degrees " + std::to_string(f.degree()) + " and " +
                         std::to_string(g.degree()));
  SymFunc r(f.degree());
  for (const auto& [mu, c] : f.p_coeffs()) {
    Q d = g.p_coeff(mu);
    if (d != 0) r += SymFunc::p(mu, c * d * Q(z_lambda(mu)));
  }
  return r;
}

SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
  std::map<int, SymFunc> pk;  // p_k[g]
  auto get_pk = [&](int k) -> const SymFunc& {
    auto it = pk.find(k);
    if (it != pk.end()) return it->second;
    SymFunc r(k * g.degree());
    for (const auto& [mu, c] : g.p_coeffs()) {
      Partition m = mu;
      for (int& x : m) x *= k;
      r += SymFunc::p(m, c);
    }
    return pk.emplace(k, r).first->second;
  };
  SymFunc out(f.degree() * g.degree());
  for (const auto& [lam, c] : f.p_coeffs()) {
    SymFunc t = SymFunc::one();
    for (int k : lam) t = t * get_pk(k);
    out += t * c;
  }
  return out;
}

SymFunc omega(const SymFunc& f) {
  SymFunc r(f.degree());
  for (const auto& [mu, c] : f.p_coeffs())
    r += SymFunc::p(mu, (f.degree() - static_cast<int>(mu.size())) % 2 ? -c : c);
  return r;
}

namespace {

// p_k^perp = k d/dp_k
SymFunc p_perp(const SymFunc& f, int k) {
  SymFunc r(std::max(0, f.degree() - k));
  for (const auto& [mu, c] : f.p_coeffs()) {
    long m = std::count(mu.begin(), mu.end(), k);
    if (m) r += SymFunc::p(remove_one(mu, k), c * k * m);
  }
  return r;
}

}  // namespace

SymFunc skew_by_p1(const SymFunc& f) { return p_perp(f, 1); }

SymFunc skew(const SymFunc& f, const Partition& nu) {
  int k = size(nu);
  SymFunc r(std::max(0, f.degree() - k));
  if (k > f.degree()) return r;
  for (const auto& rho : partitions(k)) {
    Q c = Q(mn_character(nu, rho)) / Q(z_lambda(rho));
    if (c == 0) continue;
    SymFunc t = f;
    for (int part : rho) t = p_perp(t, part);
    r += t * c;
  }
  return r;
}

namespace {

SymFunc inner_power(const SymFunc& f, int m, bool exterior) {
  if (m < 0) throw NegativePower("power " + std::to_string(m));
  int n = f.degree();
  std::map<Partition, Q> vals;
  for (const auto& mu : partitions(n)) {
    std::vector<Q> a(m + 1), e(m + 1);
    for (int k = 1; k <= m; ++k) {
      a[k] = f.class_value(power_map(mu, k));
      if (exterior && k % 2 == 0) a[k] = -a[k];
    }
    e[0] = 1;
    for (int j = 1; j <= m; ++j) {
      Q s = 0;
      for (int k = 1; k <= j; ++k) s += a[k] * e[j - k];
      e[j] = s / j;
    }
    vals[mu] = e[m];
  }
  return SymFunc::from_class_function(n, vals);
}

}  // namespace

SymFunc sym_power(const SymFunc& f, int m) { return inner_power(f, m, false); }
SymFunc ext_power(const SymFunc& f, int m) { return inner_power(f, m, true); }

Q hall(const SymFunc& f, const SymFunc& g) {
  if (f.degree() != g.degree()) return 0;
  Q s = 0;
  for (const auto& [mu, c] : f.p_coeffs()) s += c * g.p_coeff(mu) * Q(z_lambda(mu));
  return s;
}

bool schur_positive(const SymFunc& f) {
  for (auto& [l, c] : f.to_schur())
    if (c < 0) return false;
  return true;
}

bool schur_integral(const SymFunc& f) {
  for (auto& [l, c] : f.to_schur())
    if (!is_integer(c)) return false;
  return true;
}

bool h_positive(const SymFunc& f) {
  for (auto& [l, c] : f.to_h())
    if (c < 0) return false;
  return true;
}

int moebius(int n) {
  int r = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    r = -r;
  }
  return n > 1 ? -r : r;
}

SymFunc lie_char(int n) {
  SymFunc f(n);
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    int m = moebius(d);
    if (m) f += SymFunc::p(Partition(n / d, d), Q(m, n));
  }
  return f;
}

SymFunc sgn_lie_char(int n) { return omega(lie_char(n)); }

namespace {

std::mutex lam_mu;
std::map<std::pair<bool, Partition>, SymFunc> lam_cache;

SymFunc plethystic_lambda(const Partition& lambda, bool os) {
  auto key = std::make_pair(os, lambda);
  {
    std::lock_guard<std::mutex> lock(lam_mu);
    auto it = lam_cache.find(key);
    if (it != lam_cache.end()) return it->second;
  }
  SymFunc f = SymFunc::one();
  for (auto& [i, m] : multiplicities(lambda)) {
    int mi = static_cast<int>(m.get_si());
    if (os) {
      SymFunc pi = sgn_lie_char(i);
      f = f * plethysm(i % 2 ? SymFunc::h(mi) : SymFunc::e(mi), pi);
    } else {
      f = f * plethysm(SymFunc::h(mi), lie_char(i));
    }
  }
  std::lock_guard<std::mutex> lock(lam_mu);
  lam_cache.emplace(key, f);
  return f;
}

}  // namespace

SymFunc os_lambda(const Partition& lambda) { return plethystic_lambda(lambda, true); }
SymFunc vg_lambda(const Partition& lambda) { return plethystic_lambda(lambda, false); }

namespace {

std::mutex stir_mu;

Z stirling_table(int n, int k, bool first) {
  static std::vector<std::vector<Z>> s1{{1}}, s2{{1}};
  if (n < 0 || k < 0) throw InvalidArgument("negative Stirling index");
  if (k > n) return 0;
  std::lock_guard<std::mutex> lock(stir_mu);
  auto& t = first ? s1 : s2;
  while (static_cast<int>(t.size()) <= n) {
    int m = static_cast<int>(t.size());
    std::vector<Z> row(m + 1, 0);
    for (int j = 1; j <= m; ++j) {
      Z a = j - 1 < m ? t[m - 1][j - 1] : Z(0);
      Z b = j < m ? t[m - 1][j] : Z(0);
      row[j] = a + (first ? Z(m - 1) * b : Z(j) * b);
    }
    t.push_back(row);
  }
  return t[n][k];
}

}  // namespace

Z stirling_first(int n, int k) { return stirling_table(n, k, true); }
Z stirling_second(int n, int k) { return stirling_table(n, k, false); }

std::vector<Q> necklace_poly(int m) {
  std::vector<Q> c(m + 1, 0);
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) c[m / d] += Q(moebius(d), m);
  return c;
}

Partition pad(const Partition& lambda, int n) {
  int first = n - size(lambda);
  if (first < 0 || (!lambda.empty() && first < lambda[0]))
    throw PadTooSmall("cannot pad " + partition_to_string(lambda) + " to " + std::to_string(n));
  Partition r;
  if (first > 0) r.push_back(first);
  r.insert(r.end(), lambda.begin(), lambda.end());
  return r;
}

}  // namespace koszul
