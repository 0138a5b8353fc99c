#pragma once
// Hand-rolled generators and independent oracles shared by the unit tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "koszul/symfunc.hpp"

namespace testgen {

using koszul::Partition;
using koszul::Q;
using koszul::SymFunc;

constexpr int kCases = 60;

inline Q q(long long x) { return Q(static_cast<long>(x)); }

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  bool coin() { return uniform(0, 1) == 1; }

  Partition partition(int n) {
    const auto& all = koszul::partitions(n);
    return all[uniform(0, static_cast<int>(all.size()) - 1)];
  }
  // small integer combination of Schur functions
  SymFunc symfunc(int n, int terms = 3, int coeff = 3) {
    SymFunc f = SymFunc::zero(n);
    for (int k = 0; k < terms; ++k) f += SymFunc::schur(partition(n)) * Q(uniform(-coeff, coeff));
    return f;
  }
  SymFunc genuine(int n, int terms = 3) {
    SymFunc f = SymFunc::zero(n);
    for (int k = 0; k < terms; ++k) f += SymFunc::schur(partition(n)) * Q(uniform(0, 2));
    return f;
  }
  std::vector<std::pair<int, int>> digraph(int n) {
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (coin()) arcs.emplace_back(u, v);
    return arcs;
  }
};

// S(n,k) from the inclusion-exclusion formula, independent of the library tables
inline long long stirling2_formula(int n, int k) {
  if (n < 0 || k < 0) return 0;
  long long sum = 0, fact = 1;
  for (int j = 1; j <= k; ++j) fact *= j;
  for (int j = 0; j <= k; ++j) {
    long long binom = 1;
    for (int t = 0; t < j; ++t) binom = binom * (k - t) / (t + 1);
    long long pw = 1;
    for (int t = 0; t < n; ++t) pw *= (k - j);
    sum += (j % 2 ? -1 : 1) * binom * pw;
  }
  return sum / fact;
}

// c(n,k) as the coefficient of x^k in x(x+1)...(x+n-1)
inline long long stirling1_poly(int n, int k) {
  std::vector<long long> c{1};
  for (int m = 0; m < n; ++m) {
    std::vector<long long> d(c.size() + 1, 0);
    for (size_t t = 0; t < c.size(); ++t) {
      d[t + 1] += c[t];
      d[t] += c[t] * m;
    }
    c = d;
  }
  return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : 0;
}

// Set partitions of {0..n-1} into k blocks with no block holding j, j+1 (mod n),
// by assigning blocks element by element
inline long long cyclic_separated_partitions(int n, int k) {
  long long count = 0;
  std::vector<int> block(n, -1);
  std::function<void(int, int)> go = [&](int pos, int used) {
    if (pos == n) {
      if (used != k) return;
      for (int j = 0; j < n; ++j)
        if (n > 1 && block[j] == block[(j + 1) % n]) return;
      ++count;
      return;
    }
    for (int b = 0; b <= used && b < k; ++b) {
      block[pos] = b;
      go(pos + 1, std::max(used, b + 1));
    }
  };
  go(0, 0);
  return count;
}

// Number of fixed points of sigma (cycle type mu) on ordered set partitions of shape lambda,
// which is the value of h_lambda at mu; brute force over block assignments
inline long long h_value_bruteforce(const Partition& lambda, const Partition& mu) {
  int n = 0;
  for (int x : mu) n += x;
  std::vector<int> sigma(n);
  int start = 0;
  for (int len : mu) {
    for (int t = 0; t < len; ++t) sigma[start + t] = start + (t + 1) % len;
    start += len;
  }
  std::vector<int> label(n, 0);
  long long fixed = 0;
  std::vector<int> sizes(lambda.size(), 0);
  std::function<void(int)> go = [&](int pos) {
    if (pos == n) {
      for (size_t b = 0; b < lambda.size(); ++b)
        if (sizes[b] != lambda[b]) return;
      for (int x = 0; x < n; ++x)
        if (label[sigma[x]] != label[x]) return;
      ++fixed;
      return;
    }
    for (size_t b = 0; b < lambda.size(); ++b) {
      if (sizes[b] == lambda[b]) continue;
      label[pos] = static_cast<int>(b);
      ++sizes[b];
      go(pos + 1);
      --sizes[b];
    }
  };
  go(0);
  return fixed;
}

}  // namespace testgen
