#include "koszul/linalg.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace koszul {

void normalize(SparseVec& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  out.reserve(v.size());
  for (auto& [k, c] : v) {
    if (!out.empty() && out.back().first == k) out.back().second += c;
    else out.emplace_back(k, std::move(c));
    if (out.back().second == 0) out.pop_back();
  }
  v.swap(out);
}

namespace {

// v - c * p, both sorted; the leading entries cancel
SparseVec axpy(const SparseVec& v, const Q& c, const SparseVec& p) {
  SparseVec out;
  out.reserve(v.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < p.size()) {
    if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || p[j].first < v[i].first) {
      out.emplace_back(p[j].first, -c * p[j].second);
      ++j;
    } else {
      Q x = v[i].second - c * p[j].second;
      if (x != 0) out.emplace_back(v[i].first, std::move(x));
      ++i, ++j;
    }
  }
  return out;
}

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r) || r == INT64_MIN) throw Overflow{};
  return r;
}

}  // namespace

bool Echelon::insert(SparseVec v) {
  if (small_mode_) {
    SmallVec sv;
    bool fits = true;
    for (const auto& [k, c] : v) {
      if (!is_integer(c) || !c.get_num().fits_slong_p()) {
        fits = false;
        break;
      }
      sv.emplace_back(k, c.get_num().get_si());
    }
    if (fits) {
      try {
        return insert_small(std::move(sv));
      } catch (const Overflow&) {
      }
    }
    go_big();
  }
  return insert_big(std::move(v));
}

bool Echelon::insert_small(SmallVec v) {
  while (!v.empty()) {
    auto it = small_.find(v.back().first);
    if (it == small_.end()) break;
    const SmallVec& p = it->second;
    std::int64_t a = p.back().second, b = v.back().second;
    std::int64_t g = std::gcd(a, b);
    a /= g;
    b /= g;
    // v <- a v - b p
    SmallVec out;
    out.reserve(v.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < p.size()) {
      if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
        out.emplace_back(v[i].first, checked_mul(a, v[i].second));
        ++i;
      } else if (i == v.size() || p[j].first < v[i].first) {
        out.emplace_back(p[j].first, checked_sub(0, checked_mul(b, p[j].second)));
        ++j;
      } else {
        std::int64_t x = checked_sub(checked_mul(a, v[i].second), checked_mul(b, p[j].second));
        if (x) out.emplace_back(v[i].first, x);
        ++i, ++j;
      }
    }
    std::int64_t content = 0;
    for (const auto& e : out) content = std::gcd(content, e.second);
    if (content > 1)
      for (auto& e : out) e.second /= content;
    v.swap(out);
  }
  if (v.empty()) return false;
  if (v.back().second < 0)
    for (auto& e : v) e.second = -e.second;
  auto key = v.back().first;
  small_.emplace(key, std::move(v));
  return true;
}

void Echelon::go_big() {
  small_mode_ = false;
  for (auto& [key, row] : small_) {
    SparseVec b;
    Q inv = Q(1) / Q(static_cast<long>(row.back().second));
    for (const auto& [k, c] : row) b.emplace_back(k, Q(static_cast<long>(c)) * inv);
    pivots_.emplace(key, std::move(b));
  }
  small_.clear();
}

bool Echelon::insert_big(SparseVec v) {
  while (!v.empty()) {
    auto it = pivots_.find(v.back().first);
    if (it == pivots_.end()) break;
    v = axpy(v, v.back().second, it->second);
  }
  if (v.empty()) return false;
  Q inv = 1 / v.back().second;
  for (auto& [k, c] : v) c *= inv;
  auto key = v.back().first;
  pivots_.emplace(key, std::move(v));
  return true;
}

Q Matrix::at(std::size_t r, std::size_t c) const {
  for (const auto& [k, v] : columns.at(c))
    if (k == r) return v;
  return 0;
}

std::vector<std::vector<Q>> Matrix::dense() const {
  std::vector<std::vector<Q>> d(rows, std::vector<Q>(cols));
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [r, v] : columns[c]) d[r][c] = v;
  return d;
}

bool Matrix::is_zero() const {
  return std::all_of(columns.begin(), columns.end(), [](const SparseVec& c) { return c.empty(); });
}

std::size_t rank(const Matrix& m) {
  Echelon e;
  for (const auto& c : m.columns) e.insert(c);
  return e.rank();
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix r;
  r.rows = a.rows;
  r.cols = b.cols;
  for (const auto& bc : b.columns) {
    SparseVec acc;
    for (const auto& [k, v] : bc)
      for (const auto& [row, x] : a.columns.at(k)) acc.emplace_back(row, v * x);
    normalize(acc);
    r.columns.push_back(std::move(acc));
  }
  return r;
}

}  // namespace koszul
