#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "koszul/rational.hpp"

namespace koszul {

// Sparse vector with strictly increasing column keys; the leading entry is the last one.
using SparseVec = std::vector<std::pair<std::uint64_t, Q>>;

void normalize(SparseVec& v);  // sort, merge duplicates, drop zeros

// Incremental exact row echelon form. Rows are reduced against pivots keyed
// by their largest column. Integer rows are eliminated fraction-free in
// int64; the first overflow switches everything to GMP rationals.
class Echelon {
 public:
  // Returns true if the rank went up
  bool insert(SparseVec v);
  std::size_t rank() const { return small_mode_ ? small_.size() : pivots_.size(); }

 private:
  using SmallVec = std::vector<std::pair<std::uint64_t, std::int64_t>>;
  bool insert_small(SmallVec v);
  bool insert_big(SparseVec v);
  void go_big();

  bool small_mode_ = true;
  std::unordered_map<std::uint64_t, SmallVec> small_;
  std::unordered_map<std::uint64_t, SparseVec> pivots_;
};

// Column-sparse exact matrix
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<SparseVec> columns;  // entry keys are row indices

  Q at(std::size_t r, std::size_t c) const;
  std::vector<std::vector<Q>> dense() const;
  bool is_zero() const;
};

std::size_t rank(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);

}  // namespace koszul
