#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lnd/rat.hpp"

namespace lnd {

/// Dense matrix of exact rationals (row major).
class RatMatrix {
public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rat> data_;
};

/// Reduced row echelon form, exact. The forward pass is fraction-free
/// (Bareiss, after clearing each row's denominators); the back pass divides
/// out pivots over ℚ. Returns the pivot columns in increasing order.
std::vector<std::size_t> rref(RatMatrix& m);

/// Basis of {x : M x = 0}, one vector per free column of the RREF,
/// echelonized (vector k has 1 at its free column, 0 at the others).
std::vector<std::vector<Rat>> nullspace(const RatMatrix& m);

/// Particular solution of M x = b with all free variables set to zero,
/// or nullopt when the system is inconsistent.
std::optional<std::vector<Rat>> solve(const RatMatrix& m,
                                      const std::vector<Rat>& b);

std::size_t rank(const RatMatrix& m);

}  // namespace lnd
