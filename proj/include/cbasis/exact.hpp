#pragma once

// Exact integer arithmetic: overflow-checked 64-bit operations and a small
// dense matrix type with fraction-free (Bareiss) elimination.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbasis {

using Int = std::int64_t;

/// Thrown when an intermediate value does not fit in 64 bits.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Int> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Top-left k x k block.
  IntMatrix leading_block(std::size_t k) const;
  IntMatrix transposed() const;
  bool symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Exact determinant by Bareiss elimination with row pivoting.
Int determinant(const IntMatrix& m);

/// Leading principal minors d_1, ..., d_n of a square matrix.
std::vector<Int> leading_principal_minors(const IntMatrix& m);

/// Solves m * x = rhs over the integers. Throws std::domain_error when m is
/// singular or the unique rational solution is not integral.
std::vector<Int> solve_integer(const IntMatrix& m, std::span<const Int> rhs);

std::string to_string(const IntMatrix& m);

}  // namespace cbasis
