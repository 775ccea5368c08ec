#include "cbasis/exact.hpp"

#include <sstream>
#include <utility>

namespace cbasis {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::leading_block(std::size_t k) const {
  IntMatrix b(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) b(i, j) = (*this)(i, j);
  return b;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

namespace {

// Forward Bareiss pass on an augmented working matrix whose left n columns
// form the square system. Returns the sign from row swaps, or 0 if singular.
// On success w(n-1, n-1) holds +-det and every w(k, k) is nonzero.
int bareiss_forward(IntMatrix& w, std::size_t n) {
  int sign = 1;
  Int prev = 1;
  const std::size_t cols = w.cols();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && w(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(w(k, c), w(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        // Division is exact by Sylvester's identity.
        Int num = checked_sub(checked_mul(w(i, j), w(k, k)), checked_mul(w(i, k), w(k, j)));
        w(i, j) = num / prev;
      }
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  return sign;
}

}  // namespace

Int determinant(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix w = m;
  int sign = bareiss_forward(w, n);
  if (sign == 0) return 0;
  return sign > 0 ? w(n - 1, n - 1) : checked_sub(0, w(n - 1, n - 1));
}

std::vector<Int> leading_principal_minors(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("minors of a non-square matrix");
  std::vector<Int> minors;
  minors.reserve(m.rows());
  for (std::size_t k = 1; k <= m.rows(); ++k) minors.push_back(determinant(m.leading_block(k)));
  return minors;
}

std::vector<Int> solve_integer(const IntMatrix& m, std::span<const Int> rhs) {
  if (!m.square() || rhs.size() != m.rows())
    throw std::invalid_argument("solve_integer: dimension mismatch");
  const std::size_t n = m.rows();
  IntMatrix w(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w(i, j) = m(i, j);
    w(i, n) = rhs[i];
  }
  if (bareiss_forward(w, n) == 0) throw std::domain_error("solve_integer: singular matrix");

  std::vector<Int> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Int acc = w(ii, n);
    for (std::size_t j = ii + 1; j < n; ++j) acc = checked_sub(acc, checked_mul(w(ii, j), x[j]));
    if (acc % w(ii, ii) != 0) throw std::domain_error("solve_integer: solution is not integral");
    x[ii] = acc / w(ii, ii);
  }
  return x;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os.str();
}

}  // namespace cbasis
