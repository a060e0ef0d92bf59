#pragma once

// Small dense square matrices over a (possibly noncommutative) ring element
// type E. E must provide +, -, *, is_zero(), zero_like() and one_like().

#include <cassert>
#include <stdexcept>
#include <vector>

namespace gaudin {

template <class E>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  SquareMatrix(int n, const E& fill) : n_(n), data_(static_cast<std::size_t>(n) * n, fill) {}

  /// Identity-like matrix with `one` on the diagonal and `one.zero_like()` elsewhere.
  static SquareMatrix identity(int n, const E& one) {
    SquareMatrix m(n, one.zero_like());
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  int size() const { return n_; }
  E& operator()(int i, int j) { return data_[index(i, j)]; }
  const E& operator()(int i, int j) const { return data_[index(i, j)]; }

  E zero() const { return data_.front().zero_like(); }
  E one() const { return data_.front().one_like(); }

  bool is_zero() const {
    for (const auto& e : data_) {
      if (!e.is_zero()) return false;
    }
    return true;
  }

  E trace() const {
    E t = zero();
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) {
    a.check_same(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) {
    a.check_same(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.check_same(b);
    SquareMatrix c(a.n_, a.zero());
    for (int i = 0; i < a.n_; ++i) {
      for (int j = 0; j < a.n_; ++j) {
        E s = a.zero();
        for (int k = 0; k < a.n_; ++k) {
          if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
          s += a(i, k) * b(k, j);
        }
        c(i, j) = std::move(s);
      }
    }
    return c;
  }
  /// Left multiplication by a ring element: (s·M)_ij = s M_ij.
  friend SquareMatrix operator*(const E& s, const SquareMatrix& m) {
    SquareMatrix c = m;
    for (auto& e : c.data_) e = s * e;
    return c;
  }
  bool operator==(const SquareMatrix& o) const { return n_ == o.n_ && data_ == o.data_; }

  /// Removes row `row` and column `col`.
  SquareMatrix minor(int row, int col) const {
    SquareMatrix m(n_ - 1, zero());
    for (int i = 0, mi = 0; i < n_; ++i) {
      if (i == row) continue;
      for (int j = 0, mj = 0; j < n_; ++j) {
        if (j == col) continue;
        m(mi, mj++) = (*this)(i, j);
      }
      ++mi;
    }
    return m;
  }

  /// Submatrix on the given (sorted or not) row and column index lists.
  SquareMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    assert(rows.size() == cols.size());
    SquareMatrix m(static_cast<int>(rows.size()), zero());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = (*this)(rows[i], cols[j]);
    }
    return m;
  }

  template <class F>
  auto map(F&& f) const -> SquareMatrix<decltype(f(std::declval<const E&>()))> {
    using R = decltype(f(std::declval<const E&>()));
    SquareMatrix<R> out(n_, f(data_.front()));
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) out(i, j) = f((*this)(i, j));
    }
    return out;
  }

 private:
  std::size_t index(int i, int j) const {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_);
    return static_cast<std::size_t>(i) * n_ + j;
  }
  void check_same(const SquareMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
  }

  int n_ = 0;
  std::vector<E> data_;
};

}  // namespace gaudin
