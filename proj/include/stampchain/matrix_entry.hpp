#pragma once

// Dense square matrices and the single-entry Multiplier: when only one
// entry (X^i)_{p,q} of each power is wanted, the entry of a product is a
// single row-by-column dot product,
//
//   (AB)_{p,q} = sum_r A_{p,r} B_{r,q},
//
// costing O(m) against the O(m^3) of the full product. Exact modular
// arithmetic is the default scalar so equivalence checks are exact;
// floating point works with a relative tolerance.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stampchain {

/// Integers mod a fixed prime; products stay inside int64 for any
/// modulus below 2^31.
template <std::int64_t Modulus>
class ModInt {
  static_assert(Modulus >= 2 && Modulus < (std::int64_t{1} << 31));

public:
  constexpr ModInt() = default;
  constexpr ModInt(std::int64_t v) : v_(((v % Modulus) + Modulus) % Modulus) {}

  constexpr std::int64_t value() const { return v_; }

  friend constexpr ModInt operator+(ModInt a, ModInt b) { return ModInt(a.v_ + b.v_); }
  friend constexpr ModInt operator-(ModInt a, ModInt b) { return ModInt(a.v_ - b.v_); }
  friend constexpr ModInt operator*(ModInt a, ModInt b) { return ModInt(a.v_ * b.v_); }
  constexpr ModInt& operator+=(ModInt o) { return *this = *this + o; }
  constexpr ModInt& operator-=(ModInt o) { return *this = *this - o; }
  constexpr ModInt& operator*=(ModInt o) { return *this = *this * o; }

  friend constexpr bool operator==(ModInt, ModInt) = default;

private:
  std::int64_t v_ = 0;
};

/// The prime modulus the demos default to.
inline constexpr std::int64_t kDemoModulus = 1000003;
using DemoScalar = ModInt<kDemoModulus>;

template <class T>
class Matrix {
public:
  Matrix(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be >= 1");
  }

  static Matrix identity(int m) {
    Matrix out(m, m);
    for (int r = 0; r < m; ++r) out.at(r, r) = T{1};
    return out;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("matrix dimension mismatch: " + std::to_string(a.rows_) +
                                  "x" + std::to_string(a.cols_) + " * " +
                                  std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    }
    Matrix out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r) {
      for (int t = 0; t < a.cols_; ++t) {
        const T v = a.at(r, t);
        for (int c = 0; c < b.cols_; ++c) out.at(r, c) += v * b.at(t, c);
      }
    }
    return out;
  }

private:
  int rows_, cols_;
  std::vector<T> data_;
};

/// Multiplier that tracks a single entry (p, q) of matrix powers.
/// u(X) = X_{p,q}; v(A, B) = the (p, q) entry of AB via one dot product.
template <class T>
struct MatrixEntryMultiplier {
  using element_type = Matrix<T>;
  using value_type = T;

  MatrixEntryMultiplier(int m, int p, int q) : m(m), p(p), q(q) {
    if (p < 1 || p > m || q < 1 || q > m) {
      throw std::invalid_argument("entry index (" + std::to_string(p) + ", " +
                                  std::to_string(q) + ") out of bounds for m=" +
                                  std::to_string(m));
    }
  }

  int m;
  int p, q;  // 1-based target entry

  element_type multiply(const element_type& a, const element_type& b) const { return a * b; }

  value_type project(const element_type& x) const { return x.at(p - 1, q - 1); }

  value_type pair_eval(const element_type& a, const element_type& b) const {
    value_type acc{};
    for (int r = 0; r < m; ++r) acc += a.at(p - 1, r) * b.at(r, q - 1);
    return acc;
  }

  bool value_equal(const value_type& y, const value_type& z) const {
    if constexpr (std::floating_point<value_type>) {
      // relative tolerance 1e-9; desk-scale dot products stay well inside it
      const double scale = std::max({std::abs(double(y)), std::abs(double(z)), 1.0});
      return std::abs(double(y) - double(z)) <= 1e-9 * scale;
    } else {
      return y == z;
    }
  }
};

}  // namespace stampchain
