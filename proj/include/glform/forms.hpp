#pragma once

// Exact integer matrix algebra for symmetric bilinear forms.
//
// Matrices store 64-bit entries; every derived quantity (inertia, determinant,
// Smith invariants) is computed with GMP integers or rationals, so no result
// depends on rounding.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace glform {

using BigInt = mpz_class;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  std::vector<std::vector<std::int64_t>> to_rows() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Product with overflow checking; throws TooLarge when an entry leaves int64.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Symmetric integer matrix. Symmetry is enforced on construction and by `set`.
class SymIntMatrix {
 public:
  SymIntMatrix() = default;
  explicit SymIntMatrix(std::size_t n) : m_(n, n) {}
  SymIntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  /// Throws BadMatrix unless `m` is square and symmetric.
  explicit SymIntMatrix(IntMatrix m);
  static SymIntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t size() const { return m_.rows(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  void set(std::size_t i, std::size_t j, std::int64_t v);
  void add(std::size_t i, std::size_t j, std::int64_t v);

  const IntMatrix& matrix() const { return m_; }
  std::vector<std::vector<std::int64_t>> to_rows() const { return m_.to_rows(); }

  /// The form with row and column `k` removed.
  SymIntMatrix without(std::size_t k) const;
  /// Block-diagonal sum `this ⊕ other`.
  SymIntMatrix direct_sum(const SymIntMatrix& other) const;
  /// Uᵀ M U.
  SymIntMatrix congruent(const IntMatrix& u) const;

  friend bool operator==(const SymIntMatrix&, const SymIntMatrix&) = default;

 private:
  IntMatrix m_;
};

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  std::int64_t signature() const {
    return static_cast<std::int64_t>(positive) - static_cast<std::int64_t>(negative);
  }
  std::size_t dimension() const { return positive + negative + zero; }

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

Inertia operator+(const Inertia& a, const Inertia& b);

/// Sylvester inertia by exact rational congruence diagonalization.
///
/// Pivots on the first nonzero diagonal entry. When the active block has an
/// all-zero diagonal but a nonzero off-diagonal entry c at (i, j), the block
/// [[0, c], [c, 0]] is split off as a hyperbolic pair contributing (1, 1, 0)
/// and the rest is replaced by its Schur complement.
Inertia inertia(const SymIntMatrix& m);

inline std::int64_t signature(const SymIntMatrix& m) { return inertia(m).signature(); }

/// Fraction-free (Bareiss) determinant. The 0×0 determinant is 1.
BigInt determinant(const IntMatrix& m);
inline BigInt determinant(const SymIntMatrix& m) { return determinant(m.matrix()); }

/// Diagonal of the Smith normal form, d1 | d2 | ..., all nonnegative.
/// Length is min(rows, cols); trailing zeros mark rank deficiency.
std::vector<BigInt> smith_invariants(const IntMatrix& m);
inline std::vector<BigInt> smith_invariants(const SymIntMatrix& m) { return smith_invariants(m.matrix()); }

/// Parses a row-major literal such as `[[3,-1,0],[-1,4,-1],[0,-1,2]]`.
IntMatrix parse_matrix(std::string_view text);

std::string to_string(const IntMatrix& m);
inline std::string to_string(const SymIntMatrix& m) { return to_string(m.matrix()); }

}  // namespace glform
