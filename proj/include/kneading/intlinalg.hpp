#pragma once

// Dense matrices over Z (GMP integers), Smith normal form, and the abelian
// groups presented by integer matrices.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace kneading {

using BigInt = mpz_class;
using Rational = mpq_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Row-major literal; all rows must have equal length.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<BigInt>& entries() const { return data_; }

  IntMatrix transpose() const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void negate_row(std::size_t r);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

  /// Rows of space-separated right-aligned integers.
  std::string to_text() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Dense rational matrix, used where the integral result is only known after
/// dividing out.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols);
  explicit RatMatrix(const IntMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

  bool is_integral() const;
  /// Throws std::domain_error if any entry has a nontrivial denominator.
  IntMatrix to_integer() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Gauss-Jordan inverse over Q. Throws std::domain_error when singular.
RatMatrix inverse(const RatMatrix& m);

/// Inverse of a unimodular matrix. Throws std::domain_error otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant.
BigInt determinant(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

/// D = U * M * V with U, V unimodular and D diagonal, d_1 | d_2 | ..., all
/// d_k >= 0, zeros last.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::vector<BigInt> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Z^free_rank + Z/t_1 + ... + Z/t_k with t_i >= 2 and t_i | t_{i+1}.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  static AbelianGroup trivial() { return {}; }
  static AbelianGroup free(std::size_t rank) { return {rank, {}}; }
  /// Z_a in the convention a = 0 -> Z, a = 1 -> 0.
  static AbelianGroup cyclic(const BigInt& a);
  /// Group with the given invariant factors; units are dropped, zeros become
  /// free summands.
  static AbelianGroup from_invariant_factors(const std::vector<BigInt>& diagonal);

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2", "Z_2", "Z + Z_2 + Z_6".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b);
};

/// Z^r / M Z^r.
AbelianGroup cokernel(const IntMatrix& m);

/// Rank of the integer null space of a square matrix.
std::size_t kernel_rank(const IntMatrix& m);

bool is_zero_one(const IntMatrix& m);

/// Strong connectivity of the digraph i -> j when a_ij = 1. Throws
/// std::invalid_argument for non 0-1 or non-square input.
bool is_irreducible(const IntMatrix& a);

}  // namespace kneading
