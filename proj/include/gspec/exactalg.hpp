#pragma once

// Exact integer linear algebra and integer polynomials.
//
// Everything here is computed with arbitrary-precision integers; no value is
// ever rounded. Matrices are dense and row-major, polynomials store their
// coefficients by ascending power.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace gspec {

using Integer = mpz_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool symmetric() const;

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Integer> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  std::span<const Integer> entries() const noexcept { return entries_; }

  IntMatrix transpose() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

// Univariate polynomial with integer coefficients. The zero polynomial has no
// coefficients and no degree; every other value has a nonzero leading term.
class IntPoly {
 public:
  IntPoly() = default;  // zero polynomial
  explicit IntPoly(std::vector<Integer> ascending);
  IntPoly(std::initializer_list<long> ascending);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(std::size_t power, const Integer& c = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Throws ArgumentError for the zero polynomial.
  std::size_t degree() const;
  const Integer& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  // Coefficient of x^i; zero beyond the degree.
  Integer coeff(std::size_t i) const;
  std::span<const Integer> coefficients() const noexcept { return coeffs_; }

  Integer evaluate(const Integer& x) const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);

// Exact determinant by fraction-free Bareiss elimination. The pivot for each
// column is the first nonzero entry at or below the diagonal.
Integer det(const IntMatrix& m);

// det(xI - A), computed division-free (Samuelson-Berkowitz recurrence).
IntPoly charpoly(const IntMatrix& a);

// Rank over the field with p elements.
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

IntPoly derivative(const IntPoly& f);

// (n+m)x(n+m) matrix: m shifted rows of f's coefficients (leading first)
// stacked over n shifted rows of g's, where n = deg f and m = deg g.
IntMatrix sylvester(const IntPoly& f, const IntPoly& g);

// det(sylvester(f, g)). When one argument is a nonzero constant c the other
// has degree k and the resultant is c^k.
Integer resultant(const IntPoly& f, const IntPoly& g);

// (-1)^{n(n-1)/2} res(f, f') for monic f of degree n >= 1.
Integer discriminant(const IntPoly& f);

// Monic gcd over F_p, coefficients lifted to representatives in [0, p).
IntPoly gcd_mod_p(const IntPoly& f, const IntPoly& g, std::uint64_t p);

// Discriminant of the characteristic polynomial of a symmetric matrix.
Integer discriminant_of_matrix(const IntMatrix& a);

}  // namespace gspec
