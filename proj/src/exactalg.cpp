#include "gspec/exactalg.hpp"

#include <algorithm>
#include <utility>

#include "gspec/errors.hpp"
#include "gspec/numtheory.hpp"
#include "modp.hpp"

namespace gspec {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool IntMatrix::symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
    }
  return c;
}

// ---------------------------------------------------------------------------

IntPoly::IntPoly(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(std::size_t power, const Integer& c) {
  std::vector<Integer> v(power + 1);
  v[power] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t IntPoly::degree() const {
  if (is_zero()) throw ArgumentError("the zero polynomial has no degree");
  return coeffs_.size() - 1;
}

const Integer& IntPoly::leading() const {
  if (is_zero()) throw ArgumentError("the zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto ca = a.coefficients();
  auto cb = b.coefficients();
  std::vector<Integer> c(ca.size() + cb.size() - 1);
  for (std::size_t i = 0; i < ca.size(); ++i)
    for (std::size_t j = 0; j < cb.size(); ++j)
      mpz_addmul(c[i + j].get_mpz_t(), ca[i].get_mpz_t(), cb[j].get_mpz_t());
  return IntPoly(std::move(c));
}

// ---------------------------------------------------------------------------

Integer det(const IntMatrix& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  std::vector<Integer> a(m.entries().begin(), m.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n + j]; };

  Integer prev = 1;
  Integer tmp;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && at(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      negate = !negate;
    }
    const mpz_srcptr akk = at(k, k).get_mpz_t();
    for (std::size_t i = k + 1; i < n; ++i) {
      const mpz_srcptr aik = at(i, k).get_mpz_t();
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_mul(tmp.get_mpz_t(), at(i, j).get_mpz_t(), akk);
        mpz_submul(tmp.get_mpz_t(), aik, at(k, j).get_mpz_t());
        mpz_divexact(at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  Integer result = at(n - 1, n - 1);
  if (negate) result = -result;
  return result;
}

IntPoly charpoly(const IntMatrix& a) {
  if (!a.square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return IntPoly::constant(1);

  // Coefficients in descending order, p[0] = 1, for the leading k x k block.
  std::vector<Integer> p{1, -a(0, 0)};
  std::vector<Integer> v, w, t;
  for (std::size_t k = 1; k < n; ++k) {
    // Toeplitz column: 1, -a_kk, -R C, -R M C, ..., -R M^{k-1} C where M is the
    // leading block, C the column above a_kk and R the row left of it.
    t.assign(k + 2, 0);
    t[0] = 1;
    t[1] = -a(k, k);
    v.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) v[i] = a(i, k);
    for (std::size_t power = 0; power < k; ++power) {
      Integer& rc = t[power + 2];
      for (std::size_t j = 0; j < k; ++j) mpz_submul(rc.get_mpz_t(), a(k, j).get_mpz_t(), v[j].get_mpz_t());
      if (power + 1 == k) break;
      w.assign(k, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          mpz_addmul(w[i].get_mpz_t(), a(i, j).get_mpz_t(), v[j].get_mpz_t());
      std::swap(v, w);
    }
    std::vector<Integer> next(k + 2);
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, k); ++j)
        mpz_addmul(next[i].get_mpz_t(), t[i - j].get_mpz_t(), p[j].get_mpz_t());
    p = std::move(next);
  }
  std::reverse(p.begin(), p.end());
  return IntPoly(std::move(p));
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  if (!is_prime(p)) throw ArgumentError("rank_mod_p: modulus " + std::to_string(p) + " is not prime");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) a[i] = modp::reduce(m.entries()[i], p);

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[rank * cols + j], a[pivot * cols + j]);
    const std::uint64_t inv = modp::inverse(a[rank * cols + c], p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::uint64_t factor = modp::mul(a[i * cols + c], inv, p);
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        a[i * cols + j] = modp::sub(a[i * cols + j], modp::mul(factor, a[rank * cols + j], p), p);
    }
    ++rank;
  }
  return rank;
}

IntPoly derivative(const IntPoly& f) {
  auto c = f.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Integer> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

IntMatrix sylvester(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw ArgumentError("sylvester: zero polynomial");
  const std::size_t n = f.degree();
  const std::size_t m = g.degree();
  if (n < 1 || m < 1) throw ArgumentError("sylvester: both degrees must be at least 1");
  const std::size_t size = n + m;
  IntMatrix s(size, size);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) s(r, r + i) = f.coeff(n - i);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) s(m + r, r + i) = g.coeff(m - i);
  return s;
}

Integer resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw ArgumentError("resultant: zero polynomial");
  const std::size_t n = f.degree();
  const std::size_t m = g.degree();
  Integer r;
  if (m == 0) {
    mpz_pow_ui(r.get_mpz_t(), g.leading().get_mpz_t(), n);
    return r;
  }
  if (n == 0) {
    mpz_pow_ui(r.get_mpz_t(), f.leading().get_mpz_t(), m);
    return r;
  }
  return det(sylvester(f, g));
}

Integer discriminant(const IntPoly& f) {
  if (!f.is_monic()) throw ArgumentError("discriminant: polynomial must be monic");
  const std::size_t n = f.degree();
  if (n < 1) throw ArgumentError("discriminant: degree must be at least 1");
  Integer r = resultant(f, derivative(f));
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

IntPoly gcd_mod_p(const IntPoly& f, const IntPoly& g, std::uint64_t p) {
  if (!is_prime(p)) throw ArgumentError("gcd_mod_p: modulus " + std::to_string(p) + " is not prime");
  auto a = modp::reduce(f, p);
  auto b = modp::reduce(g, p);
  if (a.empty() && b.empty()) throw ArgumentError("gcd_mod_p: both polynomials vanish mod p");
  while (!b.empty()) {
    modp::poly_rem(a, b, p);
    std::swap(a, b);
  }
  modp::make_monic(a, p);
  std::vector<Integer> lifted(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) lifted[i] = Integer(static_cast<unsigned long>(a[i]));
  return IntPoly(std::move(lifted));
}

Integer discriminant_of_matrix(const IntMatrix& a) {
  if (!a.square()) throw DimensionError("discriminant_of_matrix: matrix must be square");
  if (!a.symmetric()) throw ArgumentError("discriminant_of_matrix: matrix must be symmetric");
  return discriminant(charpoly(a));
}

}  // namespace gspec
