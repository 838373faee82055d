#include "gspec/snf.hpp"

#include <utility>

#include "gspec/errors.hpp"
#include "gspec/numtheory.hpp"

namespace gspec {

namespace {

// Working state with the invariant  M = U * A * V  and  V * V_inverse = I.
class Reducer {
 public:
  explicit Reducer(const IntMatrix& m)
      : a_(m),
        u_(IntMatrix::identity(m.rows())),
        v_(IntMatrix::identity(m.cols())),
        vinv_(IntMatrix::identity(m.cols())) {}

  void run() {
    const std::size_t steps = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (!reduce_block(t)) break;
      if (a_(t, t) < 0) negate_row(t);
    }
  }

  SnfDecomposition take() { return {std::move(u_), std::move(a_), std::move(v_), std::move(vinv_)}; }

 private:
  // Clears row t and column t outside the pivot and makes the pivot divide
  // the rest of the trailing block. False if the trailing block is zero.
  bool reduce_block(std::size_t t) {
    for (;;) {
      std::size_t pi = 0, pj = 0;
      if (!smallest_entry(t, pi, pj)) return false;
      if (pi != t) swap_rows(t, pi);
      if (pj != t) swap_cols(t, pj);

      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (a_(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
        add_row(i, t, -q);
        if (a_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (a_(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
        add_col(j, t, -q);
        if (a_(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < a_.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < a_.cols(); ++j)
          if (mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t()) == 0) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) return true;
    }
  }

  // Smallest nonzero |entry| in the trailing block, first in row-major order on ties.
  bool smallest_entry(std::size_t t, std::size_t& bi, std::size_t& bj) const {
    const Integer* best = nullptr;
    for (std::size_t i = t; i < a_.rows(); ++i)
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const Integer& x = a_(i, j);
        if (x == 0) continue;
        if (best == nullptr || mpz_cmpabs(x.get_mpz_t(), best->get_mpz_t()) < 0) {
          best = &x;
          bi = i;
          bj = j;
        }
      }
    return best != nullptr;
  }

  // row i += k * row j
  void add_row(std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t c = 0; c < a_.cols(); ++c)
      mpz_addmul(a_(i, c).get_mpz_t(), k.get_mpz_t(), a_(j, c).get_mpz_t());
    for (std::size_t r = 0; r < u_.rows(); ++r)
      mpz_submul(u_(r, j).get_mpz_t(), k.get_mpz_t(), u_(r, i).get_mpz_t());
  }

  // col j += k * col i
  void add_col(std::size_t j, std::size_t i, const Integer& k) {
    for (std::size_t r = 0; r < a_.rows(); ++r)
      mpz_addmul(a_(r, j).get_mpz_t(), k.get_mpz_t(), a_(r, i).get_mpz_t());
    for (std::size_t c = 0; c < v_.cols(); ++c)
      mpz_submul(v_(i, c).get_mpz_t(), k.get_mpz_t(), v_(j, c).get_mpz_t());
    for (std::size_t r = 0; r < vinv_.rows(); ++r)
      mpz_addmul(vinv_(r, j).get_mpz_t(), k.get_mpz_t(), vinv_(r, i).get_mpz_t());
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    for (std::size_t r = 0; r < u_.rows(); ++r) std::swap(u_(r, i), u_(r, j));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    for (std::size_t c = 0; c < v_.cols(); ++c) std::swap(v_(i, c), v_(j, c));
    for (std::size_t r = 0; r < vinv_.rows(); ++r) std::swap(vinv_(r, i), vinv_(r, j));
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = -a_(i, c);
    for (std::size_t r = 0; r < u_.rows(); ++r) u_(r, i) = -u_(r, i);
  }

  IntMatrix a_, u_, v_, vinv_;
};

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& m) {
  Reducer r(m);
  r.run();
  return r.take();
}

std::vector<Integer> elementary_divisors(const IntMatrix& m) {
  const auto snf = smith_normal_form(m);
  std::vector<Integer> d;
  const std::size_t k = std::min(m.rows(), m.cols());
  d.reserve(k);
  for (std::size_t i = 0; i < k; ++i) d.push_back(snf.S(i, i));
  return d;
}

PSquareSolution psquare_solvable(const IntMatrix& m, std::uint64_t p) {
  if (!m.square()) throw DimensionError("psquare_solvable: matrix must be square");
  if (!is_prime(p)) throw ArgumentError("psquare_solvable: modulus " + std::to_string(p) + " is not prime");
  const std::size_t n = m.rows();
  if (n == 0) return {};
  const auto snf = smith_normal_form(m);
  const Integer p2 = Integer(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p);
  PSquareSolution out;
  out.solvable = mpz_divisible_p(snf.S(n - 1, n - 1).get_mpz_t(), p2.get_mpz_t()) != 0;
  if (out.solvable) {
    // S e_n = 0 mod p^2, so x = V^{-1} e_n works; V^{-1} is invertible mod p.
    std::vector<Integer> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = snf.V_inverse(i, n - 1);
    out.witness = std::move(x);
  }
  return out;
}

}  // namespace gspec
