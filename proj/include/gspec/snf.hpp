#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gspec/exactalg.hpp"

namespace gspec {

// M = U * S * V with U, V unimodular and S = diag(d_1, ..., d_n) where
// d_i >= 0 and d_i | d_{i+1}. The inverse of V is kept for witness
// construction.
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  IntMatrix V_inverse;
};

SnfDecomposition smith_normal_form(const IntMatrix& m);

std::vector<Integer> elementary_divisors(const IntMatrix& m);

struct PSquareSolution {
  bool solvable = false;
  std::optional<std::vector<Integer>> witness;  // Mx = 0 mod p^2, x != 0 mod p
};

// Decides whether Mx = 0 (mod p^2) has a solution with x != 0 (mod p), which
// happens exactly when p^2 divides the last elementary divisor.
PSquareSolution psquare_solvable(const IntMatrix& m, std::uint64_t p);

}  // namespace gspec
