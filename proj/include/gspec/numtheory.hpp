#pragma once

// Integer factorization under a work budget and the odd/square-free test.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gspec/exactalg.hpp"

namespace gspec {

// One budget unit is one batch of kRhoBatch Pollard-rho iterations.
inline constexpr std::uint64_t kRhoBatch = 256;
// Enough for every composite below 2^64 to split.
inline constexpr std::uint64_t kDefaultBudget = 4096;

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  std::vector<PrimePower> prime_powers;  // strictly increasing primes
  std::optional<Integer> residual;       // unsplit composite cofactor, > 1
  std::uint64_t budget_used = 0;

  bool complete() const noexcept { return !residual.has_value(); }
  Integer product() const;
};

class SquareFreeStatus {
 public:
  enum class Tag { OddSquareFree, Even, HasSquareFactor, Zero, Unknown };

  static SquareFreeStatus odd_square_free() { return SquareFreeStatus(Tag::OddSquareFree); }
  static SquareFreeStatus even() { return SquareFreeStatus(Tag::Even); }
  static SquareFreeStatus zero() { return SquareFreeStatus(Tag::Zero); }
  static SquareFreeStatus unknown() { return SquareFreeStatus(Tag::Unknown); }
  static SquareFreeStatus square_factor(Integer p) {
    SquareFreeStatus s(Tag::HasSquareFactor);
    s.prime_ = std::move(p);
    return s;
  }

  Tag tag() const noexcept { return tag_; }
  bool is(Tag t) const noexcept { return tag_ == t; }
  // The prime whose square divides the input; only for HasSquareFactor.
  const std::optional<Integer>& prime() const noexcept { return prime_; }

  std::string to_string() const;

  friend bool operator==(const SquareFreeStatus&, const SquareFreeStatus&) = default;

 private:
  explicit SquareFreeStatus(Tag t) : tag_(t) {}
  Tag tag_;
  std::optional<Integer> prime_;
};

struct SquareFreeAnalysis {
  SquareFreeStatus status = SquareFreeStatus::unknown();
  Factorization factorization;  // partial when status was decided early
};

// Nonnegative gcd, gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

// Miller-Rabin. Deterministic below 2^64 (bases 2..37); above that the same
// twelve prime bases plus 41..73 make it a strong probable-prime test.
bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

// Factors |n| by trial division, perfect-power detection and Brent's
// variant of Pollard rho. Whatever cannot be split within budget units is
// returned as the residual.
Factorization factor(const Integer& n, std::uint64_t budget = kDefaultBudget);

SquareFreeAnalysis squarefree_analysis(const Integer& n,
                                       std::uint64_t budget = kDefaultBudget);
SquareFreeStatus squarefree_status(const Integer& n, std::uint64_t budget = kDefaultBudget);

// "p^e · q · (C: residual)"
std::string format_factorization(const Factorization& f);

}  // namespace gspec
