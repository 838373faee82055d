#include "gspec/numtheory.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "gspec/errors.hpp"

namespace gspec {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialBound = 1u << 16;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> sieve(kTrialBound, true);
    std::vector<unsigned long> out;
    for (u64 i = 2; i < kTrialBound; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (u64 j = i * i; j < kTrialBound; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

constexpr std::array<unsigned, 12> kDeterministicBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr std::array<unsigned, 21> kProbableBases{2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                                  37, 41, 43, 47, 53, 59, 61, 67, 71, 73};

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool strong_probable_prime(u64 n, u64 a) {
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool strong_probable_prime_big(const Integer& n, unsigned a) {
  Integer d = n - 1;
  const mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  const Integer n_minus_1 = n - 1;
  Integer x;
  Integer base(a);
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n_minus_1) return true;
  }
  return false;
}

// Brent's cycle-finding variant of Pollard rho. Every kRhoBatch evaluations of
// the map are accumulated into one product before a gcd; each batch costs one
// budget unit. Returns a nontrivial factor or 0 when the budget runs out.
Integer rho(const Integer& n, u64& budget_left, u64& used) {
  Integer x, y, ys, q, g, diff;
  for (unsigned long c = 1; budget_left > 0; ++c) {
    auto step = [&](Integer& v) {
      mpz_mul(v.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
      mpz_add_ui(v.get_mpz_t(), v.get_mpz_t(), c);
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    y = 2;
    q = 1;
    g = 1;
    u64 r = 1;
    bool exhausted = false;
    while (g == 1 && !exhausted) {
      x = y;
      for (u64 i = 0; i < r; ++i) step(y);
      for (u64 k = 0; k < r && g == 1;) {
        if (budget_left == 0) {
          exhausted = true;
          break;
        }
        --budget_left;
        ++used;
        ys = y;
        const u64 batch = std::min<u64>(kRhoBatch, r - k);
        for (u64 i = 0; i < batch; ++i) {
          step(y);
          mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
          mpz_mul(q.get_mpz_t(), q.get_mpz_t(), diff.get_mpz_t());
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += batch;
      }
      r *= 2;
    }
    if (exhausted) break;
    if (g == n) {
      // The batch overshot; replay it one step at a time.
      do {
        step(ys);
        mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), ys.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

// Largest k >= 2 with c = r^k, or 0.
unsigned perfect_power(const Integer& c, Integer& root) {
  if (mpz_perfect_power_p(c.get_mpz_t()) == 0) return 0;
  const std::size_t bits = mpz_sizeinbase(c.get_mpz_t(), 2);
  for (unsigned k = static_cast<unsigned>(bits); k >= 2; --k)
    if (mpz_root(root.get_mpz_t(), c.get_mpz_t(), k) != 0) return k;
  return 0;
}

struct Piece {
  Integer value;
  unsigned multiplicity;
};

struct FactorState {
  std::map<Integer, unsigned> primes;
  std::vector<Piece> pending;
  std::vector<Piece> unresolved;
  u64 budget_left = 0;
  u64 used = 0;

  bool has_square() const {
    return std::any_of(primes.begin(), primes.end(), [](const auto& kv) { return kv.second >= 2; }) ||
           std::any_of(unresolved.begin(), unresolved.end(),
                       [](const Piece& p) { return p.multiplicity >= 2; });
  }
};

void trial_divide(Integer& m, FactorState& st, bool stop_on_square) {
  for (unsigned long p : small_primes()) {
    if (mpz_cmp_ui(m.get_mpz_t(), p * p) < 0) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    do {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    } while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0);
    st.primes[Integer(p)] += e;
    if (stop_on_square && e >= 2) return;
  }
}

// Divide unresolved pieces by every known prime and by each other's gcds.
// Returns true when anything was moved back to the pending list.
bool refine(FactorState& st) {
  bool changed = false;
  std::vector<Piece> kept;
  for (auto& piece : st.unresolved) {
    bool split = false;
    for (auto& [p, e] : st.primes) {
      while (mpz_divisible_p(piece.value.get_mpz_t(), p.get_mpz_t()) != 0) {
        mpz_divexact(piece.value.get_mpz_t(), piece.value.get_mpz_t(), p.get_mpz_t());
        e += piece.multiplicity;
        split = true;
      }
    }
    if (split) {
      st.pending.push_back(std::move(piece));
      changed = true;
    } else {
      kept.push_back(std::move(piece));
    }
  }
  st.unresolved = std::move(kept);

  Integer g;
  for (std::size_t i = 0; i < st.unresolved.size(); ++i)
    for (std::size_t j = i + 1; j < st.unresolved.size(); ++j) {
      auto& a = st.unresolved[i];
      auto& b = st.unresolved[j];
      if (a.value == 1 || b.value == 1) continue;
      if (a.value == b.value) {
        a.multiplicity += b.multiplicity;
        b.value = 1;
        changed = true;
        continue;
      }
      mpz_gcd(g.get_mpz_t(), a.value.get_mpz_t(), b.value.get_mpz_t());
      if (g == 1) continue;
      st.pending.push_back({g, a.multiplicity});
      st.pending.push_back({g, b.multiplicity});
      a.value /= g;
      b.value /= g;
      changed = true;
    }
  std::vector<Piece> still;
  for (auto& piece : st.unresolved) {
    if (piece.value == 1) continue;
    if (changed)
      st.pending.push_back(std::move(piece));
    else
      still.push_back(std::move(piece));
  }
  st.unresolved = std::move(still);
  return changed;
}

void resolve(FactorState& st, bool stop_on_square) {
  const Integer trial_square = Integer(kTrialBound) * Integer(kTrialBound);
  Integer root;
  do {
    while (!st.pending.empty()) {
      if (stop_on_square && st.has_square()) return;
      Piece piece = std::move(st.pending.back());
      st.pending.pop_back();
      if (piece.value == 1) continue;
      // Trial division has removed every prime below kTrialBound.
      if (piece.value < trial_square || is_prime(piece.value)) {
        st.primes[piece.value] += piece.multiplicity;
        continue;
      }
      if (unsigned k = perfect_power(piece.value, root)) {
        st.pending.push_back({root, piece.multiplicity * k});
        continue;
      }
      Integer f = rho(piece.value, st.budget_left, st.used);
      if (f == 0) {
        st.unresolved.push_back(std::move(piece));
        continue;
      }
      Integer other = piece.value / f;
      st.pending.push_back({std::move(f), piece.multiplicity});
      st.pending.push_back({std::move(other), piece.multiplicity});
    }
  } while (refine(st));
}

// After an early exit: pending pieces that are prime join the prime list so
// the evidence never labels a prime as an unsplit cofactor. No rho work.
void settle_pending(FactorState& st) {
  const Integer trial_square = Integer(kTrialBound) * Integer(kTrialBound);
  for (auto& piece : st.pending) {
    if (piece.value == 1) continue;
    if (piece.value < trial_square || is_prime(piece.value))
      st.primes[piece.value] += piece.multiplicity;
    else
      st.unresolved.push_back(std::move(piece));
  }
  st.pending.clear();
}

Factorization collect(const FactorState& st) {
  Factorization out;
  for (const auto& [p, e] : st.primes) out.prime_powers.push_back({p, e});
  Integer residual = 1;
  for (const auto& piece : st.unresolved) {
    Integer t;
    mpz_pow_ui(t.get_mpz_t(), piece.value.get_mpz_t(), piece.multiplicity);
    residual *= t;
  }
  for (const auto& piece : st.pending) {
    Integer t;
    mpz_pow_ui(t.get_mpz_t(), piece.value.get_mpz_t(), piece.multiplicity);
    residual *= t;
  }
  if (residual != 1) out.residual = residual;
  out.budget_used = st.used;
  return out;
}

}  // namespace

Integer Factorization::product() const {
  Integer acc = 1;
  for (const auto& pp : prime_powers) {
    Integer t;
    mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    acc *= t;
  }
  if (residual) acc *= *residual;
  return acc;
}

std::string SquareFreeStatus::to_string() const {
  switch (tag_) {
    case Tag::OddSquareFree:
      return "OddSquareFree";
    case Tag::Even:
      return "Even";
    case Tag::HasSquareFactor:
      return "HasSquareFactor(" + (prime_ ? prime_->get_str() : std::string("?")) + ")";
    case Tag::Zero:
      return "Zero";
    case Tag::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (unsigned p : kDeterministicBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  return std::all_of(kDeterministicBases.begin(), kDeterministicBases.end(),
                     [n](unsigned a) { return strong_probable_prime(n, a); });
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t()) != 0) return is_prime(static_cast<u64>(n.get_ui()));
  for (unsigned p : kProbableBases)
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) return false;
  return std::all_of(kProbableBases.begin(), kProbableBases.end(),
                     [&n](unsigned a) { return strong_probable_prime_big(n, a); });
}

Factorization factor(const Integer& n, std::uint64_t budget) {
  if (n == 0) throw ArgumentError("factor: zero has no factorization");
  FactorState st;
  st.budget_left = budget;
  Integer m = abs(n);
  trial_divide(m, st, false);
  if (m != 1) st.pending.push_back({m, 1});
  resolve(st, false);
  return collect(st);
}

SquareFreeAnalysis squarefree_analysis(const Integer& n, std::uint64_t budget) {
  SquareFreeAnalysis out;
  if (n == 0) {
    out.status = SquareFreeStatus::zero();
    return out;
  }
  if (mpz_even_p(n.get_mpz_t()) != 0) {
    out.status = SquareFreeStatus::even();
    return out;
  }
  FactorState st;
  st.budget_left = budget;
  Integer m = abs(n);
  trial_divide(m, st, true);
  // Finishing trial division is cheap and keeps small primes out of the residual.
  if (st.has_square()) trial_divide(m, st, false);
  if (m != 1) st.pending.push_back({m, 1});
  if (!st.has_square()) resolve(st, true);
  settle_pending(st);
  out.factorization = collect(st);

  for (const auto& [p, e] : st.primes)
    if (e >= 2) {
      out.status = SquareFreeStatus::square_factor(p);
      return out;
    }
  for (const auto& piece : st.unresolved)
    if (piece.multiplicity >= 2) {
      out.status = SquareFreeStatus::square_factor(piece.value);
      return out;
    }
  out.status = out.factorization.complete() ? SquareFreeStatus::odd_square_free() : SquareFreeStatus::unknown();
  return out;
}

SquareFreeStatus squarefree_status(const Integer& n, std::uint64_t budget) {
  return squarefree_analysis(n, budget).status;
}

std::string format_factorization(const Factorization& f) {
  std::ostringstream os;
  bool first = true;
  for (const auto& pp : f.prime_powers) {
    if (!first) os << " · ";
    first = false;
    os << pp.prime.get_str();
    if (pp.exponent > 1) os << '^' << pp.exponent;
  }
  if (f.residual) {
    if (!first) os << " · ";
    first = false;
    os << "(C: " << f.residual->get_str() << ')';
  }
  if (first) os << '1';
  return os.str();
}

}  // namespace gspec
