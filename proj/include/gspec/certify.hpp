#pragma once

// Certificates for rational orthogonal conjugation and for graphs being
// determined by their generalized spectrum.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gspec/exactalg.hpp"
#include "gspec/graph.hpp"
#include "gspec/numtheory.hpp"

namespace gspec {

using Rational = mpq_class;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  explicit RationalMatrix(const IntMatrix& m);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  // Entries are canonicalized on every write through set().
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, Rational value);

  RationalMatrix transpose() const;
  bool is_integral() const;
  // Requires is_integral().
  IntMatrix to_integer() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// Least l >= 1 with l*Q integral.
Integer level(const RationalMatrix& q);
bool is_orthogonal(const RationalMatrix& q);
bool is_signed_permutation(const RationalMatrix& q);

struct ConjugationReport {
  bool orthogonal = false;
  bool b_integral = false;
  std::optional<IntMatrix> b;  // Q^T A Q when integral
  Integer level;
  Integer delta_a;
  // Every prime factor of the level divides delta_a.
  bool level_primes_divide_disc = false;
};

ConjugationReport verify_conjugation(const IntMatrix& a, const RationalMatrix& q);

struct MatrixCertificate {
  bool certified = false;
  Integer delta_a;
  SquareFreeStatus status = SquareFreeStatus::unknown();
  Factorization evidence;
};

// Certified means every rational orthogonal Q with Q^T A Q integral is a
// signed permutation matrix. Requires A symmetric.
MatrixCertificate certify_matrix(const IntMatrix& a, std::uint64_t budget = kDefaultBudget);

enum class Verdict { DGSCertified, Inconclusive, NotControllable, Unknown };
enum class Criterion { WalkDeterminant, DiscriminantGcd };

std::string to_string(Verdict v);
std::string to_string(Criterion c);

struct CertificateReport {
  Criterion criterion = Criterion::DiscriminantGcd;
  std::size_t n = 0;
  Integer det_w;
  Integer reduced_det_w;                 // det W / 2^floor(n/2)
  std::optional<Integer> delta_a;        // computed by the gcd criterion only
  std::optional<Integer> d;              // gcd(|reduced_det_w|, |delta_a|)
  std::optional<SquareFreeStatus> status_main;
  std::optional<SquareFreeStatus> status_main2;
  Verdict verdict = Verdict::Unknown;
  std::optional<Factorization> evidence_main;
  std::optional<Factorization> evidence_main2;
  std::uint64_t budget_used = 0;
};

// Certificate from reduced det W being odd and square-free.
CertificateReport certify_graph_main(const Graph& g, std::uint64_t budget = kDefaultBudget);
// Certificate from gcd(reduced det W, delta_A) being odd and square-free.
CertificateReport certify_graph_main2(const Graph& g, std::uint64_t budget = kDefaultBudget);

struct GraphCertificates {
  CertificateReport main;
  CertificateReport main2;
};

// Both criteria, sharing the walk determinant.
GraphCertificates certify_graph(const Graph& g, std::uint64_t budget = kDefaultBudget);

// Rows of decimal strings.
nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const SquareFreeStatus& s);
nlohmann::json to_json(const Factorization& f);
nlohmann::json to_json(const CertificateReport& r);
nlohmann::json to_json(const MatrixCertificate& c);
nlohmann::json to_json(const ConjugationReport& c);

}  // namespace gspec
