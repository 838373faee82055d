#include "gspec/certify.hpp"

#include "gspec/errors.hpp"

namespace gspec {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(const IntMatrix& m) : RationalMatrix(m.rows(), m.cols()) {
  for (std::size_t i = 0; i < rows_ * cols_; ++i) entries_[i] = Rational(m.entries()[i]);
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

void RationalMatrix::set(std::size_t i, std::size_t j, Rational value) {
  value.canonicalize();
  entries_[i * cols_ + j] = std::move(value);
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = (*this)(i, j);
  return t;
}

bool RationalMatrix::is_integral() const {
  for (const auto& x : entries_)
    if (x.get_den() != 1) return false;
  return true;
}

IntMatrix RationalMatrix::to_integer() const {
  if (!is_integral()) throw ArgumentError("rational matrix has non-integral entries");
  IntMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).get_num();
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("rational matrix product shape mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Rational acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k)
        if (a(i, k) != 0) acc += a(i, k) * b(k, j);
      c.set(i, j, std::move(acc));
    }
  return c;
}

Integer level(const RationalMatrix& q) {
  Integer l = 1;
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q(i, j).get_den_mpz_t());
  return l;
}

bool is_orthogonal(const RationalMatrix& q) {
  if (!q.square()) return false;
  return q.transpose() * q == RationalMatrix::identity(q.rows());
}

bool is_signed_permutation(const RationalMatrix& q) {
  if (!q.square()) return false;
  const std::size_t n = q.rows();
  std::vector<int> col_hits(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int row_hits = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = q(i, j);
      if (x == 0) continue;
      if (x != 1 && x != -1) return false;
      ++row_hits;
      ++col_hits[j];
    }
    if (row_hits != 1) return false;
  }
  for (int c : col_hits)
    if (c != 1) return false;
  return true;
}

namespace {

// True iff every prime dividing l also divides m (m = 0 is divisible by all).
bool radical_divides(Integer l, const Integer& m) {
  if (m == 0) return true;
  Integer g;
  for (;;) {
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), m.get_mpz_t());
    if (g == 1) break;
    l /= g;
  }
  return l == 1;
}

void require_symmetric(const IntMatrix& a, const char* who) {
  if (!a.square()) throw DimensionError(std::string(who) + ": matrix must be square");
  if (!a.symmetric()) throw ArgumentError(std::string(who) + ": matrix must be symmetric");
}

Verdict verdict_from(const SquareFreeStatus& s) {
  switch (s.tag()) {
    case SquareFreeStatus::Tag::OddSquareFree:
      return Verdict::DGSCertified;
    case SquareFreeStatus::Tag::Unknown:
      return Verdict::Unknown;
    default:
      return Verdict::Inconclusive;
  }
}

// Fills det_w and reduced_det_w. Returns false when W is singular.
bool walk_determinant(const Graph& g, CertificateReport& r) {
  r.n = g.order();
  r.det_w = det(walk_matrix(g));
  if (r.det_w == 0) {
    r.reduced_det_w = 0;
    r.verdict = Verdict::NotControllable;
    return false;
  }
  const unsigned long shift = r.n / 2;
  if (mpz_divisible_2exp_p(r.det_w.get_mpz_t(), shift) == 0)
    throw InvariantViolation("2^" + std::to_string(shift) + " does not divide det W = " + r.det_w.get_str());
  mpz_tdiv_q_2exp(r.reduced_det_w.get_mpz_t(), r.det_w.get_mpz_t(), shift);
  return true;
}

void apply_main(CertificateReport& r, std::uint64_t budget) {
  auto analysis = squarefree_analysis(r.reduced_det_w, budget);
  r.status_main = analysis.status;
  r.budget_used += analysis.factorization.budget_used;
  r.evidence_main = std::move(analysis.factorization);
  r.verdict = verdict_from(*r.status_main);
}

void apply_main2(const Graph& g, CertificateReport& r, std::uint64_t budget) {
  r.delta_a = discriminant_of_matrix(adjacency(g));
  r.d = gcd(r.reduced_det_w, *r.delta_a);
  auto analysis = squarefree_analysis(*r.d, budget);
  r.status_main2 = analysis.status;
  r.budget_used += analysis.factorization.budget_used;
  r.evidence_main2 = std::move(analysis.factorization);
  r.verdict = verdict_from(*r.status_main2);
}

}  // namespace

ConjugationReport verify_conjugation(const IntMatrix& a, const RationalMatrix& q) {
  require_symmetric(a, "verify_conjugation");
  if (!q.square() || q.rows() != a.rows())
    throw DimensionError("verify_conjugation: Q must be " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.rows()));
  ConjugationReport r;
  r.orthogonal = is_orthogonal(q);
  const RationalMatrix b = q.transpose() * (RationalMatrix(a) * q);
  r.b_integral = b.is_integral();
  if (r.b_integral) r.b = b.to_integer();
  r.level = level(q);
  r.delta_a = discriminant_of_matrix(a);
  r.level_primes_divide_disc = radical_divides(r.level, r.delta_a);
  return r;
}

MatrixCertificate certify_matrix(const IntMatrix& a, std::uint64_t budget) {
  require_symmetric(a, "certify_matrix");
  MatrixCertificate c;
  c.delta_a = discriminant_of_matrix(a);
  auto analysis = squarefree_analysis(c.delta_a, budget);
  c.status = analysis.status;
  c.evidence = std::move(analysis.factorization);
  c.certified = c.status.is(SquareFreeStatus::Tag::OddSquareFree);
  return c;
}

CertificateReport certify_graph_main(const Graph& g, std::uint64_t budget) {
  CertificateReport r;
  r.criterion = Criterion::WalkDeterminant;
  if (walk_determinant(g, r)) apply_main(r, budget);
  return r;
}

CertificateReport certify_graph_main2(const Graph& g, std::uint64_t budget) {
  CertificateReport r;
  r.criterion = Criterion::DiscriminantGcd;
  if (walk_determinant(g, r)) apply_main2(g, r, budget);
  return r;
}

GraphCertificates certify_graph(const Graph& g, std::uint64_t budget) {
  GraphCertificates out;
  out.main.criterion = Criterion::WalkDeterminant;
  const bool controllable = walk_determinant(g, out.main);
  out.main2 = out.main;
  out.main2.criterion = Criterion::DiscriminantGcd;
  if (controllable) {
    apply_main(out.main, budget);
    apply_main2(g, out.main2, budget);
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::DGSCertified:
      return "DGSCertified";
    case Verdict::Inconclusive:
      return "Inconclusive";
    case Verdict::NotControllable:
      return "NotControllable";
    case Verdict::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

std::string to_string(Criterion c) {
  return c == Criterion::WalkDeterminant ? "walk_determinant" : "discriminant_gcd";
}

namespace {

nlohmann::json big(const Integer& x) { return x.get_str(); }

template <class T>
nlohmann::json opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, Integer>)
    return big(*v);
  else
    return to_json(*v);
}

}  // namespace

nlohmann::json to_json(const IntMatrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (const auto& x : m.row(i)) row.push_back(big(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const SquareFreeStatus& s) {
  const char* tag = "Unknown";
  switch (s.tag()) {
    case SquareFreeStatus::Tag::OddSquareFree:
      tag = "OddSquareFree";
      break;
    case SquareFreeStatus::Tag::Even:
      tag = "Even";
      break;
    case SquareFreeStatus::Tag::HasSquareFactor:
      tag = "HasSquareFactor";
      break;
    case SquareFreeStatus::Tag::Zero:
      tag = "Zero";
      break;
    case SquareFreeStatus::Tag::Unknown:
      break;
  }
  return {{"tag", tag}, {"prime", opt(s.prime())}};
}

nlohmann::json to_json(const Factorization& f) {
  auto powers = nlohmann::json::array();
  for (const auto& pp : f.prime_powers) powers.push_back({{"prime", big(pp.prime)}, {"exponent", pp.exponent}});
  return {{"prime_powers", std::move(powers)},
          {"residual", opt(f.residual)},
          {"budget_used", f.budget_used},
          {"text", format_factorization(f)}};
}

nlohmann::json to_json(const CertificateReport& r) {
  return {{"criterion", to_string(r.criterion)},
          {"n", r.n},
          {"det_W", big(r.det_w)},
          {"reduced_det_W", big(r.reduced_det_w)},
          {"delta_A", opt(r.delta_a)},
          {"d", opt(r.d)},
          {"status_main", opt(r.status_main)},
          {"status_main2", opt(r.status_main2)},
          {"verdict", to_string(r.verdict)},
          {"evidence_main", opt(r.evidence_main)},
          {"evidence_main2", opt(r.evidence_main2)},
          {"budget_used", r.budget_used}};
}

nlohmann::json to_json(const MatrixCertificate& c) {
  return {{"certified", c.certified},
          {"delta_A", big(c.delta_a)},
          {"status", to_json(c.status)},
          {"evidence", to_json(c.evidence)}};
}

nlohmann::json to_json(const ConjugationReport& c) {
  return {{"orthogonal", c.orthogonal},
          {"B_integral", c.b_integral},
          {"B", c.b ? to_json(*c.b) : nlohmann::json(nullptr)},
          {"level", big(c.level)},
          {"delta_A", big(c.delta_a)},
          {"level_primes_divide_disc", c.level_primes_divide_disc}};
}

}  // namespace gspec
