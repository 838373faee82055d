#include "cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gspec/certify.hpp"
#include "gspec/errors.hpp"
#include "gspec/experiment.hpp"
#include "gspec/graph.hpp"
#include "gspec/numtheory.hpp"
#include "gspec/oracle.hpp"
#include "gspec/samples.hpp"
#include "gspec/snf.hpp"
#include "gspec/textio.hpp"

namespace gspec::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::string command;
  bool json = false;
};

// A file that cannot be read is reported like malformed input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(Context& ctx, const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << ctx.in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "'");
  buf << f.rdbuf();
  return buf.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// The body is a pure function of the inputs; everything run-specific lives
// in metadata.
void emit_json(Context& ctx, json body, json extra = json::object()) {
  json meta = {{"tool", "gspec"}, {"version", kVersion}, {"command", ctx.command}, {"timestamp", utc_timestamp()}};
  meta.update(extra);
  ctx.out << json{{"body", std::move(body)}, {"metadata", std::move(meta)}}.dump(2) << '\n';
}

std::string headline(const CertificateReport& main2) {
  std::string s = to_string(main2.verdict);
  if (main2.d && main2.verdict != Verdict::NotControllable) s += ", d=" + main2.d->get_str();
  return s;
}

std::string status_text(const std::optional<SquareFreeStatus>& s) { return s ? s->to_string() : "-"; }

std::string evidence_text(const std::optional<Factorization>& f) { return f ? format_factorization(*f) : "-"; }

void print_certificates(Context& ctx, const Graph& g, const GraphCertificates& c) {
  auto& o = ctx.out;
  o << headline(c.main2) << '\n';
  o << "  n = " << g.order();
  if (g.order() <= kGraph6MaxOrder) o << ", graph6 " << emit_graph6(g);
  o << '\n';
  o << "  det W = " << c.main.det_w.get_str() << '\n';
  if (c.main.verdict == Verdict::NotControllable) return;
  o << "  det W / 2^" << g.order() / 2 << " = " << evidence_text(c.main.evidence_main) << '\n';
  o << "  walk criterion: " << to_string(c.main.verdict) << " (" << status_text(c.main.status_main) << ")\n";
  if (c.main2.delta_a) o << "  delta_A = " << c.main2.delta_a->get_str() << '\n';
  o << "  d = " << evidence_text(c.main2.evidence_main2) << '\n';
  o << "  gcd criterion: " << to_string(c.main2.verdict) << " (" << status_text(c.main2.status_main2) << ")\n";
}

int cmd_check_graph(Context& ctx, const std::string& path, std::uint64_t budget) {
  const auto graphs = parse_graphs(read_input(ctx, path));
  json items = json::array();
  bool first = true;
  for (const Graph& g : graphs) {
    const auto c = certify_graph(g, budget);
    if (ctx.json) {
      items.push_back({{"graph6", g.order() <= kGraph6MaxOrder ? json(emit_graph6(g)) : json(nullptr)},
                       {"n", g.order()},
                       {"headline", headline(c.main2)},
                       {"main", to_json(c.main)},
                       {"main2", to_json(c.main2)}});
    } else {
      if (!first) ctx.out << '\n';
      print_certificates(ctx, g, c);
    }
    first = false;
  }
  if (ctx.json) emit_json(ctx, {{"graphs", std::move(items)}}, {{"budget", budget}});
  return kOk;
}

int cmd_check_matrix(Context& ctx, const std::string& path, std::uint64_t budget) {
  const IntMatrix a = parse_matrix(read_input(ctx, path));
  const auto c = certify_matrix(a, budget);
  const std::string verdict = c.certified ? "Certified" : "NotCertified";
  if (ctx.json) {
    json body = to_json(c);
    body["verdict"] = verdict;
    emit_json(ctx, std::move(body), {{"budget", budget}});
    return kOk;
  }
  ctx.out << verdict;
  if (!c.certified) ctx.out << " (" << c.status.to_string() << ")";
  ctx.out << '\n';
  ctx.out << "  delta_A = " << c.delta_a.get_str() << '\n';
  if (c.delta_a != 0) ctx.out << "  |delta_A| = " << format_factorization(c.evidence) << '\n';
  return kOk;
}

int cmd_verify_q(Context& ctx, const std::string& a_path, const std::string& q_path) {
  const IntMatrix a = parse_matrix(read_input(ctx, a_path));
  const RationalMatrix q = parse_rational_matrix(read_input(ctx, q_path));
  if (!a.symmetric()) throw ArgumentError("verify-q: A must be symmetric");
  const auto r = verify_conjugation(a, q);
  const bool signed_perm = is_signed_permutation(q);
  if (ctx.json) {
    json body = to_json(r);
    body["signed_permutation"] = signed_perm;
    emit_json(ctx, std::move(body));
    return kOk;
  }
  auto& o = ctx.out;
  o << "orthogonal: " << (r.orthogonal ? "yes" : "no") << '\n';
  o << "signed permutation: " << (signed_perm ? "yes" : "no") << '\n';
  o << "level: " << r.level.get_str() << '\n';
  o << "Q^T A Q integral: " << (r.b_integral ? "yes" : "no") << '\n';
  if (r.b) o << "B = Q^T A Q:\n" << format_matrix(*r.b);
  o << "delta_A = " << r.delta_a.get_str() << '\n';
  o << "level primes divide delta_A: " << (r.level_primes_divide_disc ? "yes" : "no") << '\n';
  return kOk;
}

void append_csv(const std::string& path, const ExperimentRow& row) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const bool fresh = !fs::exists(path, ec) || fs::file_size(path, ec) == 0;
  std::ofstream f(path, std::ios::app);
  if (!f) throw InputError("cannot write '" + path + "'");
  if (fresh) f << csv_header() << '\n';
  f << to_csv(row) << '\n';
}

int cmd_experiment(Context& ctx, const ExperimentConfig& cfg, const std::string& csv) {
  const auto result = run_experiment(cfg);
  if (!csv.empty()) append_csv(csv, result.row);
  if (ctx.json) {
    emit_json(ctx, to_json(result.row), {{"budget", cfg.budget}, {"workers", cfg.workers}});
    return kOk;
  }
  ctx.out << csv_header() << '\n' << to_csv(result.row) << '\n';
  return kOk;
}

int cmd_disc(Context& ctx, const std::string& path, bool matrix, std::uint64_t budget) {
  const std::string text = read_input(ctx, path);
  Integer delta;
  json source;
  if (matrix) {
    const IntMatrix a = parse_matrix(text);
    delta = discriminant_of_matrix(a);
    source = {{"kind", "matrix"}, {"n", a.rows()}};
  } else {
    const IntPoly f = parse_poly(text);
    delta = discriminant(f);
    source = {{"kind", "polynomial"}, {"coefficients", format_poly(f)}};
  }
  std::optional<Factorization> fac;
  if (delta != 0) fac = factor(delta, budget);
  if (ctx.json) {
    emit_json(ctx,
              {{"source", std::move(source)},
               {"discriminant", delta.get_str()},
               {"factorization", fac ? to_json(*fac) : json(nullptr)},
               {"status", to_json(squarefree_status(delta, budget))}},
              {{"budget", budget}});
    return kOk;
  }
  ctx.out << delta.get_str() << '\n';
  if (fac) ctx.out << "  |disc| = " << format_factorization(*fac) << '\n';
  return kOk;
}

int cmd_snf(Context& ctx, const std::string& path) {
  const IntMatrix m = parse_matrix(read_input(ctx, path));
  const auto snf = smith_normal_form(m);
  if (ctx.json) {
    json divisors = json::array();
    for (const auto& d : elementary_divisors(m)) divisors.push_back(d.get_str());
    emit_json(ctx, {{"S", to_json(snf.S)},
                    {"U", to_json(snf.U)},
                    {"V", to_json(snf.V)},
                    {"elementary_divisors", std::move(divisors)}});
    return kOk;
  }
  ctx.out << "S:\n" << format_matrix(snf.S) << "U:\n" << format_matrix(snf.U) << "V:\n" << format_matrix(snf.V);
  return kOk;
}

int cmd_walk(Context& ctx, const std::string& path) {
  const auto graphs = parse_graphs(read_input(ctx, path));
  json items = json::array();
  for (const Graph& g : graphs) {
    const IntMatrix w = walk_matrix(g);
    const Integer d = det(w);
    if (ctx.json) {
      items.push_back({{"n", g.order()}, {"W", to_json(w)}, {"det_W", d.get_str()}, {"controllable", d != 0}});
    } else {
      ctx.out << "W:\n" << format_matrix(w) << "det W = " << d.get_str() << '\n';
    }
  }
  if (ctx.json) emit_json(ctx, {{"graphs", std::move(items)}});
  return kOk;
}

int cmd_oracle(Context& ctx, std::size_t n, bool full7, int workers, const std::string& csv) {
  if (n == 7 && !full7) throw ArgumentError("oracle: n=7 enumerates 2097152 graphs; pass --full7 to run it");
  std::function<void(std::uint64_t, std::uint64_t)> progress;
  if (n == 7) {
    // roughly every 5%
    std::uint64_t next = 0;
    progress = [&ctx, next](std::uint64_t done, std::uint64_t total) mutable {
      if (done < next && done != total) return;
      ctx.err << "oracle: " << done << "/" << total << " graphs\n" << std::flush;
      next = done + total / 20;
    };
  }
  const auto report = soundness_harness(n, workers, progress);
  const auto mates = find_gspec_mates(n, workers);

  std::ostringstream table;
  table << "spectrum_key_hash,class_size\n";
  for (const auto& m : mates) table << m.key.hash() << ',' << m.members.size() << '\n';
  if (!csv.empty()) {
    std::ofstream f(csv);
    if (!f) throw InputError("cannot write '" + csv + "'");
    f << table.str();
  }

  if (ctx.json) {
    json body = to_json(report);
    json classes = json::array();
    for (const auto& m : mates) {
      json members = json::array();
      for (const auto& g : m.members) members.push_back(emit_graph6(g));
      classes.push_back({{"spectrum_key_hash", std::to_string(m.key.hash())}, {"members", std::move(members)}});
    }
    body["classes"] = std::move(classes);
    emit_json(ctx, std::move(body), {{"workers", workers}});
    return kOk;
  }
  auto& o = ctx.out;
  o << "n = " << report.n << ": " << report.graphs << " labeled graphs\n";
  o << "  certified by walk criterion: " << report.certified_main << '\n';
  o << "  certified by gcd criterion: " << report.certified_main2 << '\n';
  o << "  unknown: " << report.unknown << '\n';
  o << "  generalized-cospectral mate classes: " << report.mate_class_count << '\n';
  o << "  violations: " << report.violations.size() << '\n';
  for (const auto& v : report.violations) o << "    " << v.graph6 << '\n';
  if (csv.empty()) o << table.str();
  return kOk;
}

struct Sample {
  const char* name;
  const char* what;
  std::string (*text)();
};

const Sample kSamples[] = {
    {"squarefree-disc", "8x8 symmetric matrix with odd square-free discriminant",
     [] { return format_matrix(samples::squarefree_disc_matrix()); }},
    {"square-disc", "10x10 symmetric matrix whose discriminant has the factor 3^2",
     [] { return format_matrix(samples::square_disc_matrix()); }},
    {"square-disc-q", "level-3 rational orthogonal matrix for square-disc",
     [] { return format_rational_matrix(samples::square_disc_conjugator()); }},
    {"square-disc-b", "Q^T A Q for square-disc and square-disc-q",
     [] { return format_matrix(samples::square_disc_conjugate()); }},
    {"gcd-graph", "12-vertex graph certified only by the gcd criterion (adjacency matrix)",
     [] { return format_matrix(adjacency(samples::gcd_certified_graph())); }},
    {"gcd-graph-g6", "the same graph in graph6", [] { return emit_graph6(samples::gcd_certified_graph()) + "\n"; }},
};

int cmd_samples(Context& ctx, const std::string& name) {
  if (name.empty()) {
    for (const auto& s : kSamples) ctx.out << s.name << "  " << s.what << '\n';
    return kOk;
  }
  for (const auto& s : kSamples)
    if (name == s.name) {
      ctx.out << s.text();
      return kOk;
    }
  throw ArgumentError("samples: unknown sample '" + name + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certificates for spectral characterizations of graphs and symmetric integer matrices", "gspec"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Context ctx{in, out, err, "", false};
  std::uint64_t budget = kDefaultBudget;
  std::string input, second;
  bool matrix = false, full7 = false;
  ExperimentConfig cfg;
  std::size_t oracle_n = 0;
  int workers = 0;
  std::string csv, sample;

  auto with_common = [&](CLI::App* sub, bool uses_budget) {
    sub->add_flag("--json", ctx.json, "Structured output");
    if (uses_budget) sub->add_option("--budget", budget, "Factoring budget in batches of 256 rho iterations")->check(CLI::PositiveNumber);
    return sub;
  };

  auto* check_graph = with_common(app.add_subcommand("check-graph", "Both graph certificates"), true);
  check_graph->add_option("input", input, "graph6 lines or a matrix file, '-' for stdin")->required();

  auto* check_matrix = with_common(app.add_subcommand("check-matrix", "Discriminant certificate for a symmetric matrix"), true);
  check_matrix->add_option("input", input, "Matrix file, '-' for stdin")->required();

  auto* verify_q = with_common(app.add_subcommand("verify-q", "Check Q^T A Q for a rational orthogonal Q"), false);
  verify_q->add_option("A", input, "Symmetric integer matrix file")->required();
  verify_q->add_option("Q", second, "Rational matrix file")->required();

  auto* experiment = with_common(app.add_subcommand("experiment", "Certificate frequencies on random graphs"), true);
  experiment->add_option("--n", cfg.n, "Vertices")->check(CLI::Range(2, 200));
  experiment->add_option("--trials", cfg.trials, "Number of sampled graphs")->check(CLI::PositiveNumber);
  experiment->add_option("--seed", cfg.seed, "Master seed");
  experiment->add_option("--workers", workers, "Threads, 0 for the OpenMP default")->check(CLI::NonNegativeNumber);
  experiment->add_option("--csv", csv, "Append the row to this CSV file");

  auto* disc = with_common(app.add_subcommand("disc", "Discriminant of a polynomial or of a matrix"), true);
  disc->add_option("input", input, "Polynomial coefficients (ascending) or matrix with --matrix")->required();
  disc->add_flag("--matrix", matrix, "Input is a symmetric matrix");

  auto* snf = with_common(app.add_subcommand("snf", "Smith normal form with transforms"), false);
  snf->add_option("input", input, "Matrix file, '-' for stdin")->required();

  auto* walk = with_common(app.add_subcommand("walk", "Walk matrix and its determinant"), false);
  walk->add_option("input", input, "graph6 lines or a matrix file")->required();

  auto* oracle = with_common(app.add_subcommand("oracle", "Exhaustive soundness check over all labeled graphs"), false);
  oracle->add_option("--n", oracle_n, "Vertices, 1..7")->required()->check(CLI::Range(1, 7));
  oracle->add_flag("--full7", full7, "Allow the 2^21-graph run at n=7");
  oracle->add_option("--workers", workers, "Threads, 0 for the OpenMP default")->check(CLI::NonNegativeNumber);
  oracle->add_option("--csv", csv, "Write spectrum_key_hash,class_size rows here");

  auto* samples_cmd = app.add_subcommand("samples", "List or print the bundled sample inputs");
  samples_cmd->add_option("name", sample, "Sample to print");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (check_graph->parsed()) {
      ctx.command = "check-graph";
      return cmd_check_graph(ctx, input, budget);
    }
    if (check_matrix->parsed()) {
      ctx.command = "check-matrix";
      return cmd_check_matrix(ctx, input, budget);
    }
    if (verify_q->parsed()) {
      ctx.command = "verify-q";
      return cmd_verify_q(ctx, input, second);
    }
    if (experiment->parsed()) {
      ctx.command = "experiment";
      cfg.budget = budget;
      cfg.workers = workers;
      return cmd_experiment(ctx, cfg, csv);
    }
    if (disc->parsed()) {
      ctx.command = "disc";
      return cmd_disc(ctx, input, matrix, budget);
    }
    if (snf->parsed()) {
      ctx.command = "snf";
      return cmd_snf(ctx, input);
    }
    if (walk->parsed()) {
      ctx.command = "walk";
      return cmd_walk(ctx, input);
    }
    if (oracle->parsed()) {
      ctx.command = "oracle";
      return cmd_oracle(ctx, oracle_n, full7, workers, csv);
    }
    if (samples_cmd->parsed()) {
      ctx.command = "samples";
      return cmd_samples(ctx, sample);
    }
  } catch (const InvariantViolation& e) {
    err << "gspec: internal invariant violated: " << e.what() << '\n';
    return kInvariantError;
  } catch (const ParseError& e) {
    err << "gspec: parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "gspec: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "gspec: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "gspec: internal error: " << e.what() << '\n';
    return kInvariantError;
  }
  return kInputError;
}

}  // namespace gspec::cli
