// qlogic: command-line driver for the state-set lattices, the two-particle
// symmetry sectors, the occupation-number inner products and the invariant suites.

#include "qlogic/identical.hpp"
#include "qlogic/io.hpp"
#include "qlogic/qspace.hpp"
#include "qlogic/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using qlogic::io::Json;

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsageError = 2;

struct Globals {
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string format = "text";
};

std::uint64_t resolve_seed(const Globals& g) {
  if (g.seed_given) return g.seed;
  if (const char* env = std::getenv("QL_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("QL_SEED must be a non-negative integer");
    }
  }
  return 0;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qlogic::io::ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw qlogic::io::ParseError(path + ": " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text << '\n';
}

// --- sector ---------------------------------------------------------------

int cmd_sector(const Globals& g, long n, const std::string& sign, bool table) {
  if (table) {
    std::cout << qlogic::sector_dimension_csv(8);
    return kOk;
  }
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
  const auto stats = qlogic::parse_statistics(sign);
  const qlogic::SectorSpace s = qlogic::sector_space(n, stats);
  if (s.empty()) std::cerr << "warning: the antisymmetric sector of n = 1 is empty\n";
  if (g.format == "json") {
    Json basis = Json::array();
    for (Eigen::Index k = 0; k < s.sector_dim(); ++k)
      basis.push_back(qlogic::io::to_json(s.basis_ket(k)));
    std::cout << Json{{"n", n},
                      {"sign", std::string(1, qlogic::statistics_symbol(stats))},
                      {"sector_dim", s.sector_dim()},
                      {"basis", basis}}
                     .dump(2)
              << '\n';
  } else if (g.format == "csv") {
    std::cout << "n,sign,sector_dim\n" << n << ',' << qlogic::statistics_symbol(stats) << ','
              << s.sector_dim() << '\n';
  } else {
    std::cout << "sector_dim " << s.sector_dim() << '\n';
    for (Eigen::Index k = 0; k < s.sector_dim(); ++k) {
      std::cout << "basis[" << k << "] =";
      const auto& v = s.isometry.col(k);
      for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) == 0.0) continue;
        std::cout << ' ' << (v(i).real() < 0 ? "-" : "+") << std::setprecision(6)
                  << std::abs(v(i).real()) << "|" << i / n << i % n << ">";
      }
      std::cout << '\n';
    }
  }
  return kOk;
}

// --- lattice --------------------------------------------------------------

int cmd_lattice(const Globals& g, const std::string& op, const std::vector<std::string>& files,
                const std::string& output) {
  const bool unary = op == "neg";
  const std::size_t expected = unary ? 1 : 2;
  if (op != "meet" && op != "join" && op != "neg" && op != "leq")
    throw std::invalid_argument("lattice op must be one of meet, join, neg, leq");
  if (files.size() != expected)
    throw std::invalid_argument("lattice " + op + " takes " + std::to_string(expected) +
                                " input file(s)");
  std::vector<qlogic::StateSet> in;
  for (const auto& f : files) in.push_back(qlogic::io::state_set_from_json(read_json_file(f)));

  qlogic::LatticeOptions opt;
  opt.seed = resolve_seed(g);
  if (op == "leq") {
    const qlogic::Decision d = qlogic::leq(in[0], in[1], opt);
    std::cout << (d.holds ? "true" : "false") << (d.exact ? "" : " (approximate)") << '\n';
    return d.holds ? kOk : kDomainFailure;
  }
  qlogic::StateSet result = op == "meet"   ? qlogic::meet(in[0], in[1], opt)
                            : op == "join" ? qlogic::join(in[0], in[1], opt)
                                           : qlogic::neg(in[0], opt);
  write_output(output, qlogic::io::to_json(result).dump(2));
  return kOk;
}

// --- scan -----------------------------------------------------------------

int cmd_scan(const Globals& g, const std::string& sign, long n, long samples) {
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
  if (samples < 1) throw std::invalid_argument("--samples must be >= 1");
  const auto stats = qlogic::parse_statistics(sign);
  const qlogic::PurityScan s = qlogic::reduced_purity_scan(
      stats, n, static_cast<std::size_t>(samples), resolve_seed(g));
  if (g.format == "csv") {
    std::cout << "sign,n,samples,seed,purity_min,purity_max,purity_mean\n"
              << std::setprecision(17) << qlogic::statistics_symbol(s.stats) << ',' << s.n << ','
              << s.samples << ',' << s.seed << ',' << s.purity_min << ',' << s.purity_max << ','
              << s.purity_mean << '\n';
  } else {
    std::cout << qlogic::io::to_json(s).dump(2) << '\n';
  }
  return kOk;
}

// --- qspace ---------------------------------------------------------------

void print_int_matrix(const Globals& g, const std::vector<qlogic::OccState>& states,
                      const qlogic::IntMatrix& m) {
  if (g.format == "json") {
    Json labels = Json::array();
    for (const auto& s : states) labels.push_back(qlogic::to_string(s));
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
      rows.push_back(row);
    }
    std::cout << Json{{"states", labels}, {"gram", rows}}.dump(2) << '\n';
    return;
  }
  const bool csv = g.format == "csv";
  const char sep = csv ? ',' : ' ';
  // labels contain commas, so CSV quotes them
  auto label = [&](const qlogic::OccState& s) {
    return csv ? '"' + qlogic::to_string(s) + '"' : qlogic::to_string(s);
  };
  if (csv) {
    std::cout << "state";
    for (const auto& s : states) std::cout << sep << label(s);
    std::cout << '\n';
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::cout << label(states[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < m.cols(); ++j) std::cout << sep << m(i, j);
    std::cout << '\n';
  }
}

int cmd_qspace(const Globals& g, const std::string& sub, const std::vector<std::string>& operands,
               const std::string& stats_flag, long n_modes, long max_n) {
  if (sub == "inner") {
    if (operands.size() != 2) throw std::invalid_argument("qspace inner takes two states");
    const auto f = qlogic::parse_occ_state(operands[0]);
    const auto h = qlogic::parse_occ_state(operands[1]);
    std::cout << qlogic::inner_basis(f, h) << '\n';
    return kOk;
  }
  if (sub == "norm") {
    if (operands.size() != 1) throw std::invalid_argument("qspace norm takes one state");
    const auto f = qlogic::parse_occ_state(operands[0]);
    std::cout << std::setprecision(17) << qlogic::norm(qlogic::QVector::basis(f)) << '\n';
    return kOk;
  }
  if (sub == "pauli") {
    if (operands.size() != 1) throw std::invalid_argument("qspace pauli takes one state");
    const auto f = qlogic::parse_occ_state(operands[0]);
    std::cout << (qlogic::pauli_check(f) ? "excluded" : "allowed") << '\n';
    return kOk;
  }
  if (sub == "gram") {
    if (n_modes < 1 || max_n < 1 || max_n > 6)
      throw std::invalid_argument("gram needs --n-modes >= 1 and 1 <= --max-n <= 6");
    const auto stats = qlogic::parse_statistics(stats_flag);
    std::vector<qlogic::OccState> states;
    for (long n = 1; n <= max_n; ++n) {
      const auto b = qlogic::enumerate_basis(stats, static_cast<std::size_t>(n_modes),
                                             static_cast<std::size_t>(n));
      states.insert(states.end(), b.begin(), b.end());
    }
    const qlogic::IntMatrix gram = qlogic::inner_gram(states);
    const qlogic::IntMatrix oracle =
        qlogic::hilbert_gram(states, static_cast<std::size_t>(n_modes));
    print_int_matrix(g, states, gram);
    const bool match = gram == oracle;
    std::cerr << (match ? "matches" : "DIFFERS FROM") << " the symmetrized tensor-product Gram matrix\n";
    return match ? kOk : kDomainFailure;
  }
  throw std::invalid_argument("qspace subcommand must be inner, norm, pauli or gram");
}

// --- verify ---------------------------------------------------------------

int cmd_verify(const Globals& g, const std::string& suite, long trials) {
  qlogic::verify::SuiteConfig cfg;
  cfg.seed = resolve_seed(g);
  cfg.trials = trials > 0 ? static_cast<std::size_t>(trials) : 0;
  std::vector<std::string> names;
  if (suite == "all") {
    names = qlogic::verify::suite_names();
  } else {
    names.push_back(suite);
  }
  bool ok = true;
  Json reports = Json::array();
  for (const auto& name : names) {
    const auto r = qlogic::verify::run_suite(name, cfg);
    ok = ok && r.passed;
    if (g.format == "json") {
      reports.push_back({{"suite", r.name},
                         {"passed", r.passed},
                         {"checked", r.checked},
                         {"counterexamples", r.counterexamples}});
    } else {
      std::cout << r.name << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.checked
                << " checked)\n";
      for (const auto& c : r.counterexamples) std::cout << "  counterexample: " << c << '\n';
    }
  }
  if (g.format == "json") std::cout << reports.dump(2) << '\n';
  return ok ? kOk : kDomainFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qlogic: convex state-set lattices, symmetry sectors and occupation-number spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Random seed (falls back to $QL_SEED, then 0)")
      ->each([&](const std::string&) { g.seed_given = true; });
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  long n = 0;
  std::string sign;
  bool table = false;
  auto* sector = app.add_subcommand(
      "sector", "Symmetric (+) or antisymmetric (-) sector of C^n (x) C^n.\n"
                "  --table prints CSV columns: n,boson_dim,fermion_dim,total for n = 1..8");
  sector->add_option("--n", n, "Single-particle dimension");
  sector->add_option("--sign", sign, "Statistics: + (bosons) or - (fermions)");
  sector->add_flag("--table", table, "Emit the sector-dimension CSV table");

  std::string op, output;
  std::vector<std::string> files;
  auto* lattice = app.add_subcommand(
      "lattice", "Lattice operation on StateSet JSON files: meet|join|neg write JSON;\n"
                 "  leq prints true/false and exits 0/1");
  lattice->add_option("op", op, "meet | join | neg | leq")->required();
  lattice->add_option("inputs", files, "StateSet JSON files")->required();
  lattice->add_option("-o,--output", output, "Write the result here instead of stdout");

  long samples = 100;
  auto* scan = app.add_subcommand(
      "scan", "Reduced-state purity over random pure sector states.\n"
              "  CSV columns: sign,n,samples,seed,purity_min,purity_max,purity_mean");
  scan->add_option("--sign", sign, "+ or -")->required();
  scan->add_option("--n", n, "Single-particle dimension")->required();
  scan->add_option("--samples", samples, "Number of random states");

  std::string sub, stats_flag = "f";
  std::vector<std::string> operands;
  long n_modes = 3, max_n = 3;
  auto* qspace = app.add_subcommand(
      "qspace", "Occupation-number states written as b:1,1,2 or f:1,2,3.\n"
                "  inner A B | norm A | pauli A | gram --stats b|f --n-modes M --max-n N\n"
                "  gram CSV: header row of state labels, one row per state");
  qspace->add_option("subcommand", sub, "inner | norm | pauli | gram")->required();
  qspace->add_option("operands", operands, "Occupation states");
  qspace->add_option("--stats", stats_flag, "b or f (gram)");
  qspace->add_option("--n-modes", n_modes, "Number of levels (gram)");
  qspace->add_option("--max-n", max_n, "Largest particle number (gram)");

  std::string suite;
  long trials = 0;
  auto* verify = app.add_subcommand("verify", "Run an invariant suite (or 'all')");
  verify->add_option("suite", suite, "Suite name or 'all'")->required();
  verify->add_option("--trials", trials, "Instance count (0 = suite default)");
  verify->add_option("--seed", g.seed, "Random seed")->each([&](const std::string&) {
    g.seed_given = true;
  });
  scan->add_option("--seed", g.seed, "Random seed")->each([&](const std::string&) {
    g.seed_given = true;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*sector) return cmd_sector(g, n, sign, table);
    if (*lattice) return cmd_lattice(g, op, files, output);
    if (*scan) return cmd_scan(g, sign, n, samples);
    if (*qspace) return cmd_qspace(g, sub, operands, stats_flag, n_modes, max_n);
    if (*verify) {
      if (suite != "all") {
        const auto& names = qlogic::verify::suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end())
          throw std::invalid_argument("unknown suite '" + suite + "'");
      }
      return cmd_verify(g, suite, trials);
    }
  } catch (const qlogic::io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainFailure;
  }
  return kUsageError;
}
