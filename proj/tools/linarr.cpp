// linarr: moments, bounds and significance of D, the sum of edge lengths of a
// graph under a random linear arrangement.
//
// Exit status: 0 ok, 2 input error, 3 enumeration cap exceeded,
// 4 statistic undefined (e.g. a z-score when V[D] = 0).

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "linarr/linarr.hpp"

using namespace linarr;

namespace {

constexpr int kInputError = 2;
constexpr int kCapExceeded = 3;
constexpr int kUndefined = 4;

struct Global {
  std::string format = "csv";
  bool decimal = false;

  TableFormat table_format() const { return format == "tsv" ? TableFormat::tsv : TableFormat::csv; }
};

struct McFlags {
  std::size_t replicas = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;

  void attach(CLI::App* cmd, const std::string& what) {
    cmd->add_option("--mc", replicas, "Monte Carlo replicas (" + what + "); 0 disables");
    cmd->add_option("--seed", seed, "64-bit master seed")->capture_default_str();
    cmd->add_option("--workers", workers, "worker threads; output does not depend on it")
        ->check(CLI::Range(1u, 1024u))
        ->capture_default_str();
  }

  std::optional<McOptions> options() const {
    if (replicas == 0) return std::nullopt;
    return McOptions{replicas, RngSeed{seed}, workers};
  }
};

Statistic parse_statistic(const std::string& s) {
  if (s == "mean") return Statistic::mean;
  if (s == "second_moment") return Statistic::second_moment;
  return Statistic::variance;
}

const std::vector<std::string> kStatistics{"variance", "second_moment", "mean"};

// Default n grid for tree curves: 1-2-5 steps up to 10^4.
std::vector<std::uint64_t> default_tree_grid() {
  return {3, 5, 10, 20, 50, 100, 200, 500, 1000, 2000, 5000, 10000};
}

int run_treebank(const Global& global, const std::string& path, bool exclude_punct, bool strict,
                 bool by_networks) {
  auto in = open_input(path);
  std::vector<TreebankSentence> sentences;
  try {
    sentences = parse_conllu_lite(in, exclude_punct);
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }

  std::vector<NetworkSummary> members;
  members.reserve(sentences.size());
  for (const auto& s : sentences) members.push_back(NetworkSummary::of(s.graph(), s.arrangement()));
  const CollectionStats stats = collection_stats(
      members, by_networks ? ZNormalization::by_networks : ZNormalization::by_edges,
      strict ? ZeroVariancePolicy::fail : ZeroVariancePolicy::skip);

  Table t({"network", "first_line", "n", "m", "sum_k2", "D", "mean_d", "E_D", "V_D", "z"});
  for (std::size_t i = 0; i < members.size(); ++i) {
    const NetworkSummary& x = members[i];
    const ExactScalar v = variance_d(x.n, x.m, ExactScalar(x.sum_k2));
    const ExactScalar e = expected_d(x.n, x.m);
    const std::string z = v == 0 ? "" : format_double(standardized(ExactScalar(x.d), e, v).to_double());
    t.add({std::to_string(i + 1), std::to_string(sentences[i].first_line), std::to_string(x.n),
           std::to_string(x.m), std::to_string(x.sum_k2), std::to_string(x.d),
           x.m == 0 ? "" : to_string(ratio(x.d, x.m)), to_string(e), to_string(v), z});
  }
  t.add({"all", "", std::to_string(stats.vertices), std::to_string(stats.edges), "",
         std::to_string(stats.total_d), to_string(stats.mean_d), "", "",
         stats.mean_z ? format_double(*stats.mean_z) : ""});
  t.write(std::cout, global.table_format());
  if (!stats.skipped.empty()) {
    std::cerr << "note: " << stats.skipped.size()
              << " network(s) with V[D] = 0 left out of the mean z-score\n";
  }
  return 0;
}

int run_selftest(std::uint64_t max_n) {
  int failures = 0;
  auto report = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "PASS " : "FAIL ") << what << '\n';
    if (!ok) ++failures;
  };
  for (int phi = 0; phi <= 2; ++phi) {
    for (std::uint64_t n = 4 - static_cast<std::uint64_t>(phi); n <= max_n; ++n) {
      const ExactScalar closed = e_phi(n, phi), brute = enumerate_e_phi(n, phi, {.max_pair_n = max_n});
      report(closed == brute, "E" + std::to_string(phi) + "(" + std::to_string(n) + ") = " +
                                  to_string(closed) + " enumerated " + to_string(brute));
    }
  }
  for (std::uint64_t n = 4; n <= max_n; ++n) {
    const E01 solved = solve_e01_system(n);
    report(solved.e0 == e_phi(n, 0) && solved.e1 == e_phi(n, 1),
           "E0/E1 system (" + std::to_string(n) + ") = " + to_string(solved.e0) + ", " +
               to_string(solved.e1));
  }
  std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sum of edge lengths of graphs under random linear arrangements"};
  app.require_subcommand(1);
  app.fallthrough();
  Global global;
  app.add_option("--format", global.format, "output table format")
      ->check(CLI::IsMember({"csv", "tsv"}))
      ->capture_default_str();
  app.add_flag("--decimal", global.decimal, "add a decimal column to key/value reports");

  std::string graph_path, arrangement_path;
  std::optional<std::uint64_t> observed_d;
  McFlags mc;

  auto* moments = app.add_subcommand("moments", "exact E[D], E[D^2] and V[D] of a graph");
  moments->add_option("graph", graph_path, "edge-list file")->required();

  auto* bounds = app.add_subcommand("bounds", "bounds on the largest and smallest D");
  bounds->add_option("graph", graph_path, "edge-list file")->required();

  auto* sig = app.add_subcommand("sig", "z-score and tail bounds for an observed D");
  sig->add_option("graph", graph_path, "edge-list file")->required();
  auto* arr_opt = sig->add_option("--arrangement", arrangement_path, "arrangement file");
  auto* d_opt = sig->add_option("--D", observed_d, "observed sum of edge lengths");
  arr_opt->excludes(d_opt);
  d_opt->excludes(arr_opt);
  mc.attach(sig, "p-value");

  std::string conllu_path;
  bool exclude_punct = false, strict = false, by_networks = false;
  auto* treebank = app.add_subcommand("treebank", "per-sentence and collection statistics");
  treebank->add_option("conllu", conllu_path, "CoNLL-U file")->required();
  treebank->add_flag("--exclude-punct", exclude_punct, "drop PUNCT tokens and their edges");
  treebank->add_flag("--strict", strict, "fail on sentences whose z-score is undefined");
  treebank->add_flag("--normalize-by-networks", by_networks,
                     "average z over sentences instead of over edges");

  auto* ensemble = app.add_subcommand("ensemble", "curves over random graph ensembles");
  ensemble->require_subcommand(1);
  ensemble->fallthrough();
  std::uint64_t gnm_n = 0;
  std::string statistic = "variance";
  bool exact_only = false, binomial_approx = false, poisson_approx = false, normalized = false;
  std::vector<std::uint64_t> m_list;
  std::uint64_t m_step = 1;
  auto* gnm = ensemble->add_subcommand("gnm", "G(n,m) curve over m");
  gnm->add_option("--n", gnm_n, "number of vertices")->required()->check(CLI::Range(1, 100000));
  auto* f_exact = gnm->add_flag("--exact", exact_only, "no approximation column");
  auto* f_binomial = gnm->add_flag("--binomial", binomial_approx, "binomial degree approximation (default)");
  auto* f_poisson = gnm->add_flag("--poisson", poisson_approx, "Poisson degree approximation");
  f_exact->excludes(f_binomial, f_poisson);
  f_binomial->excludes(f_poisson);
  gnm->add_option("--statistic", statistic)->check(CLI::IsMember(kStatistics))->capture_default_str();
  gnm->add_flag("--normalized", normalized, "add density and D(K_n)-normalized columns");
  gnm->add_option("--m-list", m_list, "edge counts to evaluate (default: all)")->delimiter(',');
  gnm->add_option("--m-step", m_step, "evaluate every k-th edge count")->check(CLI::PositiveNumber);
  mc.attach(gnm, "per edge count");

  std::vector<std::uint64_t> n_list;
  auto* tree = ensemble->add_subcommand("tree", "uniformly random labelled trees, curve over n");
  tree->add_option("--n-list", n_list, "tree sizes (default: log grid 3 .. 10^4)")->delimiter(',');
  tree->add_option("--statistic", statistic)->check(CLI::IsMember(kStatistics))->capture_default_str();
  mc.attach(tree, "per tree size");

  std::uint64_t hub_n = 0;
  auto* hub = app.add_subcommand("hubiness", "V[D] of trees against hubiness");
  hub->add_option("--n", hub_n, "number of vertices")->required()->check(CLI::Range(4, 100000));

  std::size_t cap = OracleCaps{}.max_arrangement_n;
  auto* oracle = app.add_subcommand("oracle", "exact distribution of D over all n! arrangements");
  oracle->add_option("graph", graph_path, "edge-list file")->required();
  oracle->add_option("--cap", cap, "largest n to enumerate")->capture_default_str();

  auto* diagnose = app.add_subcommand("diagnose", "consistency diagnostics");
  diagnose->require_subcommand(1);
  diagnose->fallthrough();
  auto* rlt = diagnose->add_subcommand("rlt", "two forms of the random-tree variance formula");
  rlt->add_option("--n-list", n_list, "tree sizes (default 2..12)")->delimiter(',');

  std::uint64_t selftest_max = 12;
  auto* selftest = app.add_subcommand("selftest", "closed forms against enumeration");
  selftest->add_option("--max-n", selftest_max, "largest n checked")
      ->check(CLI::Range(4, 15))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  const TableFormat fmt = global.table_format();
  try {
    if (*moments) {
      moments_table(moments_report(read_edge_list_file(graph_path)), global.decimal).write(std::cout, fmt);
    } else if (*bounds) {
      bounds_table(bounds_report(read_edge_list_file(graph_path)), global.decimal).write(std::cout, fmt);
    } else if (*sig) {
      const Graph g = read_edge_list_file(graph_path);
      std::uint64_t d = 0;
      if (observed_d) {
        d = *observed_d;
      } else if (!arrangement_path.empty()) {
        const LinearArrangement a = read_arrangement_file(arrangement_path);
        check_arrangement(g, a);
        d = sum_edge_lengths(g, a);
      } else {
        fail("sig needs --arrangement or --D");
      }
      significance_table(significance(g, d, mc.options()), global.decimal).write(std::cout, fmt);
    } else if (*treebank) {
      return run_treebank(global, conllu_path, exclude_punct, strict, by_networks);
    } else if (*gnm) {
      const Approximation approx = exact_only ? Approximation::none
                                   : poisson_approx ? Approximation::poisson
                                                    : Approximation::binomial;
      if (m_list.empty() && m_step > 1) {
        for (std::uint64_t m = 0; m <= choose2(gnm_n); m += m_step) m_list.push_back(m);
      }
      const EnsembleCurve curve =
          gnm_curve(gnm_n, parse_statistic(statistic), approx, mc.options(), m_list);
      CurveLayout layout{"m", std::nullopt};
      if (normalized) layout.normalize_n = gnm_n;
      curve_table(curve, layout).write(std::cout, fmt);
    } else if (*tree) {
      if (n_list.empty()) n_list = default_tree_grid();
      curve_table(rlt_curve(n_list, parse_statistic(statistic), mc.options()), {"n", std::nullopt})
          .write(std::cout, fmt);
    } else if (*hub) {
      hubiness_table(hubiness_sweep(hub_n)).write(std::cout, fmt);
    } else if (*oracle) {
      const Graph g = read_edge_list_file(graph_path);
      distribution_table(enumerate_distribution(g, {.max_arrangement_n = cap})).write(std::cout, fmt);
    } else if (*rlt) {
      if (n_list.empty())
        for (std::uint64_t n = 2; n <= 12; ++n) n_list.push_back(n);
      Table t({"n", "derived", "printed", "agree"});
      for (auto n : n_list) {
        const ExactScalar derived = rlt_expected_variance(n), printed = rlt_expected_variance_printed(n);
        t.add({std::to_string(n), to_string(derived), to_string(printed), derived == printed ? "yes" : "no"});
      }
      t.write(std::cout, fmt);
    } else if (*selftest) {
      return run_selftest(selftest_max);
    }
  } catch (const Error& e) {
    std::cerr << "linarr: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::cap_exceeded: return kCapExceeded;
      case ErrorKind::undefined_statistic: return kUndefined;
      default: return kInputError;
    }
  }
  return 0;
}
