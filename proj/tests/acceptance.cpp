// Acceptance checks, one per criterion: `acceptance <k> [path-to-linarr]`.
// Prints one PASS/FAIL line per criterion (plus indented detail lines) and
// exits non-zero on failure. With no criterion given, runs all of them.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "linarr/linarr.hpp"

using namespace linarr;

namespace {

class Check {
 public:
  explicit Check(int criterion) : criterion_(criterion), start_(std::chrono::steady_clock::now()) {}

  void expect(bool ok, const std::string& what) {
    std::cout << "  " << (ok ? "ok   " : "FAIL ") << what << '\n';
    if (!ok) ++failures_;
  }

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  bool finish(const std::string& title) const {
    std::cout << "ACCEPTANCE " << criterion_ << ": " << (failures_ == 0 ? "PASS" : "FAIL") << "  "
              << title << " (" << failures_ << " failed, " << format_double(seconds()) << " s)\n";
    return failures_ == 0;
  }

 private:
  int criterion_;
  int failures_ = 0;
  std::chrono::steady_clock::time_point start_;
};

std::string str(const ExactScalar& x) { return to_string(x); }

Graph fixture_tree() {
  return Graph::build(17, {{3, 4}, {4, 5}, {2, 4}, {4, 13}, {4, 8}, {12, 13}, {13, 14}, {11, 13},
                           {13, 17}, {1, 2}, {7, 8}, {8, 9}, {6, 7}, {12, 15}, {14, 16}, {10, 16}});
}

// A different tree with the same degree multiset {5,5,3,2,2,2,2,2,1^9}:
// two hubs joined by a path, leaves and chains hung off them.
Graph second_fixture_tree() {
  return Graph::build(17, {{1, 2}, {2, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {4, 9}, {4, 10}, {4, 11},
                           {4, 12}, {5, 13}, {5, 14}, {6, 15}, {7, 16}, {8, 17}, {3, 13}});
}

bool criterion_1() {
  Check c(1);
  for (const Graph& g : {fixture_tree(), second_fixture_tree()}) {
    std::map<std::uint32_t, std::uint64_t> spectrum = degree_spectrum(g).counts;
    const bool shape = g.vertex_count() == 17 && g.edge_count() == 16 &&
                       spectrum == std::map<std::uint32_t, std::uint64_t>{{1, 9}, {2, 5}, {3, 1}, {5, 2}};
    c.expect(shape, "tree with n = 17 and degrees {5,5,3,2,2,2,2,2,1^9}");
    c.expect(expected_d(g) == 96, "E[D] = " + str(expected_d(g)) + " (want 96)");
    c.expect(mean_k2(g) == ratio(88, 17), "<k^2> = " + str(mean_k2(g)) + " (want 88/17)");
    c.expect(variance_d(g) == ratio(1084, 5), "V[D] = " + str(variance_d(g)) + " (want 1084/5)");
  }
  const Graph g = fixture_tree();
  const std::uint64_t d = sum_edge_lengths(g, LinearArrangement::identity(17));
  c.expect(d == 40, "D in sentence order = " + std::to_string(d) + " (want 40)");
  const SignificanceReport r = significance(g, 40);
  c.expect(r.z.z.sign < 0 && r.z.z.square == ratio(3920, 271),
           "z^2 = " + str(r.z.z.square) + " (want 3920/271), z = " + format_double(r.z.z.to_double()));
  c.expect(std::abs(r.z.z.to_double() + 3.803) < 5e-4, "z rounds to -3.803");
  c.expect(r.cantelli == ratio(271, 4191), "Cantelli bound = " + str(r.cantelli) + " (want 271/4191)");
  c.expect(r.unimodal == ratio(271, 17640), "unimodal bound = " + str(r.unimodal) + " (want 271/17640)");
  c.expect(c.seconds() < 1.0, "runtime " + format_double(c.seconds()) + " s < 1 s");
  return c.finish("fixture reproduction");
}

bool criterion_2() {
  Check c(2);
  std::uint64_t graphs = 0, mismatches = 0;
  auto compare = [&](const Graph& g) {
    const ExactDistribution dist = enumerate_distribution(g);
    ++graphs;
    if (dist.mean() != expected_d(g) || dist.second_moment() != second_moment_d(g) ||
        dist.variance() != variance_d(g)) {
      ++mismatches;
    }
  };
  for (std::size_t n = 0; n <= 6; ++n) for_each_simple_graph(n, compare);
  c.expect(mismatches == 0, "all simple graphs on n <= 6 vertices: " + std::to_string(graphs) +
                                " graphs, " + std::to_string(mismatches) + " mismatches");
  graphs = mismatches = 0;
  for (std::size_t n = 1; n <= 8; ++n) for_each_labelled_tree(n, compare);
  c.expect(mismatches == 0, "all labelled trees on n <= 8 vertices: " + std::to_string(graphs) +
                                " trees, " + std::to_string(mismatches) + " mismatches");
  c.expect(c.seconds() < 600.0, "runtime " + format_double(c.seconds()) + " s < 600 s");
  return c.finish("closed-form moments equal exhaustive enumeration");
}

bool criterion_3() {
  Check c(3);
  int bad = 0, checked = 0;
  for (int phi = 0; phi <= 2; ++phi) {
    for (std::uint64_t n = 4 - static_cast<std::uint64_t>(phi); n <= 12; ++n, ++checked) {
      if (e_phi(n, phi) != enumerate_e_phi(n, phi)) {
        ++bad;
        std::cout << "  mismatch E" << phi << "(" << n << ")\n";
      }
    }
  }
  c.expect(bad == 0, "E_phi closed forms equal enumeration (" + std::to_string(checked) + " cases)");
  bad = 0;
  for (std::uint64_t n = 4; n <= 12; ++n) {
    const E01 s = solve_e01_system(n);
    if (s.e0 != e_phi(n, 0) || s.e1 != e_phi(n, 1)) {
      ++bad;
      std::cout << "  mismatch in E0/E1 system at n = " << n << '\n';
    }
  }
  c.expect(bad == 0, "E0/E1 recovered from complete-graph and star equations for n in [4, 12]");
  c.expect(c.seconds() < 60.0, "runtime " + format_double(c.seconds()) + " s < 60 s");
  return c.finish("E_phi matrix");
}

bool criterion_4() {
  Check c(4);
  for (auto kind : {SpecialKind::empty, SpecialKind::single_edge, SpecialKind::linear_tree,
                    SpecialKind::star_tree, SpecialKind::complete}) {
    int bad = 0;
    const std::uint64_t lo = special_table_min_n(kind);
    for (std::uint64_t n = lo; n <= 30; ++n) {
      const Graph g = make_special(kind, n);
      const SpecialRow row = special_table(kind, n);
      if (row.e_d != expected_d(g) || row.e_d2 != second_moment_d(g) || row.var_d != variance_d(g)) ++bad;
    }
    c.expect(bad == 0, to_string(kind) + " row, n in [" + std::to_string(lo) + ", 30]");
  }
  return c.finish("special-graph rows");
}

bool criterion_5() {
  Check c(5);
  const std::uint64_t n = 10;
  const McOptions mc{10000, RngSeed{1}, 1};
  const EnsembleCurve curve = gnm_curve(n, Statistic::variance, Approximation::binomial, mc);
  int outside = 0;
  double worst = 0;
  for (const CurveRow& row : curve.rows) {
    const double exact = to_double(row.exact);
    const double diff = std::abs(row.mc->mean - exact);
    if (row.mc->std_error == 0) {
      if (diff != 0) ++outside;
      continue;
    }
    worst = std::max(worst, diff / row.mc->std_error);
    if (diff > 3 * row.mc->std_error) {
      ++outside;
      std::cout << "  m = " << row.parameter << ": mc " << row.mc->mean << " exact " << exact << " stderr "
                << row.mc->std_error << '\n';
    }
  }
  c.expect(outside == 0, "Monte Carlo (T = 10^4 per m) within 3 stderr at every m; largest |z| = " +
                             format_double(worst));

  std::uint64_t argmax = 0, argmax_binomial = 0;
  for (std::uint64_t m = 0; m <= choose2(n); ++m) {
    if (gnm_expected_variance_exact(n, m) > gnm_expected_variance_exact(n, argmax)) argmax = m;
    if (gnm_expected_variance_binomial(n, m) > gnm_expected_variance_binomial(n, argmax_binomial))
      argmax_binomial = m;
  }
  c.expect(argmax == 22 || argmax == 23, "argmax of exact curve = " + std::to_string(argmax) +
                                             ", m* = " + str(gnm_mstar(n)));
  c.expect(argmax_binomial == 22 || argmax_binomial == 23,
           "argmax of binomial approximation = " + std::to_string(argmax_binomial));
  const CurveRow& first = curve.rows.front();
  const CurveRow& last = curve.rows.back();
  c.expect(first.exact == 0 && last.exact == 0 && first.mc->mean == 0 && last.mc->mean == 0 &&
               *first.approx == 0 && *last.approx == 0,
           "m = 0 and m = 45 give exactly 0 (exact, approximation, Monte Carlo)");
  c.expect(c.seconds() < 300.0, "runtime " + format_double(c.seconds()) + " s < 300 s");
  return c.finish("G(n,m) variance curve, n = 10");
}

bool criterion_6() {
  Check c(6);
  int bad = 0, cases = 0;
  for (std::uint64_t n = 0; n <= 5; ++n) {
    for (std::uint64_t m = 0; m <= choose2(n); ++m, ++cases) {
      ExactScalar total = 0;
      std::uint64_t count = 0;
      for_each_gnm_graph(n, m, [&](const Graph& g) {
        total += variance_d(g);
        ++count;
      });
      if (total / count != gnm_expected_variance_exact(n, m)) {
        ++bad;
        std::cout << "  mismatch at n = " << n << ", m = " << m << '\n';
      }
    }
  }
  c.expect(bad == 0, "exact ensemble formula equals the average over every graph (" +
                         std::to_string(cases) + " (n, m) pairs, n <= 5)");
  return c.finish("G(n,m) exhaustive cross-check");
}

bool criterion_7() {
  Check c(7);
  const std::uint64_t n = 50;
  const EnsembleCurve sample = rlt_curve({n}, Statistic::variance, McOptions{100000, RngSeed{1}, 1});
  const double exact = to_double(rlt_expected_variance(n));
  const double rel = std::abs(sample.rows[0].mc->mean - exact) / exact;
  c.expect(rel <= 0.01, "n = 50: sample variance " + format_double(sample.rows[0].mc->mean) + " vs " +
                            format_double(exact) + " (relative error " + format_double(rel) + ")");

  auto slope = [](ExactScalar (*f)(std::uint64_t)) {
    return (std::log(to_double(f(10000))) - std::log(to_double(f(1000)))) / std::log(10.0);
  };
  const double s_var = slope(rlt_expected_variance);
  const double s_second = slope(rlt_expected_second_moment);
  c.expect(s_var >= 2.95 && s_var <= 3.0,
           "log-log slope of E[V[D]] between n = 10^3 and 10^4 = " + format_double(s_var) + " (want [2.95, 3.0])");
  c.expect(s_second >= 3.95 && s_second <= 4.0,
           "log-log slope of E[E[D^2]] between n = 10^3 and 10^4 = " + format_double(s_second) +
               " (want [3.95, 4.0])");

  int bad = 0;
  for (std::size_t t = 3; t <= 7; ++t) {
    ExactScalar k2 = 0, var = 0, second = 0;
    std::uint64_t count = 0;
    for_each_labelled_tree(t, [&](const Graph& g) {
      const ExactDistribution dist = enumerate_distribution(g);
      k2 += mean_k2(g);
      var += dist.variance();
      second += dist.second_moment();
      ++count;
    });
    if (k2 / count != rlt_expected_k2(t) || var / count != rlt_expected_variance(t) ||
        second / count != rlt_expected_second_moment(t)) {
      ++bad;
      std::cout << "  mismatch at n = " << t << '\n';
    }
  }
  c.expect(bad == 0, "closed forms equal exhaustive labelled-tree averages for n in [3, 7]");

  ExactScalar var4 = 0;
  std::uint64_t count4 = 0;
  for_each_labelled_tree(4, [&](const Graph& g) {
    var4 += enumerate_distribution(g).variance();
    ++count4;
  });
  var4 /= count4;
  c.expect(rlt_expected_variance_printed(4) == ratio(5, 12) && var4 == 1 && rlt_expected_variance(4) == 1,
           "n = 4: published polynomial gives " + str(rlt_expected_variance_printed(4)) +
               ", enumeration gives " + str(var4) + ", derived form gives " + str(rlt_expected_variance(4)));
  return c.finish("random labelled trees");
}

bool criterion_8() {
  Check c(8);
  std::uint64_t graphs = 0, upper_violations = 0, lower_violations = 0;
  for (std::size_t n = 0; n <= 6; ++n) {
    for_each_simple_graph(n, [&](const Graph& g) {
      ++graphs;
      if (n == 0) return;
      const ExactDistribution dist = enumerate_distribution(g);
      if (ExactScalar(dist.d_max()) > upper_combined(g)) ++upper_violations;
      if (dist.d_min() < minla_lower(n, g.edge_count())) ++lower_violations;
    });
  }
  c.expect(upper_violations == 0, "D_max <= min(degree, edges) bound on " + std::to_string(graphs) +
                                      " graphs: " + std::to_string(upper_violations) + " violations");
  c.expect(lower_violations == 0, "D_min >= lower bound: " + std::to_string(lower_violations) + " violations");
  int bad = 0;
  for (std::uint64_t n = 0; n <= 50; ++n) {
    if (upper_em(n, 0) != 0) ++bad;
    if (n >= 1 && upper_em(n, choose2(n)) != (n + 1) * n * (n - 1) / 6) ++bad;
  }
  c.expect(bad == 0, "edges-method bound is 0 at m = 0 and D(K_n) at m = C(n,2), n <= 50");
  const Graph g = fixture_tree();
  c.expect(upper_em(17, 16) == 211, "fixture edges-method bound = " + std::to_string(upper_em(17, 16)));
  c.expect(upper_dm(g) == 242, "fixture degree-method bound = " + str(upper_dm(g)));
  return c.finish("bounds");
}

std::string run_command(const std::string& command) {
  std::array<char, 4096> buffer{};
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return "<popen failed>";
  while (std::size_t got = std::fread(buffer.data(), 1, buffer.size(), pipe.get())) out.append(buffer.data(), got);
  return out;
}

std::string render(const Table& t) {
  std::ostringstream os;
  t.write(os);
  return os.str();
}

bool criterion_9(const std::string& cli) {
  Check c(9);
  const Graph g = fixture_tree();
  auto library_outputs = [&](unsigned workers) {
    std::string out;
    out += render(curve_table(gnm_curve(10, Statistic::variance, Approximation::binomial,
                                        McOptions{10000, RngSeed{7}, workers}),
                              {"m", 10}));
    out += render(curve_table(rlt_curve({5, 50, 200}, Statistic::second_moment, McOptions{5000, RngSeed{7}, workers}),
                              {"n", std::nullopt}));
    out += render(significance_table(significance(g, 40, McOptions{50000, RngSeed{7}, workers}), true));
    out += format_double(mc_central_moment(g, 3, McOptions{20000, RngSeed{7}, workers}).value);
    return out;
  };
  const std::string base = library_outputs(1);
  c.expect(base == library_outputs(1), "library Monte Carlo output repeats byte for byte");
  c.expect(base == library_outputs(3), "library output identical with 3 workers");
  c.expect(base == library_outputs(8), "library output identical with 8 workers");

  if (!cli.empty()) {
    const std::string data = LINARR_DATA_DIR;
    const std::vector<std::string> commands{
        cli + " ensemble gnm --n 10 --mc 10000 --seed 7",
        cli + " ensemble tree --n-list 5,20,100 --mc 5000 --seed 11",
        cli + " sig " + data + "/fixture.edges --arrangement " + data + "/fixture.arr --mc 20000 --seed 3",
    };
    for (const auto& command : commands) {
      const std::string a = run_command(command + " 2>&1");
      const std::string b = run_command(command + " 2>&1");
      const std::string w = run_command(command + " --workers 4 2>&1");
      c.expect(!a.empty() && a == b && a == w, "`" + command.substr(cli.size() + 1) +
                                                   "` repeated and with --workers 4: byte-identical");
    }
  } else {
    std::cout << "  (command-line tool not given; CLI repeats not checked)\n";
  }
  return c.finish("determinism");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 2 ? argv[2] : "";
  const std::vector<std::function<bool()>> criteria{
      criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
      criterion_6, criterion_7, criterion_8, [&] { return criterion_9(cli); }};
  try {
    if (argc > 1) {
      const int k = std::stoi(argv[1]);
      if (k < 1 || k > static_cast<int>(criteria.size())) {
        std::cerr << "criterion must be 1.." << criteria.size() << '\n';
        return 2;
      }
      return criteria[static_cast<std::size_t>(k - 1)]() ? 0 : 1;
    }
    bool all = true;
    for (const auto& run : criteria) all = run() && all;
    return all ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "acceptance: " << e.what() << '\n';
    return 1;
  }
}
