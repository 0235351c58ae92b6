#pragma once

// Text formats: edge lists, arrangements, CoNLL-U-lite treebanks, and the
// CSV/TSV tables every report is rendered to.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linarr/bounds.hpp"
#include "linarr/ensembles.hpp"
#include "linarr/error.hpp"
#include "linarr/exact.hpp"
#include "linarr/graph.hpp"
#include "linarr/moments.hpp"
#include "linarr/oracle.hpp"
#include "linarr/significance.hpp"

namespace linarr {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Int>
std::optional<Int> parse_int(std::string_view s) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

inline std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

/// Next line that is neither blank nor a '#' comment; false at end of input.
inline bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    return true;
  }
  return false;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Edge lists and arrangements

/// "n m" header, then m lines "u v" (1-based). '#' lines and blank lines are
/// ignored.
inline Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!detail::next_content_line(in, line, line_no)) fail("edge list: missing \"n m\" header");
  const auto header = detail::split_ws(line);
  if (header.size() != 2) fail(detail::at_line(line_no) + "expected header \"n m\"");
  const auto n = detail::parse_int<std::uint32_t>(header[0]);
  const auto m = detail::parse_int<std::uint64_t>(header[1]);
  if (!n || !m) fail(detail::at_line(line_no) + "n and m must be non-negative integers");
  if (*m > choose2(*n)) {
    fail(detail::at_line(line_no) + "m = " + std::to_string(*m) + " exceeds C(n,2) for n = " +
         std::to_string(*n));
  }

  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(*m);
  while (edges.size() < *m) {
    if (!detail::next_content_line(in, line, line_no)) {
      fail("edge list: expected " + std::to_string(*m) + " edges, found " +
           std::to_string(edges.size()));
    }
    const auto fields = detail::split_ws(line);
    if (fields.size() != 2) fail(detail::at_line(line_no) + "expected an edge \"u v\"");
    const auto u = detail::parse_int<Vertex>(fields[0]);
    const auto v = detail::parse_int<Vertex>(fields[1]);
    if (!u || !v) fail(detail::at_line(line_no) + "vertices must be positive integers");
    edges.emplace_back(*u, *v);
  }
  if (detail::next_content_line(in, line, line_no)) {
    fail(detail::at_line(line_no) + "more edges than the declared m = " + std::to_string(*m));
  }
  return Graph::build(*n, edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

/// One line of n positions; column i holds the position of vertex i.
inline LinearArrangement read_arrangement(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<Vertex> positions;
  if (detail::next_content_line(in, line, line_no)) {
    for (auto field : detail::split_ws(line)) {
      const auto p = detail::parse_int<Vertex>(field);
      if (!p) fail(detail::at_line(line_no) + "positions must be positive integers");
      positions.push_back(*p);
    }
    if (detail::next_content_line(in, line, line_no)) {
      fail(detail::at_line(line_no) + "arrangement must be a single line");
    }
  }
  return LinearArrangement::from_positions(std::move(positions));
}

inline void write_arrangement(std::ostream& out, const LinearArrangement& a) {
  for (std::size_t v = 1; v <= a.size(); ++v) {
    if (v > 1) out << ' ';
    out << a.position(static_cast<Vertex>(v));
  }
  out << '\n';
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  return in;
}

inline Graph read_edge_list_file(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_edge_list(in);
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

inline LinearArrangement read_arrangement_file(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_arrangement(in);
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// CoNLL-U-lite

struct Token {
  std::uint32_t index = 0;  // 1-based position in the sentence
  std::uint32_t head = 0;   // 0 for the root
  std::string upos;
};

struct TreebankSentence {
  std::vector<Token> tokens;
  std::size_t first_line = 0;  // where the sentence starts in the input

  Graph graph() const {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const Token& t : tokens)
      if (t.head != 0) edges.emplace_back(t.index, t.head);
    return Graph::build(tokens.size(), edges);
  }

  /// Words stay in sentence order.
  LinearArrangement arrangement() const { return LinearArrangement::identity(tokens.size()); }
};

namespace detail {

inline TreebankSentence finish_sentence(std::vector<Token> raw, std::vector<std::size_t> lines,
                                        std::size_t first_line, bool exclude_punct) {
  const std::size_t n = raw.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].index != i + 1) {
      fail(at_line(lines[i]) + "token id " + std::to_string(raw[i].index) + " out of sequence (expected " +
           std::to_string(i + 1) + ")");
    }
    if (raw[i].head > n) {
      fail(at_line(lines[i]) + "head " + std::to_string(raw[i].head) + " out of range for a " +
           std::to_string(n) + "-token sentence");
    }
    if (raw[i].head == raw[i].index) fail(at_line(lines[i]) + "token is its own head");
  }

  TreebankSentence s;
  s.first_line = first_line;
  if (!exclude_punct) {
    s.tokens = std::move(raw);
    return s;
  }
  // Drop PUNCT tokens and their edges, renumber the rest in order.
  std::vector<std::uint32_t> renumber(n + 1, 0);
  std::uint32_t next = 0;
  for (const Token& t : raw)
    if (t.upos != "PUNCT") renumber[t.index] = ++next;
  for (const Token& t : raw) {
    if (t.upos == "PUNCT") continue;
    s.tokens.push_back({renumber[t.index], t.head == 0 ? 0 : renumber[t.head], t.upos});
  }
  return s;
}

}  // namespace detail

/// Tab-separated 10-column records, blank lines between sentences. Only ID,
/// UPOS and HEAD are read. Multiword ranges (1-2) and empty nodes (1.1) are
/// skipped, as are '#' comment lines.
inline std::vector<TreebankSentence> parse_conllu_lite(std::istream& in, bool exclude_punct) {
  std::vector<TreebankSentence> sentences;
  std::vector<Token> raw;
  std::vector<std::size_t> lines;
  std::size_t first_line = 0, line_no = 0;
  std::string line;

  auto flush = [&] {
    if (raw.empty()) return;
    sentences.push_back(detail::finish_sentence(std::move(raw), std::move(lines), first_line,
                                                exclude_punct));
    raw.clear();
    lines.clear();
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (detail::trim(line).empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') continue;

    std::vector<std::string_view> cols;
    std::string_view rest = line;
    while (true) {
      const auto tab = rest.find('\t');
      cols.push_back(rest.substr(0, tab));
      if (tab == std::string_view::npos) break;
      rest.remove_prefix(tab + 1);
    }
    if (cols.size() != 10) {
      fail(detail::at_line(line_no) + "expected 10 tab-separated columns, found " +
           std::to_string(cols.size()));
    }
    if (cols[0].find_first_of("-.") != std::string_view::npos) continue;
    const auto id = detail::parse_int<std::uint32_t>(cols[0]);
    if (!id || *id == 0) fail(detail::at_line(line_no) + "malformed token id '" + std::string(cols[0]) + "'");
    const auto head = detail::parse_int<std::uint32_t>(cols[6]);
    if (!head) fail(detail::at_line(line_no) + "non-integer head '" + std::string(cols[6]) + "'");
    if (raw.empty()) first_line = line_no;
    raw.push_back({*id, *head, std::string(cols[3])});
    lines.push_back(line_no);
  }
  flush();
  return sentences;
}

// ---------------------------------------------------------------------------
// Tables

enum class TableFormat { csv, tsv };

inline std::string format_double(double x) {
  if (x == 0) return "0";  // also folds -0
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<std::string> row) {
    require(row.size() == header_.size(), "table row has the wrong number of cells");
    rows_.push_back(std::move(row));
  }

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  void write(std::ostream& out, TableFormat format = TableFormat::csv) const {
    write_row(out, header_, format);
    for (const auto& row : rows_) write_row(out, row, format);
  }

 private:
  static void write_row(std::ostream& out, const std::vector<std::string>& row, TableFormat format) {
    const char sep = format == TableFormat::csv ? ',' : '\t';
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << sep;
      const std::string& cell = row[i];
      if (format == TableFormat::csv && cell.find_first_of(",\"\n") != std::string::npos) {
        out << '"';
        for (char c : cell) {
          if (c == '"') out << '"';
          out << c;
        }
        out << '"';
      } else {
        out << cell;
      }
    }
    out << '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Two- or three-column key/value table; rationals as "p/q", plus a decimal
/// column when asked.
class RecordBuilder {
 public:
  explicit RecordBuilder(bool decimal)
      : decimal_(decimal),
        table_(decimal ? std::vector<std::string>{"key", "value", "decimal"}
                       : std::vector<std::string>{"key", "value"}) {}

  RecordBuilder& add(const std::string& key, const ExactScalar& value) {
    return add(key, to_string(value), to_double(value));
  }

  RecordBuilder& add(const std::string& key, std::uint64_t value) {
    return add(key, std::to_string(value), static_cast<double>(value));
  }

  RecordBuilder& add(const std::string& key, const std::string& value, std::optional<double> decimal) {
    if (decimal_) {
      table_.add({key, value, decimal ? format_double(*decimal) : ""});
    } else {
      table_.add({key, value});
    }
    return *this;
  }

  Table table() const { return table_; }

 private:
  bool decimal_;
  Table table_;
};

inline Table moments_table(const MomentsReport& r, bool decimal) {
  RecordBuilder b(decimal);
  b.add("n", r.n).add("m", r.m).add("sum_k2", r.sum_k2);
  if (r.n > 0) b.add("k2", ratio(r.sum_k2, r.n));
  b.add("q", r.q)
      .add("f0", ExactScalar(r.f.f0))
      .add("f1", ExactScalar(r.f.f1))
      .add("f2", ExactScalar(r.f.f2))
      .add("E_D", r.e_d)
      .add("E_D2", r.e_d2)
      .add("V_D", r.var_d);
  return b.table();
}

inline Table bounds_table(const BoundsReport& r, bool decimal) {
  RecordBuilder b(decimal);
  b.add("naive_max", r.naive_max)
      .add("upper_dm", r.upper_dm)
      .add("upper_em", r.upper_em)
      .add("upper", r.upper)
      .add("d_star", r.d_star)
      .add("F_d_star", r.f_dstar)
      .add("minla_lower", r.minla_lower);
  if (r.bhatia_davis_minla_upper) b.add("minla_upper_bhatia_davis", *r.bhatia_davis_minla_upper);
  return b.table();
}

inline std::string signed_root_string(const SignedRoot& x) {
  if (x.sign == 0) return "0";
  return std::string(x.sign < 0 ? "-" : "") + "sqrt(" + to_string(x.square) + ")";
}

inline Table significance_table(const SignificanceReport& r, bool decimal) {
  RecordBuilder b(decimal);
  b.add("D", r.z.d_observed).add("E_D", r.z.e_d).add("V_D", r.z.var_d);
  b.add("z", signed_root_string(r.z.z), r.z.z.to_double());
  b.add("z2", r.z.z.square);
  b.add("c_star", signed_root_string(r.c_star), r.c_star.to_double());
  b.add("cantelli_bound", r.cantelli);
  b.add("unimodal_bound_assumes_symmetric_unimodal", r.unimodal);
  if (r.mc_p) {
    b.add("mc_p", format_double(*r.mc_p), *r.mc_p);
    b.add("mc_replicas", static_cast<std::uint64_t>(r.mc_replicas));
  }
  return b.table();
}

/// D, count, P(D <= x) as a rational and as a float.
inline Table distribution_table(const ExactDistribution& dist) {
  Table t({"D", "count", "cumulative", "cumulative_decimal"});
  std::uint64_t running = 0;
  for (const auto& [d, c] : dist.counts) {
    running += c;
    const ExactScalar p = ratio(running, dist.total);
    t.add({std::to_string(d), std::to_string(c), to_string(p), format_double(to_double(p))});
  }
  return t;
}

struct CurveLayout {
  std::string parameter = "parameter";
  /// For G(n,m) curves: n, adding delta = m / C(n,2) and every value divided
  /// by D(K_n).
  std::optional<std::uint64_t> normalize_n;
};

inline Table curve_table(const EnsembleCurve& curve, const CurveLayout& layout = {}) {
  std::vector<std::string> header{layout.parameter, "exact", "approx", "mc_mean", "mc_stderr", "replicas"};
  const std::vector<std::pair<std::string, ExactScalar>> none;
  const auto& refs = curve.rows.empty() ? none : curve.rows.front().references;
  for (const auto& [name, value] : refs) header.push_back(name);
  ExactScalar scale = 1;
  if (layout.normalize_n) {
    header.insert(header.end(), {"delta", "exact_normalized", "approx_normalized", "mc_mean_normalized",
                                 "mc_stderr_normalized"});
    scale = ExactScalar(complete_graph_d(*layout.normalize_n));
    require(scale != 0, "normalization needs n >= 2");
  }

  Table t(std::move(header));
  for (const CurveRow& row : curve.rows) {
    std::vector<std::string> cells{format_double(row.parameter), to_string(row.exact),
                                   row.approx ? to_string(*row.approx) : "",
                                   row.mc ? format_double(row.mc->mean) : "",
                                   row.mc ? format_double(row.mc->std_error) : "",
                                   row.mc ? std::to_string(row.mc->replicas) : ""};
    for (const auto& [name, value] : row.references) cells.push_back(to_string(value));
    if (layout.normalize_n) {
      const double s = to_double(scale);
      cells.push_back(to_string(ExactScalar(static_cast<std::uint64_t>(row.parameter)) /
                                ExactScalar(choose2(*layout.normalize_n))));
      cells.push_back(to_string(row.exact / scale));
      cells.push_back(row.approx ? to_string(*row.approx / scale) : "");
      cells.push_back(row.mc ? format_double(row.mc->mean / s) : "");
      cells.push_back(row.mc ? format_double(row.mc->std_error / s) : "");
    }
    t.add(std::move(cells));
  }
  return t;
}

inline Table hubiness_table(const std::vector<HubinessRow>& rows) {
  Table t({"sum_k2", "k2", "h", "V_D", "V_D_normalized", "h_decimal", "V_D_normalized_decimal"});
  for (const auto& r : rows) {
    t.add({std::to_string(r.sum_k2), to_string(r.k2), to_string(r.h), to_string(r.var_d),
           to_string(r.var_normalized), format_double(to_double(r.h)),
           format_double(to_double(r.var_normalized))});
  }
  return t;
}

}  // namespace linarr
