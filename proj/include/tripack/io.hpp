#ifndef TRIPACK_IO_HPP
#define TRIPACK_IO_HPP

// Plain-text, line-oriented formats. Files are 1-based; the in-memory
// types are 0-based. Serializers emit a canonical ordering so that
// parse(serialize(x)) == x, and unknown trailing content is an error.

#include <array>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cnf.hpp"
#include "core.hpp"

namespace tripack {

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

class LineReader {
 public:
  explicit LineReader(const std::string& text) : in_(text) {}

  // next non-empty line; empty/whitespace-only lines are skipped
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++lineno_;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  }

  int lineno() const { return lineno_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error("line " + std::to_string(lineno_) + ": " + msg);
  }

  void expect_end() {
    std::string line;
    if (next(line)) fail("unexpected trailing content: '" + line + "'");
  }

 private:
  std::istringstream in_;
  int lineno_ = 0;
};

inline std::vector<long long> parse_ints(LineReader& r, const std::string& line) {
  std::istringstream ss(line);
  std::vector<long long> out;
  long long v;
  while (ss >> v) out.push_back(v);
  std::string rest;
  if (ss.clear(), ss >> rest) r.fail("expected integers, got '" + rest + "'");
  return out;
}

}  // namespace detail

// --- ltour ----------------------------------------------------------------
// line 1: "ltour <n> <m>"; then m lines "<tail> <head>", 1-based, tail > head

inline LinearTournament parse_ltour(const std::string& text) {
  detail::LineReader r(text);
  std::string line;
  if (!r.next(line)) throw parse_error("empty ltour document");
  std::istringstream h(line);
  std::string kw;
  long long n = -1, m = -1;
  if (!(h >> kw >> n >> m) || kw != "ltour") r.fail("expected 'ltour <n> <m>' header");
  if (n < 0 || m < 0) r.fail("negative counts in header");
  LinearTournament t;
  t.n = static_cast<int>(n);
  for (long long i = 0; i < m; ++i) {
    if (!r.next(line)) throw parse_error("ltour: expected " + std::to_string(m) + " arc lines, got " + std::to_string(i));
    auto v = detail::parse_ints(r, line);
    if (v.size() != 2) r.fail("expected '<tail> <head>'");
    long long tail = v[0], head = v[1];
    if (tail < 1 || tail > n || head < 1 || head > n) r.fail("arc endpoint out of range");
    if (head >= tail) r.fail("arc has head >= tail");
    t.backward.push_back(Arc{static_cast<int>(tail - 1), static_cast<int>(head - 1)});
  }
  r.expect_end();
  std::sort(t.backward.begin(), t.backward.end());
  for (std::size_t i = 1; i < t.backward.size(); ++i)
    if (t.backward[i] == t.backward[i - 1])
      throw parse_error("ltour: duplicate arc (" + std::to_string(t.backward[i].tail + 1) + " " +
                        std::to_string(t.backward[i].head + 1) + ")");
  return t;
}

inline std::string serialize_ltour(const LinearTournament& t) {
  auto arcs = t.backward;
  std::sort(arcs.begin(), arcs.end());
  std::ostringstream out;
  out << "ltour " << t.n << " " << arcs.size() << "\n";
  for (const Arc& a : arcs) out << a.tail + 1 << " " << a.head + 1 << "\n";
  return out.str();
}

// --- packing ----------------------------------------------------------------
// line 1: "packing <k>"; then k lines "<u> <v> <w>", 1-based, increasing.
// Triangle kinds live in the tournament, not the file; bind_packing
// resolves them against a host instance.

inline std::vector<std::array<int, 3>> parse_packing(const std::string& text) {
  detail::LineReader r(text);
  std::string line;
  if (!r.next(line)) throw parse_error("empty packing document");
  std::istringstream h(line);
  std::string kw;
  long long k = -1;
  if (!(h >> kw >> k) || kw != "packing") r.fail("expected 'packing <k>' header");
  if (k < 0) r.fail("negative triangle count");
  std::vector<std::array<int, 3>> out;
  for (long long i = 0; i < k; ++i) {
    if (!r.next(line)) throw parse_error("packing: expected " + std::to_string(k) + " triangle lines, got " + std::to_string(i));
    auto v = detail::parse_ints(r, line);
    if (v.size() != 3) r.fail("expected '<u> <v> <w>'");
    if (v[0] < 1) r.fail("position out of range");
    if (!(v[0] < v[1] && v[1] < v[2])) r.fail("positions not strictly increasing");
    out.push_back({static_cast<int>(v[0] - 1), static_cast<int>(v[1] - 1), static_cast<int>(v[2] - 1)});
  }
  r.expect_end();
  return out;
}

// classify parsed triples against a host tournament
inline Packing bind_packing(const LinearTournament& t, const std::vector<std::array<int, 3>>& triples) {
  ArcSet arcs(t);
  Packing p;
  for (const auto& tr : triples) {
    if (tr[2] >= t.n) throw parse_error("packing: position out of range for instance");
    auto cls = classify_triangle(arcs, tr[0], tr[1], tr[2]);
    if (!cls)
      throw parse_error("packing: (" + std::to_string(tr[0] + 1) + " " + std::to_string(tr[1] + 1) +
                        " " + std::to_string(tr[2] + 1) + ") is not a triangle of the instance");
    p.triangles.push_back(*cls);
  }
  return p;
}

inline std::string serialize_packing(const Packing& p) {
  auto tris = p.triangles;
  std::sort(tris.begin(), tris.end());
  std::ostringstream out;
  out << "packing " << tris.size() << "\n";
  for (const Triangle& t : tris) out << t.u + 1 << " " << t.v + 1 << " " << t.w + 1 << "\n";
  return out.str();
}

// --- tour (adjacency matrix) ------------------------------------------------
// line 1: "tour <n>"; then n rows of n characters in {0,1}

inline AdjacencyTournament parse_tour(const std::string& text) {
  detail::LineReader r(text);
  std::string line;
  if (!r.next(line)) throw parse_error("empty tour document");
  std::istringstream h(line);
  std::string kw;
  long long n = -1;
  if (!(h >> kw >> n) || kw != "tour") r.fail("expected 'tour <n>' header");
  if (n < 0) r.fail("negative vertex count");
  AdjacencyTournament a = make_adjacency(static_cast<int>(n));
  for (long long i = 0; i < n; ++i) {
    if (!r.next(line)) throw parse_error("tour: expected " + std::to_string(n) + " matrix rows");
    std::string row;
    for (char c : line)
      if (c != ' ' && c != '\t' && c != '\r') row.push_back(c);
    if (static_cast<long long>(row.size()) != n) r.fail("matrix row has wrong length");
    for (long long j = 0; j < n; ++j) {
      if (row[j] != '0' && row[j] != '1') r.fail("matrix entry must be 0 or 1");
      a.mat[static_cast<std::size_t>(i) * n + j] = (row[j] == '1');
    }
  }
  r.expect_end();
  auto violations = validate(a);
  if (!violations.empty()) throw parse_error("tour: " + violations.front());
  return a;
}

inline std::string serialize_tour(const AdjacencyTournament& a) {
  std::ostringstream out;
  out << "tour " << a.n << "\n";
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < a.n; ++j) out << (i != j && a.arc(i, j) ? '1' : '0');
    out << "\n";
  }
  return out.str();
}

// --- DIMACS cnf ---------------------------------------------------------------

enum class CnfMode { Any, TwoSat3, ThreeSat3 };

inline CnfFormula parse_cnf(const std::string& text, CnfMode mode = CnfMode::Any) {
  detail::LineReader r(text);
  std::string line;
  long long nv = -1, nc = -1;
  while (r.next(line)) {
    if (line[0] == 'c') continue;
    std::istringstream h(line);
    std::string p, kind;
    if (!(h >> p >> kind >> nv >> nc) || p != "p" || kind != "cnf") r.fail("expected 'p cnf <vars> <clauses>'");
    break;
  }
  if (nv < 0 || nc < 0) throw parse_error("cnf: missing or malformed problem line");
  CnfFormula f;
  f.num_vars = static_cast<int>(nv);
  while (static_cast<long long>(f.clauses.size()) < nc) {
    if (!r.next(line)) throw parse_error("cnf: expected " + std::to_string(nc) + " clauses, got " + std::to_string(f.clauses.size()));
    if (line[0] == 'c') continue;
    auto v = detail::parse_ints(r, line);
    if (v.empty() || v.back() != 0) r.fail("clause line must end with 0");
    std::vector<Literal> clause;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      long long lit = v[i];
      if (lit == 0) r.fail("unexpected 0 inside clause");
      long long var = lit > 0 ? lit : -lit;
      if (var > nv) r.fail("literal references variable beyond header");
      clause.push_back(Literal{static_cast<int>(var - 1), lit > 0});
    }
    if (clause.empty()) r.fail("empty clause");
    f.clauses.push_back(std::move(clause));
  }
  r.expect_end();
  if (mode == CnfMode::TwoSat3) check_sat3_occurrences(f, 2);
  if (mode == CnfMode::ThreeSat3) check_sat3_occurrences(f, 3);
  return f;
}

inline std::string serialize_cnf(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
  for (const auto& cl : f.clauses) {
    for (const Literal& l : cl) out << (l.positive ? l.var + 1 : -(l.var + 1)) << " ";
    out << "0\n";
  }
  return out.str();
}

// --- layout -------------------------------------------------------------------
// line-oriented "slot <name> <position>" records, 1-based positions

inline std::string serialize_layout(const std::vector<std::pair<std::string, int>>& slots) {
  std::ostringstream out;
  for (const auto& [name, pos] : slots) out << "slot " << name << " " << pos + 1 << "\n";
  return out.str();
}

inline std::vector<std::pair<std::string, int>> parse_layout(const std::string& text) {
  detail::LineReader r(text);
  std::string line;
  std::vector<std::pair<std::string, int>> out;
  while (r.next(line)) {
    std::istringstream ss(line);
    std::string kw, name;
    long long pos;
    if (!(ss >> kw >> name >> pos) || kw != "slot") r.fail("expected 'slot <name> <position>'");
    if (pos < 1) r.fail("position must be 1-based");
    std::string rest;
    if (ss >> rest) r.fail("trailing content on slot line");
    out.emplace_back(name, static_cast<int>(pos - 1));
  }
  return out;
}

// --- files ---------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream out;
    out << std::cin.rdbuf();
    return out.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
}

}  // namespace tripack

#endif  // TRIPACK_IO_HPP
