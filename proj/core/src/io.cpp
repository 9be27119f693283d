#include "coxhyp/io.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "coxhyp/errors.hpp"

namespace coxhyp {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> tokens_of(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> nonblank_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!trim(line).empty()) out.push_back(line);
  }
  return out;
}

std::size_t parse_count(const std::string& tok) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("expected a non-negative integer, got '" + tok + "'");
  }
  return v;
}

CoxeterOrder parse_order(const std::string& tok) {
  if (tok == "inf" || tok == "Inf" || tok == "INF" || tok == "oo") return kInfiniteOrder;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v >= kInfiniteOrder) {
    throw ParseError("expected an integer order or 'inf', got '" + tok + "'");
  }
  return static_cast<CoxeterOrder>(v);
}

double parse_real(const std::string& tok) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
    throw ParseError("expected a real number, got '" + tok + "'");
  }
  return v;
}

template <class T, class F>
std::vector<std::vector<T>> parse_matrix_lines(std::string_view text, F parse_entry) {
  const auto lines = nonblank_lines(text);
  if (lines.empty()) throw ParseError("empty input");
  const auto head = tokens_of(lines[0]);
  if (head.size() != 1) throw ParseError("first line must hold only the order n");
  const std::size_t n = parse_count(head[0]);
  if (lines.size() != n + 1) {
    throw ParseError("expected " + std::to_string(n) + " matrix rows, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<T>> rows;
  for (std::size_t r = 0; r < n; ++r) {
    const auto toks = tokens_of(lines[r + 1]);
    if (toks.size() != n) {
      throw ParseError("row " + std::to_string(r + 1) + " has " + std::to_string(toks.size()) +
                       " entries, expected " + std::to_string(n));
    }
    std::vector<T> row;
    for (const auto& t : toks) row.push_back(parse_entry(t));
    rows.push_back(std::move(row));
  }
  return rows;
}

CoxeterSystem parse_edge_list(std::string_view text) {
  std::vector<std::string> segments;
  std::string seg;
  std::istringstream in{std::string(text)};
  while (std::getline(in, seg, ';')) segments.push_back(seg);
  if (segments.empty()) throw ParseError("empty input");
  const auto head = tokens_of(segments[0]);
  if (head.size() != 1) throw ParseError("edge list must start with the generator count");
  const std::size_t n = parse_count(head[0]);
  if (n == 0) throw ParseError("generator count must be positive");
  std::vector<CoxeterOrder> m(n * n, 2);
  std::vector<bool> given(n * n, false);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  for (std::size_t k = 1; k < segments.size(); ++k) {
    const auto toks = tokens_of(segments[k]);
    if (toks.empty() && k + 1 == segments.size()) break;  // trailing ';'
    if (toks.size() != 3) throw ParseError("edge '" + trim(segments[k]) + "' is not 'i j m'");
    const auto i = parse_count(toks[0]);
    const auto j = parse_count(toks[1]);
    const auto order = parse_order(toks[2]);
    if (i == 0 || j == 0 || i > n || j > n) {
      throw ParseError("edge '" + trim(segments[k]) + "' has an index outside 1.." +
                       std::to_string(n));
    }
    if (i == j) throw ParseError("edge '" + trim(segments[k]) + "' joins a generator to itself");
    const auto a = (i - 1) * n + (j - 1);
    const auto b = (j - 1) * n + (i - 1);
    if (given[a] && m[a] != order) throw ParseError("conflicting orders for pair " + trim(segments[k]));
    m[a] = m[b] = order;
    given[a] = given[b] = true;
  }
  try {
    return CoxeterSystem(n, std::move(m));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);  // rejects trailing garbage
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json order_to_json(CoxeterOrder m) {
  if (m == kInfiniteOrder) return "inf";
  return m;
}

json number_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

json index_set_json(const IndexSet& s) {
  json a = json::array();
  for (auto i : s) a.push_back(i + 1);
  return a;
}

json vector_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

}  // namespace

bool looks_like_system_json(std::string_view text) {
  const auto t = trim(text);
  if (t.empty() || t.front() != '{') return false;
  try {
    return json::parse(t).contains("m");
  } catch (const json::exception&) {
    return false;
  }
}

CoxeterSystem parse_coxeter_system(std::string_view text) {
  const auto t = trim(text);
  if (t.empty()) throw ParseError("empty input");
  if (t.front() == '{') {
    const auto j = parse_json(t);
    if (!j.is_object() || !j.contains("n") || !j.contains("m")) {
      throw ParseError("Coxeter JSON needs keys \"n\" and \"m\"");
    }
    try {
      const auto n = j.at("n").get<std::size_t>();
      const auto& rows = j.at("m");
      if (!rows.is_array() || rows.size() != n) throw ParseError("\"m\" must have n rows");
      std::vector<CoxeterOrder> m;
      for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n) throw ParseError("\"m\" rows must have n entries");
        for (const auto& e : row) {
          if (e.is_string()) {
            m.push_back(parse_order(e.get<std::string>()));
          } else if (e.is_number_unsigned()) {
            m.push_back(parse_order(std::to_string(e.get<std::uint64_t>())));
          } else {
            throw ParseError("order entries must be non-negative integers or \"inf\"");
          }
        }
      }
      std::vector<std::string> labels;
      if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
      return CoxeterSystem(n, std::move(m), std::move(labels));
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid Coxeter JSON: ") + e.what());
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  if (t.find(';') != std::string::npos) return parse_edge_list(t);
  const auto rows = parse_matrix_lines<CoxeterOrder>(t, parse_order);
  if (rows.empty()) throw ParseError("generator count must be positive");
  try {
    return CoxeterSystem::from_rows(rows);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

AlmostNegativeMatrix parse_matrix(std::string_view text, const Tolerance& tol) {
  const auto t = trim(text);
  if (t.empty()) throw ParseError("empty input");
  std::vector<std::vector<double>> rows;
  if (t.front() == '{') {
    const auto j = parse_json(t);
    try {
      const auto n = j.at("n").get<std::size_t>();
      rows = j.at("a").get<std::vector<std::vector<double>>>();
      if (rows.size() != n) throw ParseError("\"a\" must have n rows");
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid matrix JSON: ") + e.what());
    }
  } else {
    rows = parse_matrix_lines<double>(t, parse_real);
  }
  if (rows.empty()) throw ParseError("matrix order must be positive");
  try {
    return AlmostNegativeMatrix::from_rows(rows, tol);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string to_json(const CoxeterSystem& sys) {
  json m = json::array();
  for (std::size_t i = 0; i < sys.rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < sys.rank(); ++j) row.push_back(order_to_json(sys.order(i, j)));
    m.push_back(std::move(row));
  }
  return json{{"n", sys.rank()}, {"m", m}, {"labels", sys.labels()}}.dump();
}

std::string to_json(const AlmostNegativeMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.order(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.order(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"n", a.order()}, {"a", rows}}.dump();
}

std::string format_number(double v, double zero) {
  if (std::abs(v) <= zero) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string format_matrix(const AlmostNegativeMatrix& a, double zero) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.order(); ++i) {
    if (i) s += ',';
    s += '[';
    for (std::size_t j = 0; j < a.order(); ++j) {
      if (j) s += ',';
      s += format_number(a(i, j), zero);
    }
    s += ']';
  }
  return s + "]";
}

std::string to_json(const GeodesicResult& r) {
  json path = json::array();
  for (const auto& p : r.path) {
    path.push_back({{"cell", index_set_json(p.cell)}, {"coeffs", p.coeffs}});
  }
  return json{{"distance", number_or_inf(r.distance)},
              {"error_bound", r.error_bound},
              {"resolution", r.resolution},
              {"path", path}}
      .dump();
}

std::string path_to_csv(const GeodesicResult& r, std::size_t order) {
  std::ostringstream out;
  out << "step,cell";
  for (std::size_t i = 0; i < order; ++i) out << ",x" << i + 1;
  out << '\n';
  out.precision(17);
  for (std::size_t k = 0; k < r.path.size(); ++k) {
    const auto v = r.path[k].ambient(order);
    std::string cell = r.path[k].cell.to_string();
    for (auto& c : cell) {
      if (c == ',') c = ' ';
    }
    out << k << ',' << cell;
    for (Eigen::Index i = 0; i < v.size(); ++i) out << ',' << v(i);
    out << '\n';
  }
  return out.str();
}

std::string to_json(const HyperbolicityVerdict& v, const CoxeterSystem& sys) {
  json out{{"hyperbolic", v.hyperbolic}};
  if (!v.witness) {
    out["witness"] = nullptr;
  } else if (const auto* a = std::get_if<AffineWitness>(&*v.witness)) {
    out["witness"] = {{"kind", "affine"},
                      {"subset", index_set_json(a->subset)},
                      {"labels", a->subset.to_string(sys.labels())}};
  } else {
    const auto& c = std::get<CommutingWitness>(*v.witness);
    out["witness"] = {{"kind", "commuting"},
                      {"first", index_set_json(c.first)},
                      {"second", index_set_json(c.second)},
                      {"labels", {c.first.to_string(sys.labels()), c.second.to_string(sys.labels())}}};
  }
  return out.dump();
}

std::string to_json(const LemmaBReport& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) {
    w.push_back({{"pivot_set", index_set_json(x.pivot_set)}, {"row", x.row + 1}});
  }
  json out{{"witnesses", w}, {"conclusion", std::string(to_string(r.conclusion))}};
  if (r.split) {
    out["split"] = {index_set_json(r.split->first), index_set_json(r.split->second)};
  }
  return out.dump();
}

std::string to_json(const Chamber& c) {
  json basis = json::array();
  for (const auto& u : c.dual_basis) basis.push_back(vector_json(u));
  json vertices = json::object();
  for (const auto& [mask, q] : c.vertices) {
    vertices[IndexSet::from_mask(mask).to_string()] = vector_json(q);
  }
  return json{{"dual_basis", basis}, {"apex", vector_json(c.apex)}, {"vertices", vertices}}.dump();
}

std::string to_json(const DavisPoset& p, const CoxeterSystem& sys) {
  json cells = json::array();
  for (std::size_t id = 0; id < p.cells.size(); ++id) {
    const auto& c = p.cells[id];
    cells.push_back({{"id", id},
                     {"word", word_to_string(c.word, sys.labels())},
                     {"subset", index_set_json(c.subset)},
                     {"covers", c.covers}});
  }
  return json{{"group_order", p.group_order}, {"cells", cells}}.dump();
}

std::string to_json(const CounterexampleReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"description", c.description},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"tolerance", c.tolerance},
                      {"passed", c.passed}});
  }
  return json{{"checks", checks}, {"all_passed", r.all_passed()}}.dump();
}

}  // namespace coxhyp
