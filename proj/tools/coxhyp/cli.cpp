#include "coxhyp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "coxhyp/coxhyp.hpp"

namespace coxhyp::cli {

namespace {

struct Options {
  std::string input;
  bool json = false;
  std::size_t resolution = 256;
  std::optional<double> tol;
  std::string index_set;
  std::string x, y;
  double tx = std::numbers::pi / 2;
  double ty = std::numbers::pi / 2;
  std::string csv;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string extension(const std::string& path) {
  return std::filesystem::path(path).extension().string();
}

Tolerance tolerance_of(const Options& o) {
  Tolerance t;
  if (o.tol) t.absolute = *o.tol;
  return t;
}

CoxeterSystem load_system(const Options& o) {
  const auto ext = extension(o.input);
  const auto text = read_file(o.input);
  if (ext == ".cox" || (ext == ".json" && looks_like_system_json(text))) {
    return parse_coxeter_system(text);
  }
  throw UsageError("this command needs a Coxeter system (.cox or .json with \"m\"), got '" +
                   o.input + "'");
}

AlmostNegativeMatrix load_matrix(const Options& o) {
  const auto ext = extension(o.input);
  const auto text = read_file(o.input);
  if (ext == ".cox" || (ext == ".json" && looks_like_system_json(text))) {
    return cosine_matrix(parse_coxeter_system(text));
  }
  if (ext == ".anm" || ext == ".json") return parse_matrix(text, tolerance_of(o));
  throw UsageError("unknown input extension '" + ext + "' (expected .cox, .anm or .json)");
}

IndexSet index_set_of(const Options& o, std::size_t order) {
  auto s = IndexSet::parse_one_based(o.index_set);
  if (!s.within(order)) throw UsageError("--I index out of range 1.." + std::to_string(order));
  return s;
}

// "v2" selects a vertex; otherwise comma-separated ambient coordinates.
NervePoint point_of(const std::string& text, const NerveComplex& nerve, const char* flag) {
  if (text.empty()) throw UsageError(std::string("missing ") + flag);
  if (text[0] == 'v') {
    const auto i = IndexSet::parse_one_based(text.substr(1));
    if (i.size() != 1 || !i.within(nerve.gram().order())) {
      throw UsageError(std::string("bad vertex for ") + flag);
    }
    return NervePoint::vertex(nerve.gram(), i[0]);
  }
  std::vector<double> coords;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      coords.push_back(std::stod(tok, &used));
      if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad coordinate '") + tok + "' for " + flag);
    }
  }
  Eigen::VectorXd v(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) v(static_cast<Eigen::Index>(i)) = coords[i];
  return NervePoint::from_ambient(nerve, v);
}

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string fmt_vector(const Eigen::VectorXd& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_number(v(i), 1e-12);
  }
  return s + ")";
}

void print_geodesic(const GeodesicResult& r, const Options& o, std::size_t order,
                    const NerveComplex& nerve, std::ostream& out) {
  if (!o.csv.empty()) {
    std::ofstream csv(o.csv);
    if (!csv) throw UsageError("cannot write '" + o.csv + "'");
    csv << path_to_csv(r, order);
  }
  if (o.json) {
    out << to_json(r) << '\n';
    return;
  }
  out << "distance: " << fmt(r.distance) << '\n';
  out << "error_bound: " << fmt(r.error_bound) << '\n';
  out << "resolution: " << r.resolution << '\n';
  const double zero = nerve.gram().thresholds(nerve.tolerance()).zero;
  out << "path:";
  for (std::size_t k = 0; k < r.path.size(); ++k) {
    out << (k ? " -> " : " ") << r.path[k].support(zero).to_string();
  }
  out << '\n';
}

// Commands ------------------------------------------------------------------

int cmd_classify(const Options& o, std::ostream& out) {
  auto a = load_matrix(o);
  if (!o.index_set.empty()) a = principal_submatrix(a, index_set_of(o, a.order()));
  const auto c = classify(a, tolerance_of(o));
  if (o.json) {
    out << "{\"class\":\"" << to_string(c) << "\",\"order\":" << a.order() << "}\n";
  } else {
    out << to_string(c) << '\n';
  }
  return kOk;
}

int cmd_link(const Options& o, std::ostream& out) {
  const auto a = load_matrix(o);
  const auto tol = tolerance_of(o);
  const auto lk = link(a, index_set_of(o, a.order()), tol);
  if (o.json) {
    out << to_json(lk) << '\n';
  } else {
    out << format_matrix(lk, a.thresholds(tol).zero) << '\n';
  }
  return kOk;
}

NerveComplex nerve_of(const Options& o) {
  const auto a = load_matrix(o);
  auto nerve = build_nerve(a, tolerance_of(o));
  if (!o.index_set.empty()) nerve = link_complex(nerve, index_set_of(o, a.order()));
  return nerve;
}

int cmd_nerve_dist(const Options& o, std::ostream& out) {
  const auto nerve = nerve_of(o);
  const auto x = point_of(o.x, nerve, "--x");
  const auto y = point_of(o.y, nerve, "--y");
  const auto r = intrinsic_distance(nerve, x, y, o.resolution);
  print_geodesic(r, o, nerve.gram().order(), nerve, out);
  return kOk;
}

int cmd_suspension_dist(const Options& o, std::ostream& out) {
  const auto nerve = nerve_of(o);
  const double pi = std::numbers::pi;
  auto end = [&](const std::string& text, double t, const char* flag) {
    SuspensionPoint p{t, std::nullopt};
    if (!(t == 0.0 || t == pi) || !text.empty()) p.base = point_of(text, nerve, flag);
    return p;
  };
  const auto r = suspension_distance(nerve, end(o.x, o.tx, "--x"), end(o.y, o.ty, "--y"),
                                     o.resolution);
  print_geodesic(r, o, nerve.gram().order(), nerve, out);
  return kOk;
}

int cmd_decide(const Options& o, std::ostream& out) {
  const auto sys = load_system(o);
  std::size_t max_rank = kDefaultMaxRank;
  if (const char* env = std::getenv("COX_MAX_N"); env && *env) {
    try {
      max_rank = static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw UsageError("COX_MAX_N must be a positive integer");
    }
  }
  const auto v = decide(sys, max_rank, tolerance_of(o));
  out << (o.json ? to_json(v, sys) : describe(v, sys)) << '\n';
  return kOk;
}

int cmd_chamber(const Options& o, std::ostream& out) {
  const auto sys = load_system(o);
  const auto c = chamber(sys);
  if (o.json) {
    out << to_json(c) << '\n';
    return kOk;
  }
  for (std::size_t j = 0; j < c.dual_basis.size(); ++j) {
    out << "u_" << sys.labels()[j] << " = " << fmt_vector(c.dual_basis[j]) << '\n';
  }
  out << "p = " << fmt_vector(c.apex) << '\n';
  for (const auto& [mask, q] : c.vertices) {
    out << "q" << IndexSet::from_mask(mask).to_string(sys.labels()) << " = " << fmt_vector(q)
        << '\n';
  }
  return kOk;
}

int cmd_davis(const Options& o, std::ostream& out) {
  const auto sys = load_system(o);
  const auto p = enumerate_davis_cells(sys);
  if (o.json) {
    out << to_json(p, sys) << '\n';
    return kOk;
  }
  out << "|W| = " << p.group_order << ", cells = " << p.cells.size() << '\n';
  for (std::size_t id = 0; id < p.cells.size(); ++id) {
    const auto& c = p.cells[id];
    out << '[' << id << "] " << word_to_string(c.word, sys.labels()) << " W_"
        << c.subset.to_string(sys.labels());
    if (!c.covers.empty()) {
      out << "  <";
      for (auto k : c.covers) out << ' ' << k;
    }
    out << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto r = verify_counterexamples(o.resolution);
  if (o.json) {
    out << to_json(r) << '\n';
  } else {
    for (const auto& c : r.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << ": computed " << fmt(c.computed)
          << " expected " << fmt(c.expected) << " (tol " << fmt(c.tolerance) << ")\n";
    }
  }
  return r.all_passed() ? kOk : kCheckFailed;
}

int cmd_lemma_b(const Options& o, std::ostream& out) {
  const auto a = load_matrix(o);
  const auto r = check_lemma_b(a, tolerance_of(o));
  if (o.json) {
    out << to_json(r) << '\n';
  } else {
    out << "witnesses: " << r.witnesses.size() << '\n';
    for (const auto& w : r.witnesses) {
      out << "  I=" << w.pivot_set.to_string() << " row " << w.row + 1 << '\n';
    }
    out << "conclusion: " << to_string(r.conclusion);
    if (r.split) out << ' ' << r.split->first.to_string() << " | " << r.split->second.to_string();
    out << '\n';
  }
  return r.violation() ? kLemmaViolation : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coxeter group hyperbolicity and almost negative matrix toolkit", "coxhyp"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Input file (.cox, .anm or .json)")->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Emit JSON");
    sub->add_option("--tol", o.tol, "Absolute zero / positive-definite threshold")
        ->check(CLI::PositiveNumber);
  };
  auto add_distance = [&](CLI::App* sub) {
    sub->add_option("--resolution", o.resolution, "Samples per barycentric direction (>= 8)")
        ->check(CLI::Range(std::size_t{8}, std::size_t{1} << 20));
    sub->add_option("--x", o.x, "First point: v<i> or comma-separated coordinates");
    sub->add_option("--y", o.y, "Second point");
    sub->add_option("--I", o.index_set, "Work in the link of this cell, e.g. 1,2");
    sub->add_option("--csv", o.csv, "Write the sampled path as CSV");
  };

  auto* classify_cmd = app.add_subcommand("classify", "Classify a matrix (or its --I block)");
  add_input(classify_cmd);
  add_common(classify_cmd);
  classify_cmd->add_option("--I", o.index_set, "Principal submatrix index set, e.g. 1,3");

  auto* link_cmd = app.add_subcommand("link", "Link matrix lk(I, A)");
  add_input(link_cmd);
  add_common(link_cmd);
  link_cmd->add_option("--I", o.index_set, "Index set, e.g. 1,2")->required();

  auto* nd_cmd = app.add_subcommand("nerve-dist", "Intrinsic distance in the nerve");
  add_input(nd_cmd);
  add_common(nd_cmd);
  add_distance(nd_cmd);

  auto* sd_cmd = app.add_subcommand("suspension-dist", "Distance in the suspension of the nerve");
  add_input(sd_cmd);
  add_common(sd_cmd);
  add_distance(sd_cmd);
  sd_cmd->add_option("--tx", o.tx, "Polar angle of x in [0, pi] (default pi/2)");
  sd_cmd->add_option("--ty", o.ty, "Polar angle of y in [0, pi] (default pi/2)");

  auto* decide_cmd = app.add_subcommand("decide", "Decide word-hyperbolicity of a Coxeter group");
  add_input(decide_cmd);
  add_common(decide_cmd);

  auto* chamber_cmd = app.add_subcommand("chamber", "Fundamental chamber of a finite system");
  add_input(chamber_cmd);
  chamber_cmd->add_flag("--json", o.json, "Emit JSON");

  auto* davis_cmd = app.add_subcommand("davis", "Spherical coset poset of a finite system");
  add_input(davis_cmd);
  davis_cmd->add_flag("--json", o.json, "Emit JSON");

  auto* verify_cmd = app.add_subcommand("verify-paper", "Recompute the three degenerate examples");
  verify_cmd->add_flag("--json", o.json, "Emit JSON");
  verify_cmd->add_option("--resolution", o.resolution, "Sampling resolution (>= 8)")
      ->check(CLI::Range(std::size_t{8}, std::size_t{1} << 20));

  auto* lemma_cmd = app.add_subcommand("lemma-b", "Zero-row link scan and split check");
  add_input(lemma_cmd);
  add_common(lemma_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (verify_cmd->parsed() && verify_cmd->count("--resolution") == 0) o.resolution = 512;

  try {
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (link_cmd->parsed()) return cmd_link(o, out);
    if (nd_cmd->parsed()) return cmd_nerve_dist(o, out);
    if (sd_cmd->parsed()) return cmd_suspension_dist(o, out);
    if (decide_cmd->parsed()) return cmd_decide(o, out);
    if (chamber_cmd->parsed()) return cmd_chamber(o, out);
    if (davis_cmd->parsed()) return cmd_davis(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (lemma_cmd->parsed()) return cmd_lemma_b(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace coxhyp::cli
