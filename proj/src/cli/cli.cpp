#include "tlenv/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "tlenv/algebra.hpp"
#include "tlenv/errors.hpp"
#include "tlenv/gns.hpp"
#include "tlenv/meander.hpp"
#include "tlenv/serialize.hpp"
#include "tlenv/spectrum.hpp"

namespace tlenv {

using json = nlohmann::ordered_json;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::optional<double> parse_delta(const std::string& s) {
  if (s == "symbolic") return std::nullopt;
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("--delta must be \"symbolic\" or a number");
  }
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

int report_checks(const std::string& command, const std::vector<CheckResult>& checks, const RunConfig& cfg,
                  std::ostream& out) {
  bool all = true;
  for (const auto& c : checks) all = all && c.passed;
  switch (cfg.format) {
    case OutputFormat::Json: {
      json o;
      o["command"] = command;
      json arr = json::array();
      for (const auto& c : checks) {
        json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        e["cases"] = c.cases;
        if (!c.passed) e["counterexample"] = c.detail;
        arr.push_back(e);
      }
      o["checks"] = arr;
      o["passed"] = all;
      out << o.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << "check,result,cases\n";
      for (const auto& c : checks) out << csv_quote(c.name) << "," << (c.passed ? "PASS" : "FAIL") << "," << c.cases << "\n";
      break;
    case OutputFormat::Text:
      for (const auto& c : checks) {
        out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(36) << c.name << " cases=" << c.cases << "\n";
        if (!c.passed) out << "      counterexample: " << c.detail << "\n";
      }
      out << (all ? "all checks passed" : "some checks FAILED") << "\n";
      break;
  }
  return all ? 0 : 1;
}

int cmd_meander(const RunConfig& cfg, std::ostream& out) {
  MeanderCount m = enumerate_meanders(cfg.n);
  switch (cfg.format) {
    case OutputFormat::Json: out << emit_meander(m); break;
    case OutputFormat::Csv:
      out << "components,count\n";
      for (int k = 0; k < m.order; ++k) out << k + 1 << "," << m.counts[k] << "\n";
      break;
    case OutputFormat::Text:
      out << "n = " << m.order << "\n";
      for (int k = 0; k < m.order; ++k) out << "M(" << k + 1 << ") = " << m.counts[k] << "\n";
      out << "m_" << m.order << "(q) = " << meander_polynomial(m).to_string('q') << "\n";
      break;
  }
  return 0;
}

GradedElement load_element(const RunConfig& cfg) {
  if (cfg.element_path.empty()) throw UsageError("--element is required");
  return parse_element(read_file(cfg.element_path), false);
}

int cmd_trace(const RunConfig& cfg, std::ostream& out) {
  GradedElement x = load_element(cfg);
  std::vector<std::pair<std::string, Scalar>> rows;
  if (x.flavor() == Flavor::W) {
    rows.emplace_back("Tr'", w_trace(x));
  } else {
    rows.emplace_back("Tr", v_trace(x));
    bool square = true;
    for (const auto& s : x.shapes()) square = square && s.left == s.right;
    if (square) rows.emplace_back("tau", normalized_trace(x));
  }
  switch (cfg.format) {
    case OutputFormat::Json: {
      json o;
      for (const auto& [name, v] : rows) {
        json e;
        e["exact"] = v.to_string();
        if (cfg.delta) e["value"] = v.evaluate(*cfg.delta);
        o[name] = e;
      }
      out << o.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << "quantity,exact" << (cfg.delta ? ",value" : "") << "\n";
      for (const auto& [name, v] : rows) {
        out << csv_quote(name) << "," << csv_quote(v.to_string());
        if (cfg.delta) out << "," << fmt(v.evaluate(*cfg.delta));
        out << "\n";
      }
      break;
    case OutputFormat::Text:
      for (const auto& [name, v] : rows) {
        out << name << " = " << v.to_string();
        if (cfg.delta) out << " = " << fmt(v.evaluate(*cfg.delta)) << " at d = " << fmt(*cfg.delta);
        out << "\n";
      }
      break;
  }
  return 0;
}

BoxShape parse_shape(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
  if (parts.size() != 4 && parts.size() != 5) throw UsageError("--shape must be l,r,t,b or l,r,t,b,-");
  int v[4];
  for (int i = 0; i < 4; ++i) {
    std::size_t used = 0;
    try {
      v[i] = std::stoi(parts[i], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != parts[i].size() || v[i] < 0) throw UsageError("--shape entries must be nonnegative integers");
  }
  Shading sh = Shading::Plus;
  if (parts.size() == 5) {
    if (parts[4] == "-") sh = Shading::Minus;
    else if (parts[4] != "+") throw UsageError("--shape shading must be + or -");
  }
  if ((v[0] + v[1] + v[2] + v[3]) % 2) throw UsageError("--shape must have an even number of points");
  if (v[0] + v[1] + v[2] + v[3] > kMaxBoundaryGuard)
    throw UsageError("--shape has more than " + std::to_string(kMaxBoundaryGuard) + " points");
  return BoxShape(v[0], v[1], v[2], v[3], sh);
}

int cmd_gram_matrix(const RunConfig& cfg, std::ostream& out) {
  Pairing p;
  if (cfg.pairing == "tau") p = Pairing::Tau;
  else if (cfg.pairing == "tau'") p = Pairing::TauPrime;
  else throw UsageError("--pairing must be tau or tau'");
  BoxShape s = parse_shape(cfg.shape);
  std::vector<TLDiagram> basis = enumerate_matchings(s);
  ScalarMatrix g = gram_matrix(basis, p);
  auto cell = [&](const Scalar& c) { return cfg.delta ? fmt(c.evaluate(*cfg.delta)) : c.to_string(); };
  switch (cfg.format) {
    case OutputFormat::Json: {
      json o;
      o["shape"] = s.to_string();
      o["pairing"] = cfg.pairing;
      o["delta"] = cfg.delta ? json(*cfg.delta) : json("symbolic");
      json b = json::array();
      for (const auto& d : basis) b.push_back(d.to_string());
      o["basis"] = b;
      json m = json::array();
      for (const auto& row : g) {
        json r = json::array();
        for (const auto& c : row) r.push_back(cfg.delta ? json(c.evaluate(*cfg.delta)) : json(c.to_string()));
        m.push_back(r);
      }
      o["matrix"] = m;
      out << o.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      if (cfg.delta) out << "delta," << fmt(*cfg.delta) << "\n";
      for (const auto& row : g) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << csv_quote(cell(row[j]));
        out << "\n";
      }
      break;
    case OutputFormat::Text:
      out << s.to_string() << " " << cfg.pairing << " n=" << basis.size() << "\n";
      for (std::size_t i = 0; i < basis.size(); ++i) out << "  [" << i << "] " << basis[i].to_string() << "\n";
      for (const auto& row : g) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "  " : "") << cell(row[j]);
        out << "\n";
      }
      break;
  }
  return 0;
}

int cmd_gram(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.shape.empty()) return cmd_gram_matrix(cfg, out);
  struct Row {
    BoxShape shape;
    Pairing pairing;
    std::size_t size;
    std::string value;
    bool ok;
  };
  std::vector<Row> rows;
  bool all = true;
  for (int l = 0; l <= cfg.max_boundary; ++l)
    for (int r = 0; l + r <= cfg.max_boundary; ++r)
      for (int t = 0; l + r + t <= cfg.max_boundary; ++t)
        for (int b = 0; l + r + t + b <= cfg.max_boundary; ++b) {
          if ((l + r + t + b) % 2) continue;
          BoxShape s(l, r, t, b);
          for (Pairing p : {Pairing::TauPrime, Pairing::Tau}) {
            ScalarMatrix g = gram_matrix(s, p);
            Row row{s, p, g.size(), "", true};
            if (cfg.delta) {
              double m = min_gram_eigenvalue(g, *cfg.delta);
              row.ok = m >= -1e-8;
              row.value = fmt(m);
            } else {
              row.value = determinant(g).to_string();
            }
            all = all && row.ok;
            rows.push_back(row);
          }
        }
  const char* label = cfg.delta ? "min_eigenvalue" : "determinant";
  auto pname = [](Pairing p) { return p == Pairing::Tau ? "tau" : "tau'"; };
  switch (cfg.format) {
    case OutputFormat::Json: {
      json o;
      o["delta"] = cfg.delta ? json(*cfg.delta) : json("symbolic");
      json arr = json::array();
      for (const auto& r : rows) {
        json e;
        e["shape"] = r.shape.to_string();
        e["pairing"] = pname(r.pairing);
        e["size"] = r.size;
        e[label] = r.value;
        if (cfg.delta) e["nonnegative"] = r.ok;
        arr.push_back(e);
      }
      o["grams"] = arr;
      out << o.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << "shape,pairing,size," << label << "\n";
      for (const auto& r : rows)
        out << csv_quote(r.shape.to_string()) << "," << pname(r.pairing) << "," << r.size << "," << csv_quote(r.value) << "\n";
      break;
    case OutputFormat::Text:
      for (const auto& r : rows)
        out << std::left << std::setw(20) << r.shape.to_string() << std::setw(5) << pname(r.pairing) << " n="
            << std::setw(4) << r.size << " " << label << " = " << r.value << (r.ok ? "" : "  NEGATIVE") << "\n";
      break;
  }
  return all ? 0 : 1;
}

int cmd_expectation(const RunConfig& cfg, std::ostream& out) {
  GradedElement x = load_element(cfg);
  if (cfg.delta) check_modulus(x, *cfg.delta);
  GradedElement e = conditional_expectation(x);
  switch (cfg.format) {
    case OutputFormat::Json: out << emit_element(e); break;
    case OutputFormat::Csv:
      out << "shape,diagram,coeff" << (cfg.delta ? ",value" : "") << "\n";
      for (const auto& [d, c] : e.terms()) {
        out << csv_quote(d.shape().to_string()) << "," << csv_quote(d.to_string()) << "," << csv_quote(c.to_string());
        if (cfg.delta) out << "," << fmt(c.evaluate(*cfg.delta));
        out << "\n";
      }
      break;
    case OutputFormat::Text:
      out << "E(x) = " << e.to_string() << "\n";
      if (cfg.delta)
        for (const auto& t : evaluate(e, *cfg.delta)) out << "  " << t.diagram.to_string() << " : " << fmt(t.value) << "\n";
      break;
  }
  return 0;
}

int cmd_index(const RunConfig& cfg, std::ostream& out) {
  if (cfg.graph_path.empty()) throw UsageError("--graph is required");
  if (cfg.k < 0) throw UsageError("--k must be nonnegative");
  PrincipalGraph g = parse_graph(read_file(cfg.graph_path));
  PFData pf = pf_dimensions(g);
  IndexValue idx = global_index(g, pf);
  std::vector<double> r;
  if (!idx.infinite && pf.delta > 1)
    for (int k = 0; k <= cfg.k; ++k) r.push_back(r_parameter(k, pf.delta, idx.value));
  std::string ival = idx.infinite ? "inf" : fmt(idx.value);
  switch (cfg.format) {
    case OutputFormat::Json: {
      json o;
      json vs = json::array();
      for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        json v;
        v["id"] = g.vertices[i].id;
        v["parity"] = g.vertices[i].even ? "even" : "odd";
        v["dim"] = pf.dims[i];
        vs.push_back(v);
      }
      o["vertices"] = vs;
      o["delta"] = pf.delta;
      o["residual"] = pf.residual;
      o["index"] = idx.infinite ? json("inf") : json(idx.value);
      o["r"] = r;
      out << o.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << "vertex,parity,dim\n";
      for (std::size_t i = 0; i < g.vertices.size(); ++i)
        out << csv_quote(g.vertices[i].id) << "," << (g.vertices[i].even ? "even" : "odd") << "," << fmt(pf.dims[i]) << "\n";
      break;
    case OutputFormat::Text:
      out << std::left << std::setw(12) << "vertex" << std::setw(8) << "parity" << "dim\n";
      for (std::size_t i = 0; i < g.vertices.size(); ++i)
        out << std::left << std::setw(12) << g.vertices[i].id << std::setw(8) << (g.vertices[i].even ? "even" : "odd")
            << fmt(pf.dims[i]) << "\n";
      out << "d = " << fmt(pf.delta) << "\n";
      out << "I = " << ival;
      for (std::size_t k = 0; k < r.size(); ++k) out << ", r_" << k << " = " << fmt(r[k]);
      out << "\n";
      break;
  }
  return 0;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "text") return OutputFormat::Text;
  throw UsageError("--format must be json, csv or text");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in Temperley-Lieb diagram algebras", "tlenv"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string delta = "symbolic", format = "text";

  struct Flags {
    bool delta = false, degree = false, boundary = false, seed = false, graph = false, element = false, n = false,
         k = false;
  };
  auto sub = [&](const char* name, const char* help, Flags f) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--format", format, "json, csv or text");
    if (f.delta) s->add_option("--delta", delta, "symbolic or a number");
    if (f.degree) s->add_option("--max-degree", cfg.max_degree, "largest degree of test elements");
    if (f.boundary) s->add_option("--max-boundary", cfg.max_boundary, "largest number of boundary points");
    if (f.seed) s->add_option("--seed", cfg.seed, "random seed");
    if (f.graph) s->add_option("--graph", cfg.graph_path, "graph document");
    if (f.element) s->add_option("--element", cfg.element_path, "element document");
    if (f.n) s->add_option("--n", cfg.n, "meander order");
    if (f.k) s->add_option("--k", cfg.k, "largest level for r_k");
    return s;
  };
  Flags f;
  f = {};
  f.delta = f.element = true;
  CLI::App* trace = sub("trace", "traces of an element", f);
  f = {};
  f.delta = f.boundary = true;
  CLI::App* gram = sub("gram", "Gram matrices of all shapes, or of one with --shape", f);
  gram->add_option("--shape", cfg.shape, "l,r,t,b[,-]: export this Gram matrix");
  gram->add_option("--pairing", cfg.pairing, "tau or tau' (with --shape)");
  f = {};
  f.n = true;
  CLI::App* meander = sub("meander", "meander counts and polynomial", f);
  f = {};
  f.boundary = f.seed = true;
  CLI::App* cob = sub("cob-check", "orthogonalization identities", f);
  f = {};
  f.degree = f.seed = true;
  CLI::App* deriv = sub("derivation-check", "derivation identities", f);
  f = {};
  f.degree = true;
  CLI::App* conj = sub("conjugate-check", "conjugate variable pairing", f);
  f = {};
  f.delta = f.element = true;
  CLI::App* expect = sub("expectation", "conditional expectation of an element", f);
  f = {};
  f.graph = f.k = true;
  CLI::App* index = sub("index", "Perron-Frobenius data, index and r_k", f);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    cfg.format = parse_format(format);
    cfg.delta = parse_delta(delta);
    if (cfg.max_degree < 0 || cfg.max_degree > kMaxDegreeGuard)
      throw UsageError("--max-degree must lie in 0.." + std::to_string(kMaxDegreeGuard));
    if (cfg.max_boundary < 0 || cfg.max_boundary > kMaxBoundaryGuard)
      throw UsageError("--max-boundary must lie in 0.." + std::to_string(kMaxBoundaryGuard));
    if (meander->parsed() && (cfg.n < 1 || cfg.n > kMaxMeanderOrder))
      throw UsageError("--n must lie in 1.." + std::to_string(kMaxMeanderOrder));
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (trace->parsed()) return cmd_trace(cfg, out);
    if (gram->parsed()) return cmd_gram(cfg, out);
    if (meander->parsed()) return cmd_meander(cfg, out);
    if (cob->parsed()) return report_checks("cob-check", cob_checks(cfg.max_boundary, cfg.seed), cfg, out);
    if (deriv->parsed())
      return report_checks("derivation-check", derivation_checks(cfg.max_degree, cfg.seed), cfg, out);
    if (conj->parsed()) return report_checks("conjugate-check", conjugate_checks(cfg.max_degree), cfg, out);
    if (expect->parsed()) return cmd_expectation(cfg, out);
    if (index->parsed()) return cmd_index(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const SchemaError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const GraphError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace tlenv
