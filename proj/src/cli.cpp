#include "vwdg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vwdg/closed_forms.hpp"
#include "vwdg/equivalence.hpp"
#include "vwdg/errors.hpp"
#include "vwdg/graph_json.hpp"
#include "vwdg/verify.hpp"

namespace vwdg {

namespace {

struct Options {
  std::string count_kind;
  std::string omega;
  bool brute = false;
  std::size_t limit = 0;
  std::string op, op_json, sigma, mu, input;
  std::size_t vertex = 0, k = 0;
  bool members = false;
  std::string suite;
  long max_n = 6;
  std::string family, format = "csv";
  long max = 6;
};

std::string read_input(const std::string &path, std::istream &in) {
  std::ostringstream text;
  if (path == "-") {
    text << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot read '" + path + "'");
    text << file.rdbuf();
  }
  return text.str();
}

int count(const Options &o, std::ostream &out, std::ostream &err) {
  const auto omega = DimensionFunction::parse(o.omega);
  if (o.count_kind == "dj") {
    const BigInt value = count_M_omega(omega);
    if (o.brute) {
      const auto listed = enumerate_acyclic(omega).size();
      if (listed != value) {
        err << "enumeration disagrees: formula " << value << ", listed " << listed << '\n';
        out << listed << '\n';
        return 1;
      }
    }
    out << value << '\n';
    return 0;
  }

  std::optional<BigInt> formula;
  std::string source = "formula";
  if (omega.vertex_count() == 2) {
    formula = count_two_simplices(static_cast<long>(omega[0]), static_cast<long>(omega[1]));
  } else if (omega.vertex_count() == 3) {
    auto dims = omega.dims();
    std::sort(dims.begin(), dims.end());
    const auto r = count_three_simplices(static_cast<long>(dims[0]), static_cast<long>(dims[1]), static_cast<long>(dims[2]));
    formula = r.total;
    source += ", branch " + r.branch;
  }
  if (formula && !o.brute) {
    err << "source: " << source << '\n';
    out << *formula << '\n';
    return 0;
  }
  const BigInt brute = count_classes(omega);
  err << "source: brute\n";
  out << brute << '\n';
  if (formula && *formula != brute) {
    err << "formula disagrees: " << source << " gives " << *formula << ", brute force gives " << brute << '\n';
    return 1;
  }
  return 0;
}

int enumerate(const Options &o, std::ostream &out) {
  std::size_t emitted = 0;
  for_each_acyclic(DimensionFunction::parse(o.omega), [&](const VWDigraph &g) {
    out << graph_to_json_string(g) << '\n';
    return o.limit == 0 || ++emitted < o.limit;
  });
  return 0;
}

Operation operation_from_flags(const Options &o) {
  if (!o.op_json.empty()) return operation_from_json(nlohmann::json::parse(o.op_json));
  if (o.op.empty()) throw std::invalid_argument("apply needs --op or --op-json");
  auto perm_field = [](const std::string &text) { return Permutation::parse(text).one_line(); };
  nlohmann::json doc{{"op", o.op}};
  if (o.op == "reorder") {
    if (o.mu.empty()) throw std::invalid_argument("reorder needs --mu");
    doc["mu"] = perm_field(o.mu);
  } else {
    if (o.vertex == 0) throw std::invalid_argument(o.op + " needs --vertex");
    doc["vertex"] = o.vertex;
    if (o.op != "lc") {
      if (o.sigma.empty()) throw std::invalid_argument(o.op + " needs --sigma");
      doc["sigma"] = perm_field(o.sigma);
    }
    if (o.op == "sigma-k-lc") {
      if (o.k == 0) throw std::invalid_argument("sigma-k-lc needs --k");
      doc["k"] = o.k;
    }
  }
  return operation_from_json(doc);
}

int apply_op(const Options &o, std::istream &in, std::ostream &out) {
  const auto op = operation_from_flags(o);
  const auto g = parse_graph_json(read_input(o.input, in));
  out << graph_to_json_string(apply_operation(g, op)) << '\n';
  return 0;
}

int orbit_cmd(const Options &o, std::istream &in, std::ostream &out) {
  const auto g = parse_graph_json(read_input(o.input, in));
  const auto report = orbit(g, o.members);
  nlohmann::ordered_json doc;
  doc["canonical"] = graph_to_json(report.canonical);
  doc["size"] = report.size;
  if (report.members) {
    doc["members"] = nlohmann::ordered_json::array();
    for (const auto &m : *report.members) doc["members"].push_back(graph_to_json(m));
  }
  out << doc.dump() << '\n';
  return 0;
}

int verify(const Options &o, std::ostream &out) {
  const auto r = run_suite(o.suite, o.max_n, out);
  out << (r.ok() ? "OK" : "FAILED") << ' ' << r.passed << " passed, " << r.failed << " failed\n";
  return r.ok() ? 0 : 1;
}

class TableWriter {
public:
  TableWriter(std::vector<std::string> columns, bool csv, std::ostream &out)
      : columns_(std::move(columns)), csv_(csv), out_(out) {
    if (csv_) out_ << join(columns_) << '\n';
  }

  // Values are written as given; in JSON the last column is a string.
  void row(const std::vector<std::string> &values) {
    if (csv_) {
      out_ << join(values) << '\n';
      return;
    }
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i + 1 == columns_.size() || columns_[i] == "kind" || columns_[i] == "branch" || columns_[i] == "total") {
        obj[columns_[i]] = values[i];
      } else {
        obj[columns_[i]] = std::stol(values[i]);
      }
    }
    rows_.push_back(std::move(obj));
  }

  void finish() {
    if (!csv_) out_ << rows_.dump() << '\n';
  }

private:
  static std::string join(const std::vector<std::string> &parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
    return s;
  }

  std::vector<std::string> columns_;
  bool csv_;
  std::ostream &out_;
  nlohmann::ordered_json rows_ = nlohmann::ordered_json::array();
};

int table(const Options &o, std::ostream &out) {
  if (o.max < 0) throw std::invalid_argument("--max must be nonnegative");
  const bool csv = o.format == "csv";
  const auto s = [](auto v) { return std::to_string(v); };
  if (o.family == "three-simplices") {
    TableWriter w({"n1", "n2", "n3", "total", "branch"}, csv, out);
    for (long c = 1; c <= o.max; ++c) {
      for (long a = 1; a <= c; ++a) {
        for (long b = a; b <= c; ++b) {
          const auto r = count_three_simplices(a, b, c);
          w.row({s(a), s(b), s(c), r.total.str(), r.branch});
        }
      }
    }
    w.finish();
  } else if (o.family == "stirling" || o.family == "c2") {
    TableWriter w({"kind", "n", "m", "value"}, csv, out);
    for (long n = 0; n <= o.max; ++n) {
      for (long m = 0; m <= n; ++m) {
        const BigInt v = o.family == "stirling" ? stirling_c(n, m) : c_divisible(2, n, m);
        w.row({o.family == "stirling" ? "c" : "c2", s(n), s(m), v.str()});
      }
    }
    w.finish();
  } else {
    TableWriter w({"kind", "n", "m", "e", "value"}, csv, out);
    for (long n = 0; n <= o.max; ++n) {
      for (long m = 0; m <= n; ++m) {
        for (long e = 0; e <= m; ++e) w.row({"cnme", s(n), s(m), s(e), c_even_marked(n, m, e).str()});
      }
    }
    w.finish();
  }
  return 0;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
  CLI::App app{"Acyclic vector weighted digraphs over GF(2) and their equivalence classes", "vwdg"};
  app.require_subcommand(1);
  Options o;

  auto *count_cmd = app.add_subcommand("count", "Count acyclic graphs (dj) or equivalence classes (weak)");
  count_cmd->add_option("kind", o.count_kind)->required()->check(CLI::IsMember({"dj", "weak"}));
  count_cmd->add_option("--omega", o.omega, "Dimensions, e.g. 1,2,3")->required();
  count_cmd->add_flag("--brute", o.brute, "Force enumeration and compare with the formula");

  auto *enum_cmd = app.add_subcommand("enumerate", "List acyclic graphs as JSON lines");
  enum_cmd->add_option("--omega", o.omega)->required();
  enum_cmd->add_option("--limit", o.limit, "Stop after K graphs (0 = all)");

  auto *apply_cmd = app.add_subcommand("apply", "Apply one operation to a graph");
  apply_cmd->add_option("--op", o.op)->check(CLI::IsMember({"lc", "sigma-lc", "sigma-k-lc", "permute-weights", "reorder"}));
  apply_cmd->add_option("--op-json", o.op_json, "Operation as a JSON object");
  apply_cmd->add_option("--vertex", o.vertex, "1-indexed vertex");
  apply_cmd->add_option("--sigma", o.sigma, "One-line permutation, e.g. 2,3,1");
  apply_cmd->add_option("--k", o.k, "1-indexed coordinate");
  apply_cmd->add_option("--mu", o.mu, "Vertex permutation, one-line");
  apply_cmd->add_option("--input", o.input, "Graph JSON file, - for stdin")->required();

  auto *orbit_sub = app.add_subcommand("orbit", "Orbit of a graph under equivalence");
  orbit_sub->add_option("--input", o.input)->required();
  orbit_sub->add_flag("--members", o.members);

  auto *verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", o.suite)->required()->check(
      CLI::IsMember({"identities", "burnside", "oracle", "roundtrip", "all"}));
  verify_cmd->add_option("--max-n", o.max_n)->check(CLI::PositiveNumber);

  auto *table_cmd = app.add_subcommand("table", "Emit count tables");
  table_cmd->add_option("--family", o.family)->required()->check(CLI::IsMember({"three-simplices", "stirling", "c2", "cnme"}));
  table_cmd->add_option("--max", o.max);
  table_cmd->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (count_cmd->parsed()) return count(o, out, err);
    if (enum_cmd->parsed()) return enumerate(o, out);
    if (apply_cmd->parsed()) return apply_op(o, in, out);
    if (orbit_sub->parsed()) return orbit_cmd(o, in, out);
    if (verify_cmd->parsed()) return verify(o, out);
    return table(o, out);
  } catch (const GraphFormatError &e) {
    err << "invalid graph: " << e.what();
    if (e.position()) err << " (position " << e.position() << ")";
    err << '\n';
    return 2;
  } catch (const nlohmann::json::exception &e) {
    err << "invalid JSON: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument &e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded &e) {
    err << "refused: " << e.what() << " (estimated size " << e.estimate() << ")\n";
    return 1;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

} // namespace vwdg
