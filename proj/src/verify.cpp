#include "vwdg/verify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "vwdg/burnside.hpp"
#include "vwdg/closed_forms.hpp"
#include "vwdg/cycles.hpp"
#include "vwdg/equivalence.hpp"
#include "vwdg/graph_json.hpp"

namespace vwdg {

namespace {

class Checker {
public:
  Checker(std::string suite, std::ostream &log) : suite_(std::move(suite)), log_(log) {}

  void check(bool ok, const std::string &detail) {
    log_ << (ok ? "PASS " : "FAIL ") << suite_ << ": " << detail << '\n';
    ++(ok ? result_.passed : result_.failed);
  }

  // Runs body; exceptions count as failures.
  void guarded(const std::string &detail, const std::function<bool()> &body) {
    try {
      check(body(), detail);
    } catch (const std::exception &e) {
      check(false, detail + " (" + e.what() + ")");
    }
  }

  SuiteResult result() const { return result_; }

private:
  std::string suite_;
  std::ostream &log_;
  SuiteResult result_;
};

SuiteResult identities(long max_n, std::ostream &log) {
  Checker c("identities", log);
  for (auto id : all_identities) {
    try {
      const auto report = verify_identity(id, max_n);
      std::string detail = report.name + " (" + std::to_string(report.cases_checked) + " cases)";
      if (!report.ok()) detail += ", first violation " + report.violations.front();
      c.check(report.ok(), detail);
    } catch (const std::exception &e) {
      c.check(false, identity_name(id) + " (" + e.what() + ")");
    }
  }
  c.guarded("stirling recurrences agree, n <= " + std::to_string(max_n), [&] {
    for (long n = 0; n <= max_n; ++n) {
      for (long m = 0; m <= n; ++m) {
        if (stirling_c(n, m) != stirling_c_by_cycle_removal(n, m)) return false;
      }
    }
    return true;
  });
  c.guarded("c_d recurrences agree, d <= 4, dn <= " + std::to_string(max_n), [&] {
    for (long d = 1; d <= 4; ++d) {
      for (long n = 0; n <= max_n; ++n) {
        for (long m = 0; m <= n; ++m) c_divisible(d, n, m);
      }
    }
    return true;
  });
  c.guarded("c(n,m,e) recurrences agree and sum to c(n,m), n <= " + std::to_string(max_n), [&] {
    for (long n = 0; n <= max_n; ++n) {
      for (long m = 0; m <= n; ++m) {
        BigInt sum = 0;
        for (long e = 0; e <= m; ++e) sum += c_even_marked(n, m, e);
        if (sum != stirling_c(n, m)) return false;
      }
    }
    return true;
  });
  return c.result();
}

SuiteResult burnside(long max_n, std::ostream &log) {
  Checker c("burnside", log);
  for (long n = 1; n <= std::min(max_n, 6L); ++n) {
    c.guarded("out-star n=" + std::to_string(n), [&] {
      const auto oracle = burnside_type8_oracle(n);
      return oracle == count_type8(n) && oracle == f_closed(n);
    });
  }
  for (long n = 1; n <= std::min(max_n, 5L); ++n) {
    for (long m = 1; m <= std::min(max_n, 5L); ++m) {
      c.guarded("h(" + std::to_string(n) + "," + std::to_string(m) + ")",
                [&] { return burnside_h_oracle(n, m) == h_closed(n, m); });
    }
  }
  return c.result();
}

SuiteResult oracle(long max_n, std::ostream &log) {
  Checker c("oracle", log);
  const std::vector<DimensionFunction> shapes{{1, 2}, {2, 2}, {1, 2, 3}};
  for (const auto &omega : shapes) {
    const auto dims = omega.dims();
    if (static_cast<long>(*std::max_element(dims.begin(), dims.end())) > max_n) continue;
    c.guarded("matrix action = generator decomposition, omega=" + omega.to_string(), [&] {
      bool ok = true;
      for_each_acyclic(omega, [&](const VWDigraph &g) {
        for (std::size_t v = 0; v < omega.vertex_count() && ok; ++v) {
          for (const auto &sigma : all_permutations(omega[v] + 1)) {
            if (matrix_action_oracle(g, v, sigma) != facet_action(g, v, sigma)) {
              ok = false;
              break;
            }
          }
        }
        return ok;
      });
      return ok;
    });
  }
  return c.result();
}

SuiteResult roundtrip(long max_n, std::ostream &log) {
  Checker c("roundtrip", log);
  const std::size_t top = static_cast<std::size_t>(std::clamp(max_n, 1L, 2L));
  std::vector<DimensionFunction> shapes;
  for (std::size_t a = 1; a <= top; ++a) {
    shapes.push_back({a});
    for (std::size_t b = 1; b <= top; ++b) {
      shapes.push_back({a, b});
      for (std::size_t d = 1; d <= top; ++d) shapes.push_back({a, b, d});
    }
  }
  for (const auto &omega : shapes) {
    c.guarded("reduced matrix, JSON and count, omega=" + omega.to_string(), [&] {
      std::size_t count = 0;
      bool ok = true;
      for_each_acyclic(omega, [&](const VWDigraph &g) {
        ++count;
        ok = from_vector_matrix(to_reduced_matrix(g)) == g && parse_graph_json(graph_to_json_string(g)) == g;
        return ok;
      });
      return ok && count_M_omega(omega) == count;
    });
  }
  return c.result();
}

} // namespace

SuiteResult run_suite(std::string_view name, long max_n, std::ostream &log) {
  if (max_n < 1) throw std::invalid_argument("max-n must be positive");
  if (name == "identities") return identities(max_n, log);
  if (name == "burnside") return burnside(max_n, log);
  if (name == "oracle") return oracle(max_n, log);
  if (name == "roundtrip") return roundtrip(max_n, log);
  if (name == "all") {
    SuiteResult total;
    for (const auto &suite : suite_names()) {
      const auto r = run_suite(suite, max_n, log);
      total.passed += r.passed;
      total.failed += r.failed;
    }
    return total;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

} // namespace vwdg
