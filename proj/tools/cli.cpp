#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hopfc/catalog.hpp"
#include "hopfc/contract.hpp"
#include "hopfc/errors.hpp"
#include "hopfc/report.hpp"
#include "hopfc/rmat.hpp"

namespace hopfc::cli {

namespace {

using report::json;
using report::RunReport;

struct RunConfig {
  std::string command;
  std::vector<std::string> names;
  int order = catalog::kDefaultOrder;
  std::string format = "text";
  std::string out_path;
  bool timing = false;
  bool exact_r = false;
  bool then_basis_change = false;
  std::vector<std::string> force_exponent;
  std::vector<std::string> limits;
  bool qybe = false;
  bool exp_check = false;
  bool triangular = false;
  long step_budget = 0;

  json to_json() const {
    json j{{"command", command}, {"names", names}, {"order", order}, {"format", format},
           {"step_budget", step_budget}};
    if (command == "contract") {
      j["then_basis_change"] = then_basis_change;
      j["force_exponent"] = force_exponent;
    }
    if (command == "rmatrix") {
      j["exact_r"] = exact_r;
      j["limits"] = limits;
      j["checks"] = {{"qybe", qybe}, {"exp_check", exp_check}, {"triangular", triangular}};
    }
    return j;
  }
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::pair<std::string, std::string> split_assignment(const std::string& s) {
  const auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == s.size()) {
    throw UsageError("expected name=value, got '" + s + "'");
  }
  return {s.substr(0, eq), s.substr(eq + 1)};
}

template <class F>
CheckResult timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r = f();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

CheckResult matrix_zero(std::string name, const Matrix& m) {
  CheckResult r;
  r.name = std::move(name);
  for (const auto& e : m.nonzero_entries()) r.fail("entry", e);
  return r;
}

// ---------------------------------------------------------------------------

void cmd_verify(const RunConfig& cfg, RunReport& rep) {
  // Unknown names are rejected before any work starts.
  for (const auto& n : cfg.names) catalog::classical_counterpart(n);
  std::vector<std::future<VerificationReport>> jobs;
  for (const auto& n : cfg.names) {
    jobs.push_back(std::async(std::launch::async, [n, order = cfg.order] {
      return verify_all(catalog::presentation(n, order));
    }));
  }
  for (auto& j : jobs) {
    VerificationReport v = j.get();
    for (auto& c : v.checks) {
      c.name = v.algebra + "/" + c.name;
      rep.add(c);
    }
  }
}

json exponent_json(const ExponentSolution& sol) {
  json out = json::array();
  for (const auto& e : sol.entries) {
    out.push_back({{"params", e.params},
                   {"r_min", e.r_min ? json(*e.r_min) : json(nullptr)},
                   {"delta_min", e.delta_min ? json(*e.delta_min) : json(nullptr)}});
  }
  return out;
}

void cmd_contract(const RunConfig& cfg, RunReport& rep) {
  if (cfg.names.size() != 1) throw UsageError("contract takes exactly one case name");
  ContractionCase c = catalog::find_case(cfg.names.front());
  for (const auto& f : cfg.force_exponent) {
    auto [param, value] = split_assignment(f);
    bool found = false;
    for (auto& p : c.params) {
      if (p.old_param == param) {
        try {
          p.exponent = std::stoi(value);
        } catch (const std::exception&) {
          throw UsageError("exponent for " + param + " is not an integer: " + value);
        }
        found = true;
      }
    }
    if (!found) throw UsageError("case " + c.name + " has no parameter '" + param + "'");
  }
  if (cfg.then_basis_change && c.after_basis_change.empty()) {
    throw UsageError("case " + c.name + " has no change of basis");
  }

  const LieStructure lie = gl2_lie();
  const WedgeTensor r = catalog::classical_r(c.source);
  const SolveMode mode = c.correlated ? SolveMode::correlated : SolveMode::independent;
  ExponentSolution sol;
  const CheckResult exponents = timed([&] {
    CheckResult res;
    res.name = "exponents";
    sol = solve_min_exponents(lie, r, c.params, mode);
    for (const auto& p : c.params) {
      const auto m = sol.r_min(p.old_param);
      if (m && *m != p.exponent) {
        res.fail(p.old_param,
                 "map uses " + std::to_string(p.exponent) + ", minimum is " + std::to_string(*m));
      }
    }
    return res;
  });
  const ExponentSolution independent =
      c.correlated ? solve_min_exponents(lie, r, c.params, SolveMode::independent) : sol;
  rep.add(exponents, json{{"mode", c.correlated ? "correlated" : "independent"},
                          {"minima", exponent_json(sol)},
                          {"independent", exponent_json(independent)}});
  {
    CheckResult res;
    res.name = "coboundary";
    if (!sol.coboundary()) res.fail("minima", "r-minima differ from delta-minima");
    rep.add(res);
  }
  WedgeTensor rc(r.space());
  rep.add(timed([&] {
            CheckResult res;
            res.name = "contracted_r";
            rc = contracted_r(lie, r, c.params);
            res.details = rc.str(h4_lie().generators());
            return res;
          }));

  HopfPresentation got;
  rep.add(timed([&] {
    got = contract_hopf(c, cfg.order);
    return match_presentation(got, catalog::presentation(c.target, cfg.order));
  }));
  if (cfg.then_basis_change) {
    rep.add(timed([&] {
      const auto b = catalog::primed_basis(catalog::presentation(c.target, cfg.order));
      const HopfPresentation changed = change_of_basis(got, b.forward, b.inverse);
      return match_presentation(changed, catalog::presentation(c.after_basis_change, cfg.order));
    }));
  }
}

void cmd_rmatrix(const RunConfig& cfg, RunReport& rep) {
  if (cfg.names.size() != 1) throw UsageError("rmatrix takes exactly one matrix name");
  const std::string& name = cfg.names.front();
  bool qybe = cfg.qybe;
  if (!cfg.qybe && !cfg.exp_check && !cfg.triangular) qybe = true;
  if (cfg.exact_r && (!cfg.limits.empty() || cfg.exp_check)) {
    throw UsageError("--exact-r supports --qybe and --triangular only");
  }
  RMat R = cfg.exact_r ? printed_rmatrix_exact(name) : printed_rmatrix(name, cfg.order);
  std::vector<std::string> limited;
  for (const auto& l : cfg.limits) {
    auto [param, value] = split_assignment(l);
    if (value != "0") throw UsageError("only limits to 0 are supported: " + l);
    if (!R.space()->has(param)) {
      throw UsageError("matrix " + name + " has no parameter '" + param + "'");
    }
    R = rmat_limit(R, param);
    limited.push_back(param);
  }
  if (qybe) rep.add(timed([&] { return matrix_zero("qybe", qybe_residual(R)); }));
  if (cfg.triangular) {
    rep.add(timed([&] { return matrix_zero("triangularity", triangularity_residual(R)); }));
  }
  if (cfg.exp_check) {
    rep.add(timed([&] {
      RMat E = exp_wedge_rep(catalog::classical_r(name, cfg.order), gl2_fundamental());
      for (const auto& p : limited) E = rmat_limit(E, p);
      const SpacePtr sp = R.space();
      const RMat Eb = E.map_entries(sp, [&](const Series& s) { return rebase(s, sp); });
      return matrix_zero("exp_check", Eb - R);
    }));
  }
}

std::string dump_text(const HopfPresentation& h) {
  const auto& g = h.generators();
  std::string out = h.name + "\n";
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      out += "  [" + g.name(i) + ", " + g.name(j) + "] = " + h.algebra->rewrite(i, j).str(g) + "\n";
    }
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    out += "  Delta(" + g.name(i) + ") = " + h.coproduct[i].str(g) + "\n";
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    out += "  eps(" + g.name(i) + ") = " + (h.counit[i].is_zero() ? "0" : h.counit[i].str()) + "\n";
  }
  if (h.casimir) out += "  C = " + h.casimir->str(g) + "\n";
  return out;
}

std::string list_text(bool as_json) {
  json j{{"presentations", catalog::presentation_names()},
         {"cases", json::array()},
         {"rmatrices", rmatrix_names()},
         {"catalog_version", catalog::kVersion}};
  for (const auto& c : catalog::list_cases()) j["cases"].push_back(c.name);
  if (as_json) return j.dump(2) + "\n";
  std::string out = "presentations:\n";
  for (const auto& n : catalog::presentation_names()) out += "  " + n + "\n";
  out += "contraction cases:\n";
  for (const auto& c : catalog::list_cases()) {
    out += "  " + c.name + "  (" + c.source + " -> " + c.target + ")\n";
  }
  out += "R-matrices:\n";
  for (const auto& n : rmatrix_names()) out += "  " + n + "\n";
  return out;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path);
  if (!f) throw UsageError("cannot write " + cfg.out_path);
  f << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  bool list = false;
  CLI::App app{"Truncated-series checks for quantum gl(2) and h4 Hopf algebras", "hopfc"};
  app.add_flag("--list", list, "List presentations, contraction cases and R-matrices");
  auto common = [&](CLI::App* sub) {
    sub->add_option("--order", cfg.order, "Truncation order N")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out_path, "Write the report to a file");
    sub->add_flag("--timing", cfg.timing, "Include timings in the report");
  };
  auto* verify = app.add_subcommand("verify", "Run every Hopf axiom check on catalog algebras");
  verify->add_option("names", cfg.names, "Catalog presentation names")->required();
  common(verify);
  auto* contract = app.add_subcommand("contract", "Contract a gl(2) algebra to h4");
  contract->add_option("case", cfg.names, "Contraction case")->required()->expected(1);
  contract->add_flag("--then-basis-change", cfg.then_basis_change,
                     "Apply the primed change of basis and match again");
  contract->add_option("--force-exponent", cfg.force_exponent, "Override an exponent, param=n");
  common(contract);
  auto* rmatrix = app.add_subcommand("rmatrix", "Check a printed 4x4 R-matrix");
  rmatrix->add_option("name", cfg.names, "Matrix name")->required()->expected(1);
  rmatrix->add_flag("--qybe", cfg.qybe, "Quantum Yang-Baxter equation");
  rmatrix->add_flag("--exp-check", cfg.exp_check, "Compare with exp of the classical r");
  rmatrix->add_flag("--triangular", cfg.triangular, "Check R21 R = 1");
  rmatrix->add_option("--limit", cfg.limits, "Send a parameter to zero, param=0");
  rmatrix->add_flag("--exact-r", cfg.exact_r, "Use independent symbols Q, h or B, p");
  common(rmatrix);
  auto* dump = app.add_subcommand("dump", "Print a catalog presentation");
  dump->add_option("name", cfg.names, "Presentation name")->required()->expected(1);
  common(dump);
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  if (const char* env = std::getenv("HOPFC_STEP_BUDGET")) {
    try {
      const long v = std::stol(env);
      if (v <= 0) throw std::invalid_argument("non-positive");
      set_default_step_budget(v);
    } catch (const std::exception&) {
      err << "hopfc: HOPFC_STEP_BUDGET must be a positive integer\n";
      return kUsage;
    }
  }
  cfg.step_budget = default_step_budget();

  RunReport rep;
  rep.catalog_version = std::string(catalog::kVersion);
  try {
    if (list) {
      if (!app.get_subcommands().empty()) throw UsageError("--list takes no subcommand");
      emit(cfg, list_text(false), out);
      return kPass;
    }
    if (app.get_subcommands().empty()) {
      err << app.help();
      return kUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "dump") {
      const HopfPresentation h = catalog::presentation(cfg.names.front(), cfg.order);
      emit(cfg, cfg.format == "json" ? report::presentation_json(h, cfg.order).dump(2) + "\n"
                                     : dump_text(h),
           out);
      return kPass;
    }
    rep.config = cfg.to_json();
    int code = kPass;
    try {
      if (cfg.command == "verify") cmd_verify(cfg, rep);
      if (cfg.command == "contract") cmd_contract(cfg, rep);
      if (cfg.command == "rmatrix") cmd_rmatrix(cfg, rep);
      code = rep.passed() ? kPass : kCheckFailure;
    } catch (const DivergenceError& e) {
      CheckResult res;
      res.name = "divergence";
      for (const auto& t : e.offending()) res.fail("term", t);
      if (e.offending().empty()) res.fail("error", e.what());
      rep.add(res, json{{"message", e.what()}});
      code = kDivergence;
    }
    emit(cfg, cfg.format == "json" ? report::to_json(rep, cfg.timing) : report::to_text(rep, cfg.timing),
         out);
    return code;
  } catch (const UsageError& e) {
    err << "hopfc: " << e.what() << "\n";
    return kUsage;
  } catch (const LookupError& e) {
    err << "hopfc: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "hopfc: " << e.what() << "\n";
    return kCheckFailure;
  }
}

}  // namespace hopfc::cli
