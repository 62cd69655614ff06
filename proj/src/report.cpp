#include "hopfc/report.hpp"

#include <iomanip>
#include <sstream>

namespace hopfc::report {

namespace {

std::string rational_text(const Rational& r) { return r.numerator() + "/" + r.denominator(); }

std::string join_exponents(const std::vector<int>& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out;
}

std::string monomial_key(const Monomial& m, std::size_t gens) {
  std::vector<int> e;
  for (std::size_t i = 0; i < gens; ++i) e.push_back(m.e[i]);
  return join_exponents(e);
}

}  // namespace

json series_json(const Series& s) {
  json out = json::object();
  const std::size_t n = s.space()->size();
  for (const auto& [e, c] : s.terms()) {
    std::vector<int> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(e[i]);
    out[join_exponents(v)] = rational_text(c);
  }
  return out;
}

json space_json(const ParamSpace& sp) {
  json syms = json::array();
  for (const auto& s : sp.symbols()) {
    json j{{"name", s.name}, {"weight", s.weight}, {"floor", s.floor}, {"cap", s.cap}};
    if (s.is_ratio()) j["ratio"] = {s.ratio_num, s.ratio_den};
    syms.push_back(j);
  }
  return {{"order", sp.order()}, {"symbols", syms}};
}

json element_json(const Element& x, std::size_t gens) {
  json out = json::object();
  for (const auto& [m, c] : x.terms()) out[monomial_key(m, gens)] = series_json(c);
  return out;
}

json tensor_json(const TensorElement& t, std::size_t gens) {
  json out = json::object();
  for (const auto& [k, c] : t.terms()) {
    std::string key;
    for (int s = 0; s < t.rank(); ++s) key += (s ? "|" : "") + monomial_key(k[s], gens);
    out[key] = series_json(c);
  }
  return out;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(series_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json presentation_json(const HopfPresentation& h, int order) {
  const auto& g = h.generators();
  json gens = json::array();
  for (std::size_t i = 0; i < g.size(); ++i) gens.push_back({{"name", g.name(i)}, {"central", g.central(i)}});
  json rel = json::array();
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      rel.push_back({{"left", g.name(i)}, {"right", g.name(j)}, {"commutator", element_json(h.algebra->rewrite(i, j), g.size())}});
    }
  }
  json delta = json::object(), counit = json::object();
  for (std::size_t i = 0; i < h.size(); ++i) {
    delta[g.name(i)] = tensor_json(h.coproduct[i], g.size());
    counit[g.name(i)] = series_json(h.counit[i]);
  }
  json out{{"name", h.name},        {"order", order},   {"space", space_json(*h.space())},
           {"generators", gens},    {"relations", rel}, {"coproduct", delta},
           {"counit", counit}};
  out["casimir"] = h.casimir ? element_json(*h.casimir, g.size()) : json(nullptr);
  return out;
}

void RunReport::add(CheckResult r, json details) { checks.push_back({std::move(r), std::move(details)}); }

bool RunReport::passed() const {
  for (const auto& c : checks) {
    if (!c.result.passed) return false;
  }
  return true;
}

double RunReport::seconds() const {
  double s = 0;
  for (const auto& c : checks) s += c.result.seconds;
  return s;
}

std::string to_json(const RunReport& r, bool timing) {
  json checks = json::array();
  json per_check = json::object();
  for (const auto& e : r.checks) {
    json c{{"name", e.result.name}, {"verdict", e.result.passed ? "pass" : "fail"}};
    if (!e.result.residuals.empty()) {
      json res = json::array();
      for (const auto& x : e.result.residuals) res.push_back({{"label", x.label}, {"value", x.value}});
      c["residual"] = res;
    }
    c["details"] = e.details.is_null() ? json(e.result.details) : e.details;
    checks.push_back(c);
    per_check[e.result.name] = e.result.seconds;
  }
  json out{{"config", r.config}, {"catalog_version", r.catalog_version}, {"checks", checks}};
  out["timing"] = timing ? json{{"total_seconds", r.seconds()}, {"checks", per_check}} : json(nullptr);
  return out.dump(2) + "\n";
}

std::string to_text(const RunReport& r, bool timing) {
  std::ostringstream os;
  for (const auto& e : r.checks) {
    os << (e.result.passed ? "PASS " : "FAIL ") << e.result.name;
    if (timing) os << std::fixed << std::setprecision(3) << "  (" << e.result.seconds << " s)";
    os << "\n";
    if (!e.details.is_null()) {
      os << "  " << e.details.dump() << "\n";
    } else if (!e.result.details.empty()) {
      os << "  " << e.result.details << "\n";
    }
    for (const auto& x : e.result.residuals) os << "  " << x.label << ": " << x.value << "\n";
  }
  std::size_t failed = 0;
  for (const auto& e : r.checks) failed += e.result.passed ? 0 : 1;
  os << (failed ? "FAILED " : "OK ") << r.checks.size() - failed << "/" << r.checks.size()
     << " checks passed\n";
  return os.str();
}

}  // namespace hopfc::report
