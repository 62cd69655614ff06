#pragma once

// JSON and text renderings of series, presentations and check reports.
//
// A series serializes as {"e1,...,ek": "num/den"} with one exponent per
// symbol of its space; an element as {"m1,...,mg": series} with one exponent
// per generator; a rank-2 tensor keys on "left|right".

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "hopfc/hopf.hpp"
#include "hopfc/rmat.hpp"

namespace hopfc::report {

using nlohmann::json;

json series_json(const Series& s);
json space_json(const ParamSpace& sp);
json element_json(const Element& x, std::size_t gens);
json tensor_json(const TensorElement& t, std::size_t gens);
json matrix_json(const Matrix& m);
json presentation_json(const HopfPresentation& h, int order);

struct Entry {
  CheckResult result;
  json details;  // structured details; falls back to result.details when null
};

struct RunReport {
  json config;
  std::string catalog_version;
  std::vector<Entry> checks;

  void add(CheckResult r, json details = nullptr);
  bool passed() const;
  double seconds() const;
};

/// Stable JSON: the timing field is null unless `timing` is set.
std::string to_json(const RunReport& r, bool timing);
std::string to_text(const RunReport& r, bool timing);

}  // namespace hopfc::report
