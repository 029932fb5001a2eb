#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "numeric.hpp"
#include "weight_character.hpp"

namespace weyl::engine {

struct Options {
  uint64_t p1 = 0;  // 0 means default
  uint64_t p2 = 0;
  bool exact = false;
  int max_total_degree = 40;
  std::optional<int> truncation;
};

struct Report {
  nlohmann::json payload;
  bool passed = true;
};

// Parameters a verification suite may consume; -1 means "use the suite's
// default bound".
struct VerifyParams {
  int n = -1;
  int d = -1;
  int r = -1;
  int m = -1;
};

Report character_origin(int n, int d, int r, const Options& opts);
Report character_points(const std::vector<Rat>& points, int r, const Options& opts);

// Suites: catalan, narayana, higher-catalan, three-way, tensor, martini,
// chevalley, conjecture. The conjecture suite reports match/mismatch and
// never fails the report.
Report verify(const std::string& suite, const VerifyParams& params, const Options& opts);

// Table kinds: catalan, narayana, higher-catalan, hoggatt.
Report table(const std::string& kind, const VerifyParams& params, const Options& opts);

nlohmann::json character_json(const WeightCharacter& wc);

}  // namespace weyl::engine
