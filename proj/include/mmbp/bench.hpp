#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mmbp/instance.hpp"

namespace mmbp {

// One solve outcome in the vary-dimension protocol: prefix the instance to
// the first k coordinates, run the method under the time limit.
struct BenchRow {
  std::string instance;
  std::int32_t k = 0;
  std::string method;
  Weight value;
  std::string status;       // Optimal | TimeLimit | Aborted
  double time_to_best = 0.0;
  double time_total = 0.0;
  std::vector<std::int32_t> members;  // reported bisection, for recomputation
};

struct ProtocolOptions {
  std::vector<std::string> methods;      // "enum" and/or "bnb"
  std::vector<std::int32_t> k_values;    // each must be <= every instance dim
  std::optional<double> time_limit_s;
  int jobs = 1;  // parallelism across combinations, never within a solve
};

// Runs every (instance, k, method) combination and returns rows sorted by
// that key. Identical non-timing output regardless of jobs. Throws
// std::invalid_argument on unknown methods, empty selections, or a k value
// exceeding an instance's dimension.
std::vector<BenchRow> run_protocol(
    const std::vector<std::pair<std::string, Instance>>& instances,
    const ProtocolOptions& options);

// "instance,k,method,value,status,t,t_tot"; values and times with three
// fraction digits. Throws std::invalid_argument on duplicate
// (instance,k,method) keys.
std::string write_csv(const std::vector<BenchRow>& rows);

// Same rows as JSON, including the bisections.
std::string write_json(const std::vector<BenchRow>& rows);

}  // namespace mmbp
