#include "mmbp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <new>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "mmbp/branch_bound.hpp"
#include "mmbp/enumeration.hpp"

namespace mmbp {

namespace {

SolveResult dispatch(const std::string& method, const Instance& instance,
                     std::optional<double> time_limit_s) {
  if (method == "enum") return solve_enumeration(instance, time_limit_s);
  if (method == "bnb") return solve_bnb(instance, time_limit_s);
  throw std::invalid_argument("unknown method '" + method + "'");
}

std::string format_seconds(double s) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", s);
  return buf;
}

}  // namespace

std::vector<BenchRow> run_protocol(
    const std::vector<std::pair<std::string, Instance>>& instances,
    const ProtocolOptions& options) {
  if (options.methods.empty())
    throw std::invalid_argument("bench: no methods selected");
  if (options.k_values.empty())
    throw std::invalid_argument("bench: no k values selected");
  if (options.jobs < 1) throw std::invalid_argument("bench: jobs must be >= 1");
  for (const std::string& method : options.methods)
    if (method != "enum" && method != "bnb")
      throw std::invalid_argument("unknown method '" + method + "'");
  for (const auto& [name, instance] : instances)
    for (const std::int32_t k : options.k_values)
      if (k < 1 || k > instance.dim())
        throw std::invalid_argument("bench: k=" + std::to_string(k) +
                                    " exceeds dimension of instance '" + name +
                                    "'");

  struct Combo {
    std::size_t instance_index;
    std::int32_t k;
    std::string method;
  };
  std::vector<Combo> combos;
  for (std::size_t i = 0; i < instances.size(); ++i)
    for (const std::int32_t k : options.k_values)
      for (const std::string& method : options.methods)
        combos.push_back({i, k, method});

  std::vector<BenchRow> rows(combos.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= combos.size()) return;
      const Combo& combo = combos[idx];
      const auto& [name, instance] = instances[combo.instance_index];
      BenchRow& row = rows[idx];
      row.instance = name;
      row.k = combo.k;
      row.method = combo.method;
      try {
        const Instance prefixed = prefix_instance(instance, combo.k);
        const SolveResult result =
            dispatch(combo.method, prefixed, options.time_limit_s);
        row.value = result.best_value;
        row.status = to_string(result.status);
        row.time_to_best = result.time_to_best;
        row.time_total = result.time_total;
        row.members = result.best_bisection.members();
      } catch (const std::bad_alloc&) {
        row.value = Weight{};
        row.status = "Aborted";
        row.time_to_best = 0.0;
        row.time_total = 0.0;
        row.members.clear();
      }
    }
  };

  const int jobs = std::min<int>(options.jobs,
                                 static_cast<int>(combos.size()) > 0
                                     ? static_cast<int>(combos.size())
                                     : 1);
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::sort(rows.begin(), rows.end(),
            [](const BenchRow& a, const BenchRow& b) {
              return std::tie(a.instance, a.k, a.method) <
                     std::tie(b.instance, b.k, b.method);
            });
  return rows;
}

std::string write_csv(const std::vector<BenchRow>& rows) {
  std::set<std::tuple<std::string, std::int32_t, std::string>> keys;
  std::string out = "instance,k,method,value,status,t,t_tot\n";
  for (const BenchRow& row : rows) {
    if (!keys.emplace(row.instance, row.k, row.method).second)
      throw std::invalid_argument("duplicate bench row key " + row.instance +
                                  "/" + std::to_string(row.k) + "/" +
                                  row.method);
    out += row.instance;
    out += ',';
    out += std::to_string(row.k);
    out += ',';
    out += row.method;
    out += ',';
    out += row.value.str();
    out += ',';
    out += row.status;
    out += ',';
    out += format_seconds(row.time_to_best);
    out += ',';
    out += format_seconds(row.time_total);
    out += '\n';
  }
  return out;
}

std::string write_json(const std::vector<BenchRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const BenchRow& row : rows) {
    arr.push_back({
        {"instance", row.instance},
        {"k", row.k},
        {"method", row.method},
        {"value", row.value.str()},
        {"value_milli", row.value.milli},
        {"status", row.status},
        {"t", row.time_to_best},
        {"t_tot", row.time_total},
        {"bisection", row.members},
    });
  }
  return arr.dump(2) + "\n";
}

}  // namespace mmbp
