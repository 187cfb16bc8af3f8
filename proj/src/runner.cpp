#include "liehodge/runner.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace liehodge {

bool RunResult::passed() const {
  if (structure && !structure->passed()) return false;
  return std::all_of(reports.begin(), reports.end(), [](const HodgeReport& r) { return r.passed(); });
}

std::vector<std::pair<int, int>> bidegrees(const RunConfig& config) {
  if (config.p_max < 0) throw std::invalid_argument("p_max must be nonnegative");
  const int ts_max = twice(config.s_max);
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p <= config.p_max; ++p) {
    for (int ts = p; ts <= ts_max; ++ts) out.emplace_back(p, ts);
  }
  return out;
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& f) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

RunResult run_verify(const HomologyEngine& engine, const RunConfig& config) {
  for (const auto& w : config.which) {
    if (w != "all" && w != "garland" && w != "eigen" && w != "w" && w != "gl" && w != "GL" && w != "finito") {
      throw std::invalid_argument("unknown verification '" + w + "'");
    }
  }
  const int dim_p = static_cast<int>(engine.pair().dim_p());
  std::vector<std::pair<int, int>> todo;
  for (auto [p, ts] : bidegrees(config)) {
    if (p <= dim_p) todo.emplace_back(p, ts);
  }
  RunResult result;
  result.reports.resize(todo.size());
  const bool all = std::find(config.which.begin(), config.which.end(), "all") != config.which.end();
  parallel_for(todo.size() + (all ? 1 : 0), config.jobs, [&](std::size_t i) {
    if (i == todo.size()) {
      result.structure = engine.verify_structure(std::min(config.p_max, 3), std::min(twice(config.s_max), 6));
      return;
    }
    result.reports[i] = engine.report(todo[i].first, todo[i].second, config.which);
  });
  return result;
}

json to_json(const RunResult& result, const RunConfig& config) {
  json reports = json::array();
  for (const auto& r : result.reports) reports.push_back(to_json(r));
  json out{{"pair", config.pair},
           {"p_max", config.p_max},
           {"s_max", rational_json(config.s_max)},
           {"d_bound", rational_json(config.d_bound)},
           {"which", config.which},
           {"reports", reports},
           {"passed", result.passed()}};
  if (result.structure) {
    json failures = json::array();
    for (const auto& f : result.structure->failures()) failures.push_back({{"check", f.name}, {"detail", f.detail}});
    out["structure"] = {{"passed", result.structure->passed()},
                        {"checks", result.structure->checks.size()},
                        {"failures", failures}};
  }
  return out;
}

}  // namespace liehodge
