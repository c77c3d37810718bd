#pragma once

// Verification records: one per check, gathered into a suite result that
// serializes to JSON (and CSV for rank tables).

#include <atomic>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "grid_json.hpp"

namespace eigenmonad {

struct Check {
  std::string id;
  std::string anchor;  // descriptive pointer to the statement being checked
  int criterion = 0;   // acceptance criterion this check feeds, 0 if none
  bool pass = false;
  json computed;
  json expected;
  std::optional<bool> cap_stable;  // empty when the value does not depend on a window cap
  std::string note;

  json to_json() const {
    json j;
    j["id"] = id;
    j["paper_anchor"] = anchor;
    j["status"] = pass ? "pass" : "fail";
    j["computed"] = computed;
    j["expected"] = expected;
    j["cap_stable"] = cap_stable ? json(*cap_stable) : json(nullptr);
    if (!note.empty()) j["note"] = note;
    return j;
  }
};

// Passes iff computed == expected (and, when present, the value is cap-stable).
inline Check expect_eq(std::string id, std::string anchor, int criterion, json computed, json expected,
                       std::optional<bool> cap_stable = std::nullopt) {
  Check c{std::move(id), std::move(anchor), criterion};
  c.pass = computed == expected && cap_stable.value_or(true);
  c.computed = std::move(computed);
  c.expected = std::move(expected);
  c.cap_stable = cap_stable;
  return c;
}

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  std::string csv;                                  // rank table, if the suite produces one
  json extra;                                       // suite-specific payload (genealogy edges)
  std::vector<std::pair<std::string, json>> grids;  // file stem -> grid JSON

  bool ok() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  int failures() const {
    int n = 0;
    for (auto& c : checks) n += !c.pass;
    return n;
  }

  json to_json(const json& config) const {
    json j;
    j["suite"] = suite;
    j["config"] = config;
    j["status"] = ok() ? "pass" : "fail";
    json a = json::array();
    for (auto& c : checks) a.push_back(c.to_json());
    j["checks"] = a;
    if (!extra.is_null()) j["extra"] = extra;
    return j;
  }
};

// A unit of suite work.  Tasks are independent; a thrown exception becomes a
// failing check carrying the message.
struct Task {
  std::string id;
  std::string anchor;
  int criterion = 0;
  std::function<std::vector<Check>()> run;
};

// Runs tasks on up to `jobs` threads; results are concatenated in task order.
inline std::vector<Check> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<std::vector<Check>> out(tasks.size());
  auto one = [&](std::size_t i) {
    try {
      out[i] = tasks[i].run();
    } catch (const std::exception& e) {
      Check c{tasks[i].id, tasks[i].anchor, tasks[i].criterion};
      c.computed = std::string("error: ") + e.what();
      c.expected = "no error";
      out[i] = {c};
    }
  };
  if (jobs <= 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < tasks.size();) one(i);
      });
    for (auto& th : pool) th.join();
  }
  std::vector<Check> all;
  for (auto& v : out) all.insert(all.end(), v.begin(), v.end());
  return all;
}

}  // namespace eigenmonad
