#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quivkit/quiver.hpp"
#include "quivkit/serialize.hpp"

namespace quivkit {

// Bounds for the invariant suites. Unset fields fall back to per-suite
// defaults (see suite_defaults in verify.cpp and the README).
struct VerifyOptions {
  std::vector<std::string> types;
  std::optional<std::string> orientation;  // only with exactly one type
  bool all_orientations = false;
  int max_rank = -1;
  int all_orientations_max_rank = -1;
  int max_height = -1;
  std::optional<Root> beta;
  int samples = 500;
  std::uint64_t seed = 0;
  int max_degree = 8;
  int max_m = 4;
  unsigned threads = 0;  // 0: one per hardware thread
};

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;  // sorted by name
  bool pass() const;
};

std::vector<std::string> suite_names();

// Throws std::invalid_argument on an unknown suite or inconsistent options.
SuiteReport run_suite(const std::string& suite, const VerifyOptions& options);

// Every beta in Q+ with 1 <= ht beta <= max_height, sorted.
std::vector<Root> betas_up_to(int rank, int max_height);

// The quivers a suite runs on.
std::vector<Quiver> suite_quivers(const VerifyOptions& options, int default_max_rank,
                                  int default_all_orientations_max_rank);

Json report_json(const SuiteReport& report);
std::string report_text(const SuiteReport& report);

// Runs f(0), ..., f(n-1) on a pool of std::jthread workers.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& f);

}  // namespace quivkit
