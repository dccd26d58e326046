#pragma once

#include "groth/identities.hpp"

#include <functional>
#include <string>
#include <vector>

namespace groth {

struct VerifyOptions {
  int max_weight = 4;  ///< partitions (or permutation sizes) up to this weight
  int degree = 6;      ///< truncation degree for infinite series
  Params params{};
  unsigned threads = 0;  ///< 0 = hardware concurrency
};

struct IdentityEntry {
  std::string name;
  std::string description;
  std::function<std::vector<IdentityReport>(const VerifyOptions&)> run;
};

/// pieri-g-type1, omega-duality, hall-duality, jt-g, schur-positive,
/// canonical-basis, stable-limit, relations, cauchy.
const std::vector<IdentityEntry>& identity_registry();
const IdentityEntry* find_identity(const std::string& name);

/// Runs independent instances on a small thread pool, keeping input order.
std::vector<IdentityReport> run_parallel(const std::vector<std::function<IdentityReport()>>& jobs, unsigned threads);

bool all_pass(const std::vector<IdentityReport>& reports);

}  // namespace groth
