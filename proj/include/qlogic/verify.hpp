#pragma once

#include "qlogic/state_set.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qlogic::verify {

struct SuiteConfig {
  std::uint64_t seed = 0;
  /// 0 selects the suite's default instance count.
  std::size_t trials = 0;
};

struct SuiteReport {
  SuiteReport() = default;
  explicit SuiteReport(std::string suite) : name(std::move(suite)) {}

  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;

  void fail(std::string what) {
    passed = false;
    if (counterexamples.size() < 20) counterexamples.push_back(std::move(what));
  }
};

/// Names accepted by run_suite, in a stable order.
const std::vector<std::string>& suite_names();

/// Runs one named invariant suite; throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

/// Random lattice element over dimension d: polytopes built from a small
/// shared pool of states (so that meets are frequently nonempty), random
/// faces, Top and Bottom.
StateSet random_state_set(Rng& rng, Eigen::Index d);

}  // namespace qlogic::verify
