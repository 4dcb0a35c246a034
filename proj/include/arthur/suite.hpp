#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arthur/random.hpp"

namespace arthur {

struct Violation {
  std::string suite;
  std::string identity;
  std::string reproducer;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

struct Failure {
  std::string reproducer;
  std::string detail;
};

struct Suite {
  std::string name;
  std::string identity;
  // nullopt when instance `index` satisfies the identity
  std::function<std::optional<Failure>(const SuiteConfig&, std::uint64_t index)> check;
};

struct SuiteResult {
  std::string name;
  std::string identity;
  int instances = 0;
  std::vector<Violation> violations;

  bool operator==(const SuiteResult&) const = default;
};

enum class Execution { serial, parallel };

// The identities run by `verify --suite random`.
const std::vector<Suite>& random_suites();
// Checks that are known not to hold as literally stated; run by the acceptance binary only.
const std::vector<Suite>& literal_suites();
const Suite& find_suite(const std::string& name);

// Reference loop over the instances in index order.
SuiteResult run_suite_serial(const Suite& suite, const SuiteConfig& cfg);
// OpenMP fan-out over instances; the result equals the serial one.
SuiteResult run_suite_parallel(const Suite& suite, const SuiteConfig& cfg);
SuiteResult run_suite(const Suite& suite, const SuiteConfig& cfg, Execution ex = Execution::parallel);

// One expected value of the regression corpus.
struct ExampleCheck {
  std::string example;
  std::string name;
  std::string expected;
  std::string actual;

  bool ok() const { return expected == actual; }
};

// Replays the two counterexamples and the relevance vector end to end.
std::vector<ExampleCheck> replay_examples();

}  // namespace arthur
