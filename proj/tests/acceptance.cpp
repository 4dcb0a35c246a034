// Acceptance run: one line per criterion, exit 0 iff the failing set is the pinned known set.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "arthur/cli.hpp"
#include "arthur/suite.hpp"

namespace {

using clock_type = std::chrono::steady_clock;
using namespace arthur;

constexpr std::uint64_t kSeed = 1;
constexpr int kSuiteCount = 500;
constexpr int kOracleCount = 300;
constexpr double kExampleSeconds = 1.0;

// criterion 6 as literally stated omits the Kottwitz sign of the form
const std::set<int> kKnownFailures{6};
const char* kKnownNote =
    "the literal product equals e(G) and is -1 on inner forms with e(G) = -1; "
    "the product times e(G) is +1 everywhere";

struct Line {
  int id = 0;
  bool pass = false;
  std::string detail;
  bool unexpected = false;
};

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

nlohmann::json cli_json(std::vector<std::string> args, int& code) {
  args.insert(args.begin(), {"--format", "json"});
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str().empty() ? nlohmann::json{} : nlohmann::json::parse(out.str());
}

struct SuiteRun {
  int instances = 0;
  std::size_t violations = 0;
  double seconds = 0;
  std::string first;
};

SuiteRun run_named(const std::string& name, int count) {
  SuiteConfig cfg;
  cfg.seed = kSeed;
  cfg.count = count;
  const auto t0 = clock_type::now();
  const SuiteResult r = run_suite(find_suite(name), cfg);
  SuiteRun s{r.instances, r.violations.size(), seconds_since(t0), ""};
  if (!r.violations.empty()) s.first = r.violations.front().reproducer + " (" + r.violations.front().detail + ")";
  return s;
}

std::string describe(const std::string& name, const SuiteRun& s) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s: %d instances, %zu violations, %.2f s", name.c_str(), s.instances, s.violations,
                s.seconds);
  return buf;
}

Line suites_line(int id, const std::vector<std::pair<std::string, int>>& runs, double limit) {
  Line l{id, true, ""};
  for (const auto& [name, count] : runs) {
    const SuiteRun s = run_named(name, count);
    if (!l.detail.empty()) l.detail += "; ";
    l.detail += describe(name, s);
    if (s.violations || s.instances < count || (limit > 0 && s.seconds > limit)) l.pass = false;
    if (s.violations) l.detail += " first: " + s.first;
  }
  if (limit > 0) l.detail += " (limit " + std::to_string(static_cast<int>(limit)) + " s each)";
  return l;
}

Line example_line(int id, const std::string& example, const std::function<std::string()>& cli_checks) {
  const auto t0 = clock_type::now();
  int total = 0, bad = 0;
  std::string first;
  for (const ExampleCheck& c : replay_examples()) {
    if (c.example != example) continue;
    ++total;
    if (!c.ok()) {
      ++bad;
      if (first.empty()) first = c.name + " expected " + c.expected + " got " + c.actual;
    }
  }
  const std::string cli_problem = cli_checks ? cli_checks() : "";
  const double secs = seconds_since(t0);
  Line l{id, total > 0 && bad == 0 && cli_problem.empty() && secs < kExampleSeconds, ""};
  char buf[120];
  std::snprintf(buf, sizeof buf, "%s: %d/%d checks, %.3f s", example.c_str(), total - bad, total, secs);
  l.detail = buf;
  if (!first.empty()) l.detail += " first mismatch: " + first;
  if (!cli_problem.empty()) l.detail += " cli: " + cli_problem;
  return l;
}

const std::string kSp2 = "Sp(2): chi[1,O]@S(1)xS(1)^2 + one[1,O]@S(1)xS(1)";
const std::string kSo3 = "SO(3,split): one[1,O]@S(2)xS(1)";

std::string sp2_cli() {
  int code = 0;
  const auto d = cli_json({"dual", kSp2, "--char", "+,+"}, code);
  if (code != 0 || d["results"]["char_positional"] != "-,+") return "dual did not map +,+ to -,+";
  const auto c = cli_json({"compare-arthur", kSp2, "--char", "+,+"}, code);
  if (code != 0 || c["results"]["contradiction"] != true) return "compare-arthur did not flag a contradiction";
  return "";
}

std::string so3_cli() {
  int code = 0;
  const auto c = cli_json({"compare-arthur", kSo3}, code);
  if (code != 0 || c["results"]["contradiction"] != true) return "compare-arthur did not flag a contradiction";
  if (c["results"]["original_sign"] != -1 || c["results"]["corrected_sign"] != 1) return "signs differ";
  const auto d = cli_json({"dual", kSo3}, code);
  if (code != 0 || d["results"]["sign"] != 1) return "dual sign is not +1";
  return "";
}

Line literal_dual_sign_line() {
  const SuiteRun lit = run_named("dual_sign_literal", kSuiteCount);
  const SuiteRun cor = run_named("dual_sign_identity", kSuiteCount);
  Line l{6, lit.violations == 0 && lit.instances >= kSuiteCount && lit.seconds < 10, ""};
  l.detail = describe("dual_sign_literal", lit) + "; " + describe("dual_sign_identity", cor) + " (limit 10 s each)";
  if (lit.violations) l.detail += " first: " + lit.first;
  if (cor.violations || cor.instances < kSuiteCount || cor.seconds > 10) {
    l.detail += " [the corrected form also failed]";
    l.unexpected = true;
  }
  return l;
}

Line generic_dual_line() {
  const auto t0 = clock_type::now();
  int code = 0;
  const auto j = cli_json({"generic-dual", "SO(3,split): ; one[1,O]@S(2)xS(1)"}, code);
  const std::string want = "one[1,O]|-1/2@S(1)xS(1) + one[1,O]|1/2@S(1)xS(1)";
  const bool example_ok = code == 0 && j["results"]["dual"]["text"] == want;
  const double secs = seconds_since(t0);
  Line l = suites_line(9, {{"generic_dual", kOracleCount}}, 5);
  l.pass = l.pass && example_ok && secs < kExampleSeconds;
  l.detail = std::string("SO(3) example ") + (example_ok ? "matches" : "differs") + "; " + l.detail;
  return l;
}

}  // namespace

int main() {
  std::vector<Line> lines;
  lines.push_back(example_line(1, "sp2_two_characters", sp2_cli));
  lines.push_back(example_line(2, "so3_generic", so3_cli));
  lines.push_back(suites_line(3, {{"endoscopic_sign", kSuiteCount}}, 10));
  lines.push_back(suites_line(4, {{"mw_two_definitions", kSuiteCount}}, 5));
  lines.push_back(suites_line(5, {{"mw_membership", kSuiteCount}}, 0));
  lines.push_back(literal_dual_sign_line());
  lines.push_back(suites_line(7, {{"beta_closed_form", kOracleCount}, {"beta_discrete_oracle", kOracleCount}}, 0));
  lines.push_back(
      suites_line(8, {{"supercuspidal_criterion", kOracleCount}, {"beta_multiplicativity", kOracleCount}}, 0));
  lines.push_back(generic_dual_line());
  lines.push_back(example_line(10, "so7_relevance", nullptr));

  std::set<int> failed;
  bool unexpected = false;
  for (const Line& l : lines) {
    unexpected = unexpected || l.unexpected;
    std::string verdict = l.pass ? "PASS" : "FAIL";
    if (!l.pass) {
      failed.insert(l.id);
      if (kKnownFailures.count(l.id)) verdict += std::string(" (documented: ") + kKnownNote + ")";
    }
    std::cout << "criterion " << l.id << ": " << verdict << " - " << l.detail << "\n";
  }
  const bool as_expected = failed == kKnownFailures && !unexpected;
  std::cout << (as_expected ? "acceptance: failures match the documented set"
                            : "acceptance: failures differ from the documented set")
            << "\n";
  return as_expected ? 0 : 1;
}
