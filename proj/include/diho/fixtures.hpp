#ifndef DIHO_FIXTURES_HPP
#define DIHO_FIXTURES_HPP

#include <functional>
#include <string>
#include <vector>

namespace diho::fixtures {

struct FixtureResult {
  bool pass = false;
  std::string detail;
};

/*
 * A self-contained check with a frozen expectation.  `source` says where
 * the expected value comes from: "documented" when it reproduces a worked
 * value from the reference material, "direct" when the assertion is
 * self-evident or a recorded outcome, "oracle:<name>" when the value was
 * frozen from an independent recomputation by the named oracle.
 */
struct FixtureCase {
  std::string id;
  std::string source;
  std::function<FixtureResult()> run;
};

const std::vector<FixtureCase>& all_fixtures();

struct RunReport {
  int ran = 0;
  int passed = 0;
  std::string text;  // one line per case plus a summary line; byte-stable
  bool all_passed() const { return ran == passed; }
};

/* Run every fixture whose id contains the pattern (empty = all). */
RunReport run_fixtures(const std::string& pattern = "");

}  // namespace diho::fixtures

#endif
