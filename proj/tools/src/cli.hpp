#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sgdraw::cli {

inline constexpr int kExitPositive = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
// classify only: the balanced => clusterizable => drawable chain broke
inline constexpr int kExitInconsistent = 3;

enum class DecideMode { kAuto, kComplete, kOracle };

struct DecideOptions {
  std::string input;
  DecideMode mode = DecideMode::kAuto;
  std::optional<std::uint64_t> limit;
};

struct CheckOptions {
  std::string graph;
  std::string drawing;
  bool exact = true;
};

struct GenOptions {
  std::string pattern;
  std::string output;  // empty: stdout
  bool dot = false;
};

struct BenchOptions {
  std::vector<int> sizes{250, 500, 1000, 2000};
  int trials = 3;
  std::uint64_t seed = 1;
  std::string family = "unit";
};

// "-" reads standard input.
int cmd_decide(const DecideOptions& opt, std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err);
int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);
int cmd_classify(const std::string& input, std::ostream& out, std::ostream& err);
// CSV "n,trial,micros"; only decide_complete is timed.
int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sgdraw::cli
