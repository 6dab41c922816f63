#ifndef ZSUM_VERIFY_HPP_
#define ZSUM_VERIFY_HPP_

#include <string>
#include <vector>

#include "zsum/search.hpp"

namespace zsum {

struct CheckLine {
  bool pass = false;
  std::string entry;
  std::string element;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckLine> lines;
  bool passed() const {
    for (const auto& l : lines) {
      if (!l.pass) return false;
    }
    return true;
  }
};

std::vector<std::string> available_suites();

// Runs the named invariant suite ("all" runs every suite) over the
// default corpus. A nonempty entry_filter restricts every suite to the
// corpus entry (or built-in case) with that name. seed drives the
// randomized shrink checks of prop-3.1.
std::vector<SuiteResult> run_suites(const std::string& which,
                                    const SearchOptions& opts = {},
                                    const std::string& entry_filter = "",
                                    unsigned seed = 12345);

}  // namespace zsum

#endif  // ZSUM_VERIFY_HPP_
