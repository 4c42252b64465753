#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace planefill::cli {

inline constexpr int kSchemaVersion = 1;

/// Exit codes: 0 smooth / consistent, 1 singular / counterexample, 2 error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Parses "2-17", "3,5,7" or a mix such as "2-9,11". Sorted, no duplicates.
std::vector<std::uint64_t> parse_range(const std::string& text);

/// Runs task(i) for i in [0, n) on `jobs` threads; jobs == 0 means all cores.
/// The first exception thrown by a task is rethrown after all threads join.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& task);

}  // namespace planefill::cli
