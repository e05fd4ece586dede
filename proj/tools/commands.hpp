#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prkit::cli {

// Exit codes. Any computed verdict, true or false, exits with kOk.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kBadInput = 3;
inline constexpr int kPrecondition = 4;
inline constexpr int kBudget = 5;
inline constexpr int kInvariant = 6;

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// Applies PRKIT_THREADS, if set, to the OpenMP thread count.
void apply_thread_env();

}  // namespace prkit::cli
