#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace relmod::cli {

/// Runs one command line (without the program name). Exit codes: 0 all
/// requested checks hold, 1 a check failed, 2 usage or input error,
/// 3 internal inconsistency. RELMOD_THREADS caps OpenMP threads.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relmod::cli
