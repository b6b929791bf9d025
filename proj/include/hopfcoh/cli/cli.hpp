#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hopfcoh::cli {

// Runs one command line (without the program name). Returns 0 when every
// verdict passed, 1 when one failed, 2 on input or precondition errors and 3
// on internal invariant failures; argument errors use CLI11's codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfcoh::cli
