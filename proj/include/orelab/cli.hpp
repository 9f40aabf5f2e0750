#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orelab {

// Full command dispatch, callable in-process. Exit codes: 0 holds/ok,
// 1 fails or catalog mismatch, 2 usage or validation error,
// 3 inconclusive or blocked hypothesis.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace orelab
