#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bfh::cli {

/// Runs one command-line invocation against the given streams. Returns the
/// process exit status: 0 on success, 1 when the input produced
/// diagnostics, 2 on usage errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace bfh::cli
