#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qrep {

// Command-line front end. Returns the process exit code: 0 on success (and
// when every requested check passes), 1 on a failed check or comparison,
// 2 on a usage error. Output depends only on args.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrep
