#ifndef FFP_CLI_HPP
#define FFP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ffp::cli {

// Exit codes: 0 = success and all verifications passed, 1 = a verification
// mismatch, 2 = usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffp::cli

#endif
