#ifndef MMLAB_CLI_HPP
#define MMLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mmlab::cli {

// Exit codes: 0 success / all claims pass, 1 claim failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mmlab::cli

#endif
