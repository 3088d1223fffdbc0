#ifndef CCF_CLI_HPP
#define CCF_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace ccf {

// Exit codes: 0 success / domain-positive, 1 domain-negative, 2 invalid input.
int cmd_check(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_tree(const std::string& path, bool dot, std::ostream& out, std::ostream& err);
int cmd_canon(const std::string& path, bool json, std::ostream& out, std::ostream& err);
int cmd_iso(const std::string& path_a, const std::string& path_b, std::ostream& out,
            std::ostream& err);
int cmd_gen(int tree_nodes, int paths, std::uint64_t seed, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ccf

#endif
