#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpd {

/* Command-line driver behind tools/main.cpp, callable in process so the test
 * suite can exercise verbs without spawning binaries.  args is argv without
 * the program name.  Human-readable report lines go to out; verbs that carry
 * a machine report append it as the final line of out, one compact JSON
 * object.  Error messages go to err.
 *
 * The exit code is a stable contract:
 *   0  success;
 *   1  mathematical failure: validator violations, a failed check suite,
 *      build errors on well-formed data, --exact on an instance whose
 *      adjoining function has no rational square root;
 *   2  input error: unreadable file, malformed document, dangling reference,
 *      unknown verb, unknown gallery entry, bad flag. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gpd
