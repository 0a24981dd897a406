#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace splitfox {

// Runs one CLI command. JSON report on `out`, human-readable summary on
// `err`. Returns 0 on success, 1 on domain errors (bad mathematical input),
// 2 on usage or parse errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splitfox
