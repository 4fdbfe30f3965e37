#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nccalc {

/// Command dispatch behind the nccalc binary. Writes a JSON report to `out`
/// and diagnostics to `err`. Returns 0 when the command ran and no check
/// failed or came back Distinct, 1 when one did or a domain error occurred,
/// 2 on usage errors. Reports are byte-identical for identical inputs and
/// seeds; timing is included only when --timing is given.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nccalc
