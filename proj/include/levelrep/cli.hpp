#pragma once

#include <ostream>

namespace levelrep {

/// Exit codes: 0 true/ok, 1 false (or rewrite budget exhausted),
/// 2 usage or parse error, 3 invariant violation or fuzz failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace levelrep
