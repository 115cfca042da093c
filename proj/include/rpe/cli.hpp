#pragma once

// Command-line front end. Subcommands:
//
//   pi --method {chudnovsky|bg163|r243|agm} --digits N [--workers W] [--json]
//   lambda-star R --digits N [--method {theta|bisect}]
//   alpha R --digits N
//   params R --family {pos|neg} --digits N
//   verify {lambda163|alpha163|bg163|r243|g163|all} --digits N [--json]
//   recognize --degree D --digits N (--value STR | --file PATH)
//   classnum D [--oracle]
//   bench --digits N [--methods LIST]
//
// Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage
// error, 3 computation error. Identical invocations write byte-identical
// standard output; timings go to standard error.
//
// RPE_DIGITS in the environment overrides the default precision (100).

#include <iosfwd>
#include <string>
#include <vector>

namespace rpe {

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rpe
