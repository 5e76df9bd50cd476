#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qft::cli {

/// Runs the command-line front end. Subcommands: transform, inverse,
/// convolve, check-lemma, certify, export. Returns the process exit status:
/// 0 on success / PASS / verdict produced, 1 on a failed check, 2 on usage
/// errors. All numerical work is delegated to the library; output files are
/// byte-identical across repeated runs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qft::cli
