#pragma once

// The gkz command line: one JSON instance in, one JSON report out.
//
// Instance keys: "A" (list of integer rows), "beta", "face" and "open_set"
// (column indices, 0-based), "options" ({"mode", "max_spairs", "time_cap",
// "hilbert_degree_cap"}), which override the command-line flags.

#include "gkz/error.hpp"
#include "gkz/json_io.hpp"
#include "gkz/normality.hpp"
#include "gkz/presentation.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace gkz::cli {

struct Options {
  RestrictionMode mode = RestrictionMode::Default;
  GroebnerCaps caps;
  std::optional<Integer> hilbert_degree_cap;
  std::size_t parallel = 1;
};

const std::vector<std::string>& commands();

/// Runs one command on one instance. Throws gkz::Error.
Json run(const std::string& command, const Json& instance, const Options& defaults);

/// {"error": {"kind", "message", "hypothesis"}}
Json error_report(const Error& error);

/// 0 success, 1 malformed input, 2 violated precondition, 3 scale limit,
/// 4 internal failure or failed verification.
int exit_code(ErrorKind kind);

/// Runs a JSON-lines batch; every line carries its own "command". Output
/// lines come in input order. Returns the largest exit code of any line.
int run_catalog(std::istream& in, std::ostream& out, const Options& defaults);

/// Full command-line entry point.
int main(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gkz::cli
