#pragma once

#include <resolvent/error.hpp>
#include <resolvent/invariants.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace resolvent::cli {

/// Process exit codes; a stable contract for scripts.
enum ExitCode : int {
    exit_ok = 0,
    exit_parse = 2,
    exit_disconnected = 3,
    exit_capacity = 4,
    exit_theorem_failure = 5,
};

int exit_code_for(ErrorKind kind) noexcept;

struct Hooks {
    /// Replaces resolvent::solve inside `verify`; used to exercise the
    /// failure path with a deliberately broken solver.
    Solver verify_solver;
};

/// Runs `resolvent <args...>` (args exclude the program name). The report
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks = {});

} // namespace resolvent::cli
