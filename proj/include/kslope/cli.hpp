#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kslope/rational.hpp"

namespace kslope::cli {

enum class Command { analyze, scan, verify, limit, export_table };

std::optional<Command> parse_command(std::string_view name);
const char* command_name(Command c);

struct CommandRequest {
    Command command = Command::analyze;
    std::filesystem::path model;
    std::optional<Rational> c;
    int steps = 10;
    std::vector<Rational> eps;
    long long max_m = 60;
    Rational width = pow2_neg(20);
    std::optional<std::filesystem::path> out;
    bool mixed = false; // export-table: emit the mixed table against H
};

enum ExitCode : int { ok = 0, internal_error = 1, validation_error = 2, verification_failure = 3 };

/// "2^-k" or a positive rational.
Rational parse_width(std::string_view text);
/// Comma-separated rationals; empty text gives an empty list.
std::vector<Rational> parse_rational_list(std::string_view text);

/// Executes one request. Reports go to `out` (or the --out file); diagnostics to `err`.
int run(const CommandRequest& request, std::ostream& out, std::ostream& err);

} // namespace kslope::cli
