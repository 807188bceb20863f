#pragma once

#include "ramfilt/document.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace ramfilt {

enum class Command { Lower, Upper, Admissible, GroupCheck, AsBreak };

enum ExitCode : int { kExitOk = 0, kExitInternal = 1, kExitValidation = 2 };

struct CommandOptions {
    bool json = false;
    std::optional<std::int64_t> bound;
    std::filesystem::path base_dir = ".";  // resolves group.cayley_file
};

/// Parses "lower", "upper", "admissible", "group-check", "as-break".
std::optional<Command> command_from_name(const std::string& name);
std::string command_name(Command command);

/// Runs one command. Reports go to out (human text or a single JSON object),
/// diagnostics to err. Returns the process exit code.
int run_command(Command command, const ProfileDocument& doc, const CommandOptions& options, std::ostream& out,
                std::ostream& err);

/// Loads the document at path, then runs the command; load errors exit 2.
int run_command_on_file(Command command, const std::filesystem::path& path, CommandOptions options,
                        std::ostream& out, std::ostream& err);

}  // namespace ramfilt
