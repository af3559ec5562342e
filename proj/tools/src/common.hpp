#pragma once

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <string>

#include "crvar/identity.hpp"
#include "crvar/table.hpp"

namespace crvar::cli {

enum Exit : int { kTrue = 0, kFalse = 1, kMalformed = 2 };

/// Shared by every subcommand: where the command stores its exit code.
struct Context {
  int exit_code = kTrue;
  bool json = false;
};

std::string read_file(std::string const& path);
/// Writes to `path`, or to stdout when it is empty or "-".
void write_output(std::string const& path, std::string const& text);

/// "catalog:NAME", a bare catalog name, or a basis file.
IdentityBasis load_basis_arg(std::string const& arg);

nlohmann::json assignment_json(Assignment const& a);
std::string assignment_text(Assignment const& a);

void add_format_option(CLI::App* app, Context& ctx);

void register_word(CLI::App& app, Context& ctx);
void register_variety(CLI::App& app, Context& ctx);
void register_semigroup(CLI::App& app, Context& ctx);
void register_network(CLI::App& app, Context& ctx);

}  // namespace crvar::cli
