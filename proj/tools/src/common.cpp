#include "common.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "crvar/errors.hpp"
#include "crvar/variety.hpp"

namespace crvar::cli {

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FormatError("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(std::string const& path, std::string const& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw FormatError("cannot write '" + path + "'");
  }
  out << text;
}

IdentityBasis load_basis_arg(std::string const& arg) {
  constexpr std::string_view prefix = "catalog:";
  if (arg.rfind(prefix, 0) == 0) {
    std::string name = arg.substr(prefix.size());
    if (!in_catalog(name)) {
      throw FormatError("unknown catalog basis '" + name + "'");
    }
    return catalog(name);
  }
  if (!std::filesystem::exists(arg) && in_catalog(arg)) {
    return catalog(arg);
  }
  auto parsed = parse_basis(read_file(arg), std::filesystem::path(arg).stem().string());
  return std::move(parsed.basis);
}

nlohmann::json assignment_json(Assignment const& a) {
  nlohmann::json j = nlohmann::json::object();
  for (auto const& [k, v] : a) {
    j[k] = v;
  }
  return j;
}

std::string assignment_text(Assignment const& a) {
  std::string r;
  for (auto const& [k, v] : a) {
    r += (r.empty() ? "" : ", ") + k + "=" + std::to_string(v);
  }
  return r;
}

void add_format_option(CLI::App* app, Context& ctx) {
  app->add_option_function<std::string>(
         "--format", [&ctx](std::string const& f) { ctx.json = f == "json"; }, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace crvar::cli
