#include <iostream>
#include <memory>

#include "common.hpp"
#include "crvar/table_io.hpp"
#include "crvar/variety.hpp"

namespace crvar::cli {

using nlohmann::json;

namespace {

void print_basis(Context const& ctx, IdentityBasis const& b) {
  if (ctx.json) {
    json ids = json::array();
    for (auto const& id : b.identities()) ids.push_back(to_string(id));
    std::cout << json{{"name", b.name()}, {"size", b.size()}, {"identities", ids}}.dump() << "\n";
  } else {
    std::cout << to_text(b);
  }
}

void do_member(Context& ctx, std::string const& basis_arg, std::string const& table_path) {
  IdentityBasis b = load_basis_arg(basis_arg);
  UnaryCayleyTable s = load_table(table_path);
  auto r = satisfies(s, b);
  if (ctx.json) {
    json j{{"member", r.holds}};
    if (!r.holds) {
      j["identity"] = to_string(b.identities()[r.failed_index]);
      j["assignment"] = assignment_json(*r.counterexample);
    }
    std::cout << j.dump() << "\n";
  } else if (r.holds) {
    std::cout << "true\n";
  } else {
    std::cout << "false: " << to_string(b.identities()[r.failed_index]) << " fails at "
              << assignment_text(*r.counterexample) << "\n";
  }
  ctx.exit_code = r.holds ? kTrue : kFalse;
}

}  // namespace

void register_variety(CLI::App& app, Context& ctx) {
  auto* var = app.add_subcommand("variety", "Identity bases and upper operators");
  var->require_subcommand(1);
  auto basis = std::make_shared<std::string>();

  auto* dual = var->add_subcommand("dual", "Mirror every identity of a basis");
  dual->add_option("basis", *basis, "Basis file or catalog:NAME")->required();
  add_format_option(dual, ctx);
  dual->callback([&ctx, basis] { print_basis(ctx, dual_basis(load_basis_arg(*basis))); });

  auto ops = std::make_shared<std::string>();
  auto* apply = var->add_subcommand("apply", "Apply upper operators left to right");
  apply->add_option("--ops", *ops, "Operator word, e.g. KlKr")->required();
  apply->add_option("basis", *basis, "Basis file or catalog:NAME")->required();
  add_format_option(apply, ctx);
  apply->callback([&ctx, basis, ops] {
    auto word = parse_ops(*ops);
    print_basis(ctx, apply_word(load_basis_arg(*basis), word));
  });

  auto table = std::make_shared<std::string>();
  auto* mem = var->add_subcommand("member", "Does a finite table satisfy a basis");
  mem->add_option("basis", *basis, "Basis file or catalog:NAME")->required();
  mem->add_option("table", *table, "Cayley table JSON file")->required();
  add_format_option(mem, ctx);
  mem->callback([&ctx, basis, table] { do_member(ctx, *basis, *table); });
}

}  // namespace crvar::cli
