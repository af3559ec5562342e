#include <iostream>
#include <memory>
#include <variant>

#include "common.hpp"
#include "crvar/word.hpp"
#include "crvar/zeta.hpp"

namespace crvar::cli {

using nlohmann::json;

namespace {

char const* roman(int c) { return c == 1 ? "i" : c == 2 ? "ii" : "iii"; }

void do_validate(Context& ctx, std::string const& text) {
  auto check = check_word(tokenize(text));
  bool ok = static_cast<bool>(check);
  if (ctx.json) {
    json j{{"valid", ok}};
    if (!ok) {
      j["condition"] = check.violated_condition;
      j["position"] = check.position;
    }
    std::cout << j.dump() << "\n";
  } else if (ok) {
    std::cout << "true\n";
  } else {
    std::cout << "false: condition (" << roman(check.violated_condition) << ") violated at symbol "
              << check.position << "\n";
  }
  ctx.exit_code = ok ? kTrue : kFalse;
}

void do_parse(Context& ctx, std::string const& text) {
  Term t = parse_term(text);
  auto c = content(t);
  if (ctx.json) {
    std::cout << json{{"term", to_string(t)}, {"length", t.length()}, {"depth", t.depth()}, {"content", c}}.dump()
              << "\n";
  } else {
    std::cout << to_string(t) << "\nlength " << t.length() << ", depth " << t.depth() << ", content {";
    bool first = true;
    for (auto const& x : c) {
      std::cout << (first ? "" : ",") << x;
      first = false;
    }
    std::cout << "}\n";
  }
}

void do_mirror(Context& ctx, std::string const& text) {
  std::string m = to_string(mirror(tokenize(text)));
  if (ctx.json) {
    std::cout << json{{"input", text}, {"mirror", m}}.dump() << "\n";
  } else {
    std::cout << m << "\n";
  }
}

void do_zeta(Context& ctx, std::string const& u, std::string const& v, std::size_t budget) {
  auto verdict = zeta_equivalent(parse_term(u), parse_term(v), budget);
  if (auto const* eq = std::get_if<ZetaEquivalent>(&verdict)) {
    if (ctx.json) {
      json path = json::array();
      for (auto const& t : eq->path) path.push_back(to_string(t));
      std::cout << json{{"verdict", "equivalent"}, {"steps", eq->steps()}, {"path", path}}.dump() << "\n";
    } else {
      std::cout << "equivalent, path length " << eq->steps() << "\n";
      for (auto const& t : eq->path) std::cout << "  " << to_string(t) << "\n";
    }
    ctx.exit_code = kTrue;
  } else {
    auto const& un = std::get<ZetaUnknown>(verdict);
    if (ctx.json) {
      std::cout << json{{"verdict", "unknown"}, {"budget", un.budget}, {"visited", un.visited}}.dump() << "\n";
    } else {
      std::cout << "unknown: no path within budget " << un.budget << " (" << un.visited << " terms visited)\n";
    }
    ctx.exit_code = kFalse;
  }
}

}  // namespace

void register_word(CLI::App& app, Context& ctx) {
  auto* word = app.add_subcommand("word", "Words over the unary alphabet");
  word->require_subcommand(1);

  auto text = std::make_shared<std::string>();
  auto* validate = word->add_subcommand("validate", "Check the well-formedness conditions");
  validate->add_option("word", *text, "Word text")->required();
  add_format_option(validate, ctx);
  validate->callback([&ctx, text] { do_validate(ctx, *text); });

  auto* parse = word->add_subcommand("parse", "Parse a word into a term");
  parse->add_option("word", *text, "Word text")->required();
  add_format_option(parse, ctx);
  parse->callback([&ctx, text] { do_parse(ctx, *text); });

  auto* mir = word->add_subcommand("mirror", "Mirror image of a word");
  mir->add_option("word", *text, "Word text")->required();
  add_format_option(mir, ctx);
  mir->callback([&ctx, text] { do_mirror(ctx, *text); });

  auto other = std::make_shared<std::string>();
  auto budget = std::make_shared<std::size_t>(12);
  auto* zeta = word->add_subcommand("zeta-check", "Search for a rewrite path between two terms");
  zeta->add_option("u", *text, "First term")->required();
  zeta->add_option("v", *other, "Second term")->required();
  zeta->add_option("--budget", *budget, "Maximum path length")->check(CLI::PositiveNumber);
  add_format_option(zeta, ctx);
  zeta->callback([&ctx, text, other, budget] { do_zeta(ctx, *text, *other, *budget); });
}

}  // namespace crvar::cli
