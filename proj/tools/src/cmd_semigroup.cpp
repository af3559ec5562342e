#include <iostream>
#include <memory>
#include <sstream>

#include "common.hpp"
#include "crvar/congruence.hpp"
#include "crvar/errors.hpp"
#include "crvar/free_band.hpp"
#include "crvar/table_io.hpp"
#include "crvar/variety.hpp"

namespace crvar::cli {

using nlohmann::json;

namespace {

json blocks_json(EquivalenceRelation const& r) {
  json j = json::array();
  for (auto const& b : r.blocks()) j.push_back(b);
  return j;
}

void emit_table(Context const& ctx, UnaryCayleyTable const& s, std::string const& out) {
  if (out.empty() || out == "-") {
    std::cout << table_to_json(s);
    return;
  }
  save_table(s, out);
  if (ctx.json) {
    std::cout << json{{"written", out}, {"name", s.name()}, {"order", s.order()}}.dump() << "\n";
  } else {
    std::cout << "wrote " << (s.name().empty() ? "table" : s.name()) << " (order " << s.order() << ") to " << out
              << "\n";
  }
}

void do_check(Context& ctx, std::string const& path) {
  UnaryCayleyTable s = load_table(path, TableCheck::none);
  auto triple = find_nonassociative_triple(s);
  std::optional<Element> bad;
  if (!triple) bad = find_non_cr_element(s);
  bool ok = !triple && !bad;
  if (ctx.json) {
    json j{{"order", s.order()}, {"associative", !triple}, {"completely_regular", !triple && !bad}};
    if (triple) j["triple"] = *triple;
    if (bad) j["element"] = *bad;
    if (!triple) j["idempotents"] = idempotents(s);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "order " << s.order() << "\n";
    if (triple) {
      auto [a, b, c] = *triple;
      std::cout << "not associative at (" << a << ", " << b << ", " << c << ")\n";
    } else if (bad) {
      std::cout << "associative\nnot completely regular at element " << *bad << "\n";
    } else {
      std::cout << "associative\ncompletely regular\nidempotents " << idempotents(s).size() << "\n";
    }
  }
  ctx.exit_code = ok ? kTrue : kFalse;
}

void do_green(Context const& ctx, std::string const& path) {
  UnaryCayleyTable s = load_table(path);
  GreenRelations g = green(s);
  if (ctx.json) {
    std::cout << json{{"L", blocks_json(g.L)}, {"R", blocks_json(g.R)}, {"H", blocks_json(g.H)}, {"D", blocks_json(g.D)}}
                     .dump()
              << "\n";
    return;
  }
  auto line = [](char const* n, EquivalenceRelation const& r) {
    std::cout << n << " " << to_string(r);
    if (r.is_identity()) std::cout << " (identity)";
    if (r.is_universal()) std::cout << " (universal)";
    std::cout << "\n";
  };
  line("L", g.L);
  line("R", g.R);
  line("H", g.H);
  line("D", g.D);
}

Congruence congruence_of_kind(UnaryCayleyTable const& s, std::string const& kind) {
  if (kind == "L0") return L0(s);
  if (kind == "R0") return R0(s);
  if (kind == "H0") return H0(s);
  if (kind == "tau") return tau(s);
  if (kind == "least-D-H") return least_d_congruence(s, GreenKind::H);
  if (kind == "least-D-L") return least_d_congruence(s, GreenKind::L);
  if (kind == "least-D-R") return least_d_congruence(s, GreenKind::R);
  return route_congruence(s, parse_op(kind));
}

std::vector<std::string> const kKinds = {"L0", "R0", "H0", "tau", "K", "T", "Tl", "Tr", "Kl", "Kr",
                                          "least-D-H", "least-D-L", "least-D-R"};

void do_congruence(Context const& ctx, std::string const& path, std::string const& kind) {
  UnaryCayleyTable s = load_table(path);
  auto rel = congruence_of_kind(s, kind).relation();
  if (ctx.json) {
    std::cout << json{{"kind", kind},
                      {"blocks", blocks_json(rel)},
                      {"identity", rel.is_identity()},
                      {"universal", rel.is_universal()}}
                     .dump()
              << "\n";
  } else {
    std::cout << kind << " " << to_string(rel);
    if (rel.is_identity()) std::cout << " (identity)";
    if (rel.is_universal()) std::cout << " (universal)";
    std::cout << "\n";
  }
}

std::vector<Element> parse_list(std::string const& text) {
  std::vector<Element> r;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      r.push_back(static_cast<Element>(v));
    } catch (std::logic_error const&) {
      throw FormatError("bad element list '" + text + "'");
    }
  }
  return r;
}

}  // namespace

void register_semigroup(CLI::App& app, Context& ctx) {
  auto* sg = app.add_subcommand("semigroup", "Finite unary semigroups given by Cayley tables");
  sg->require_subcommand(1);
  auto path = std::make_shared<std::string>();
  auto out = std::make_shared<std::string>();

  auto* check = sg->add_subcommand("check", "Associativity and completely regular axioms");
  check->add_option("table", *path, "Cayley table JSON file")->required();
  add_format_option(check, ctx);
  check->callback([&ctx, path] { do_check(ctx, *path); });

  auto* gr = sg->add_subcommand("green", "Green's relations");
  gr->add_option("table", *path, "Cayley table JSON file")->required();
  add_format_option(gr, ctx);
  gr->callback([&ctx, path] { do_green(ctx, *path); });

  auto kind = std::make_shared<std::string>();
  auto* cong = sg->add_subcommand("congruence", "A named congruence");
  cong->add_option("--kind", *kind, "Congruence kind")->required()->check(CLI::IsMember(kKinds));
  cong->add_option("table", *path, "Cayley table JSON file")->required();
  add_format_option(cong, ctx);
  cong->callback([&ctx, path, kind] { do_congruence(ctx, *path, *kind); });

  auto ideal = std::make_shared<std::string>();
  auto* quot = sg->add_subcommand("quotient", "Quotient by a named congruence or Rees quotient by an ideal");
  auto* kind_opt = quot->add_option("--kind", *kind, "Congruence kind")->check(CLI::IsMember(kKinds));
  auto* ideal_opt = quot->add_option("--ideal", *ideal, "Comma-separated ideal elements");
  kind_opt->excludes(ideal_opt);
  quot->add_option("table", *path, "Cayley table JSON file")->required();
  quot->add_option("-o,--output", *out, "Output file");
  add_format_option(quot, ctx);
  quot->callback([&ctx, path, kind, ideal, out, kind_opt, ideal_opt] {
    UnaryCayleyTable s = load_table(*path);
    if (ideal_opt->count() > 0) {
      emit_table(ctx, rees_quotient(s, parse_list(*ideal)), *out);
    } else if (kind_opt->count() > 0) {
      emit_table(ctx, quotient(s, congruence_of_kind(s, *kind)), *out);
    } else {
      throw FormatError("quotient needs --kind or --ideal");
    }
  });

  auto* du = sg->add_subcommand("dual", "Opposite multiplication");
  du->add_option("table", *path, "Cayley table JSON file")->required();
  du->add_option("-o,--output", *out, "Output file");
  add_format_option(du, ctx);
  du->callback([&ctx, path, out] { emit_table(ctx, dual(load_table(*path)), *out); });

  auto gens = std::make_shared<std::size_t>(2);
  auto* fb = sg->add_subcommand("freeband", "Free band on 1 to 3 generators");
  fb->add_option("--generators", *gens, "Number of generators")->required();
  fb->add_option("-o,--output", *out, "Output file");
  add_format_option(fb, ctx);
  fb->callback([&ctx, gens, out] { emit_table(ctx, free_band(*gens), *out); });

  auto* ext = sg->add_subcommand("extend", "Right-zero extension of a band");
  ext->add_option("table", *path, "Cayley table JSON file")->required();
  ext->add_option("-o,--output", *out, "Output file");
  add_format_option(ext, ctx);
  ext->callback([&ctx, path, out] { emit_table(ctx, right_zero_extension(load_table(*path)), *out); });
}

}  // namespace crvar::cli
