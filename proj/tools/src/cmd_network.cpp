#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "common.hpp"
#include "crvar/errors.hpp"
#include "crvar/network.hpp"
#include "crvar/network_io.hpp"

namespace crvar::cli {

namespace {

struct NetworkArgs {
  std::string kind;
  std::string theorem;
  std::size_t depth = 1;
  std::vector<std::string> bind;
  std::string format = "dot";
  bool with_top = false;
  bool assume_side_conditions = false;
  std::string out;
};

NetworkKind resolve_kind(NetworkArgs const& a) {
  static std::map<std::string, NetworkKind> const by_number = {{"4.2", NetworkKind::K},
                                                               {"4.3", NetworkKind::T},
                                                               {"4.5", NetworkKind::combined},
                                                               {"5.1", NetworkKind::ladder},
                                                               {"6.1", NetworkKind::ladder_general}};
  if (!a.theorem.empty()) {
    return by_number.at(a.theorem);
  }
  if (!a.kind.empty()) {
    return parse_network_kind(a.kind);
  }
  throw FormatError("network needs --kind or --theorem");
}

Bindings parse_bindings(std::vector<std::string> const& items) {
  Bindings b;
  for (auto const& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw FormatError("binding '" + item + "' is not of the form NAME=BASIS");
    }
    std::string name = item.substr(0, eq);
    IdentityBasis basis = load_basis_arg(item.substr(eq + 1));
    if (!basis.content_balanced()) {
      throw ContentImbalance("binding " + name + " is not content-balanced");
    }
    if (name == "V") {
      b.V = std::move(basis);
    } else if (name == "Vl" || name == "V_l") {
      b.Vl = std::move(basis);
    } else if (name == "Vr" || name == "V_r") {
      b.Vr = std::move(basis);
    } else {
      throw FormatError("unknown binding '" + name + "'");
    }
  }
  return b;
}

void run_network(NetworkArgs const& a) {
  NetworkKind kind = resolve_kind(a);
  Network net;
  switch (kind) {
    case NetworkKind::K: net = gen_K_network(a.depth, a.with_top); break;
    case NetworkKind::T: net = gen_T_network(a.depth, a.with_top); break;
    case NetworkKind::combined: net = gen_combined(a.depth, a.with_top); break;
    case NetworkKind::ladder: net = gen_ladder(a.depth, a.with_top); break;
    case NetworkKind::ladder_general:
      net = gen_ladder_general(a.depth, a.assume_side_conditions ? LadderConditions::all() : LadderConditions{},
                               a.with_top);
      break;
  }
  std::optional<std::vector<std::optional<IdentityBasis>>> inst;
  if (!a.bind.empty()) {
    inst = instantiate(net, parse_bindings(a.bind));
  }
  write_output(a.out, a.format == "json" ? emit_json(net, inst) : emit_dot(net, inst));
}

}  // namespace

void register_network(CLI::App& app, Context& /*ctx*/) {
  auto args = std::make_shared<NetworkArgs>();
  auto* net = app.add_subcommand("network", "Generate a lattice network of variety expressions");
  auto* kind = net->add_option("--kind", args->kind, "K, T, combined, ladder or ladder-general")
                   ->check(CLI::IsMember({"K", "T", "combined", "ladder", "ladder-general"}));
  auto* thm = net->add_option("--theorem", args->theorem, "Construction number")
                  ->check(CLI::IsMember({"4.2", "4.3", "4.5", "5.1", "6.1"}));
  kind->excludes(thm);
  net->add_option("--depth", args->depth, "Word length or number of blocks")->check(CLI::Range(1, 12));
  net->add_option("--bind", args->bind, "Bindings V=...,Vl=...,Vr=...")->delimiter(',');
  net->add_option("--format", args->format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  net->add_flag("--with-top", args->with_top, "Adjoin the top element");
  net->add_flag("--assume-side-conditions", args->assume_side_conditions,
                "Record the side conditions of the generalised ladder as satisfied");
  net->add_option("-o,--output", args->out, "Output file");
  net->callback([args] { run_network(*args); });
}

}  // namespace crvar::cli
