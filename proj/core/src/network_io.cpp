#include "crvar/network_io.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>

#include "crvar/errors.hpp"

namespace crvar {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string quote(std::string const& s) {
  std::string r = "\"";
  for (char ch : s) {
    if (ch == '"') r += '\\';
    r += ch;
  }
  return r + "\"";
}

char const* style(EdgeLabel l) {
  switch (l) {
    case EdgeLabel::Kl:
    case EdgeLabel::Tl: return "solid";
    case EdgeLabel::Kr:
    case EdgeLabel::Tr: return "dashed";
    case EdgeLabel::plain: return "dotted";
    case EdgeLabel::cross: return "bold";
  }
  return "solid";
}

}  // namespace

std::string emit_dot(Network const& net,
                     std::optional<std::vector<std::optional<IdentityBasis>>> const& instantiation) {
  std::ostringstream out;
  out << "// kind=" << to_string(net.meta.kind) << " depth=" << net.meta.depth
      << " with_top=" << (net.meta.with_top ? "true" : "false") << " nodes=" << net.nodes.size()
      << " covers=" << net.covers.size();
  if (instantiation) {
    auto k = std::count_if(instantiation->begin(), instantiation->end(), [](auto const& b) { return b.has_value(); });
    out << " instantiated=" << k << " symbolic=" << (net.nodes.size() - static_cast<std::size_t>(k));
  }
  out << "\n";
  out << "digraph crvar {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < net.nodes.size(); ++i) {
    auto const& n = net.nodes[i];
    std::string label = to_string(n.expr);
    if (instantiation) {
      auto const& b = instantiation->at(i);
      label += b ? "\\n[" + std::to_string(b->size()) + " identities]" : "\\n[symbolic]";
    }
    out << "  " << quote(n.id) << " [label=" << quote(label) << "];\n";
  }
  for (auto const& c : net.covers) {
    out << "  " << quote(net.nodes[c.lower].id) << " -> " << quote(net.nodes[c.upper].id) << " [style=" << style(c.label)
        << ", label=" << quote(to_string(c.label)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_json(Network const& net,
                      std::optional<std::vector<std::optional<IdentityBasis>>> const& instantiation) {
  ordered_json nodes = ordered_json::array();
  for (std::size_t i = 0; i < net.nodes.size(); ++i) {
    auto const& n = net.nodes[i];
    ordered_json jn{{"id", n.id}, {"expr", to_string(n.expr)}};
    if (!n.notes.empty()) {
      jn["notes"] = n.notes;
    }
    if (instantiation) {
      auto const& b = instantiation->at(i);
      if (b) {
        ordered_json lines = ordered_json::array();
        for (auto const& id : b->identities()) {
          lines.push_back(to_string(id));
        }
        jn["basis"] = std::move(lines);
      } else {
        jn["symbolic"] = true;
      }
    }
    nodes.push_back(std::move(jn));
  }
  ordered_json covers = ordered_json::array();
  for (auto const& c : net.covers) {
    covers.push_back({{"lo", net.nodes[c.lower].id}, {"hi", net.nodes[c.upper].id}, {"label", to_string(c.label)}});
  }
  ordered_json meta{{"kind", to_string(net.meta.kind)}, {"depth", net.meta.depth}, {"with_top", net.meta.with_top}};
  ordered_json j{{"nodes", std::move(nodes)}, {"covers", std::move(covers)}, {"meta", std::move(meta)}};
  return j.dump(2) + "\n";
}

Network load_network_json(std::string const& text) {
  Network net;
  try {
    json j = json::parse(text);
    auto const& m = j.at("meta");
    net.meta.kind = parse_network_kind(m.at("kind").get<std::string>());
    net.meta.depth = m.at("depth").get<std::size_t>();
    net.meta.with_top = m.at("with_top").get<bool>();
    for (auto const& jn : j.at("nodes")) {
      std::string id = jn.at("id").get<std::string>();
      NodeExpr e = parse_node_expr(jn.at("expr").get<std::string>());
      if (net.find(id)) {
        throw FormatError("duplicate node id '" + id + "'");
      }
      std::vector<std::string> notes;
      if (jn.contains("notes")) {
        notes = jn.at("notes").get<std::vector<std::string>>();
      }
      net.nodes.push_back(NetworkNode{std::move(id), std::move(e), std::move(notes)});
    }
    for (auto const& jc : j.at("covers")) {
      auto lo = net.find(jc.at("lo").get<std::string>());
      auto hi = net.find(jc.at("hi").get<std::string>());
      if (!lo || !hi) {
        throw FormatError("cover refers to an unknown node");
      }
      net.add_cover(*lo, *hi, parse_edge_label(jc.at("label").get<std::string>()));
    }
  } catch (json::exception const& e) {
    throw FormatError(std::string("malformed network JSON: ") + e.what());
  } catch (SyntaxError const& e) {
    throw FormatError(std::string("bad node expression: ") + e.what());
  }
  return net;
}

}  // namespace crvar
