#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crvar/network.hpp"

namespace crvar {

/// Graphviz digraph drawn bottom to top.  Kl/Tl covers are solid, Kr/Tr
/// dashed, plain dotted, cross bold.  With an instantiation, node labels
/// show the basis size or "symbolic".
std::string emit_dot(Network const& net,
                     std::optional<std::vector<std::optional<IdentityBasis>>> const& instantiation = std::nullopt);

/// {"nodes": [{"id", "expr", "notes"?, "basis"?, "symbolic"?}],
///  "covers": [{"lo", "hi", "label"}], "meta": {"kind", "depth", "with_top"}}.
/// With an instantiation, each node carries "basis" (identity lines) or
/// "symbolic": true.
std::string emit_json(Network const& net,
                      std::optional<std::vector<std::optional<IdentityBasis>>> const& instantiation = std::nullopt);

/// Reads emit_json output back; bases are ignored.  Throws FormatError.
Network load_network_json(std::string const& text);

}  // namespace crvar
