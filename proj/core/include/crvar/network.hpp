#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crvar/identity.hpp"
#include "crvar/node_expr.hpp"

namespace crvar {

enum class EdgeLabel : unsigned char { Kl, Kr, Tl, Tr, plain, cross };

std::string to_string(EdgeLabel l);
/// Throws FormatError.
EdgeLabel parse_edge_label(std::string_view s);
/// Kl <-> Kr, Tl <-> Tr.
EdgeLabel mirror_label(EdgeLabel l);

struct NetworkNode {
  std::string id;  ///< canonical expression string, possibly prefixed
  NodeExpr expr;
  std::vector<std::string> notes;
};

struct Cover {
  std::size_t lower;
  std::size_t upper;
  EdgeLabel label;
  friend bool operator==(Cover const&, Cover const&) = default;
};

/// Which construction produced a network.
enum class NetworkKind : unsigned char { K, T, combined, ladder, ladder_general };

std::string to_string(NetworkKind k);
/// Throws FormatError.
NetworkKind parse_network_kind(std::string_view s);

struct NetworkMeta {
  NetworkKind kind = NetworkKind::K;
  std::size_t depth = 1;
  bool with_top = false;
  friend bool operator==(NetworkMeta const&, NetworkMeta const&) = default;
};

struct Network {
  std::vector<NetworkNode> nodes;
  std::vector<Cover> covers;
  NetworkMeta meta;

  std::optional<std::size_t> find(std::string_view id) const;
  /// Adds a node unless one with the same id exists; returns its index.
  std::size_t add_node(NodeExpr expr, std::string id_prefix = {}, std::vector<std::string> notes = {});
  void add_cover(std::size_t lower, std::size_t upper, EdgeLabel label);

  std::vector<std::size_t> lower_covers(std::size_t v) const;
  std::vector<std::size_t> upper_covers(std::size_t v) const;
};

/// Same node ids, expressions and labelled covers, in any order, and equal
/// metadata.
bool same_network(Network const& a, Network const& b);

/// Alternating K-words up to length `depth`, their pairwise joins
/// (rewritten as meets, assuming a self-dual base) and V; V^K on top.
Network gen_K_network(std::size_t depth, bool with_top = false);

/// V, V^T, alternating T-words up to length `depth`, with a join node and
/// the meet node above it on every level; CR on top.
Network gen_T_network(std::size_t depth, bool with_top = false);

/// Disjoint union of the K and T networks (ids prefixed "K|" and "T|")
/// with a cross edge from each K-word node to the T-word node of the same
/// shape.
Network gen_combined(std::size_t depth, bool with_top = false);

/// Ladder built from `depth` glued blocks over V, V_l, V_r; V^K on top.
Network gen_ladder(std::size_t depth, bool with_top = false);

/// Side conditions required by the generalised ladder.
struct LadderConditions {
  bool chain_left = false;          ///< V < V_l < V^l <= V^Kl
  bool chain_right = false;         ///< V < V_r < V^r <= V^Kr
  bool upper_left_closed = false;   ///< (V^l)_Kr = V^l
  bool upper_right_closed = false;  ///< (V^r)_Kl = V^r

  static LadderConditions all() { return {true, true, true, true}; }
};

/// Ladder over V, V_l, V^l, V_r, V^r with chosen intermediate varieties on
/// higher levels.  Throws MissingSideCondition unless every flag is set.
Network gen_ladder_general(std::size_t depth, LadderConditions const& conditions, bool with_top = false);

/// Replaces V^l, V^r and chosen nodes by their default K-choices and
/// renormalises.
Network specialize_default(Network const& net);

/// Exchanges left and right in every expression and label.
Network mirror_network(Network const& net);

/// Longest-chain rank from a minimal node.  Requires a DAG.
std::vector<std::size_t> ranks(Network const& net);
std::vector<std::size_t> row_widths(Network const& net);

/// Reflexive-transitive order: leq[a][b] iff a <= b.
std::vector<std::vector<bool>> order_matrix(Network const& net);

struct LatticeReport {
  bool ok = true;
  std::string message;
  std::optional<std::pair<std::string, std::string>> offending;
};

/// DAG, transitive reduction, a unique least node, a greatest lower bound
/// for every pair, and a least upper bound for every pair that has an upper
/// bound in the network.
LatticeReport check_lattice(Network const& net);

/// Least upper bound and greatest lower bound in the poset, if unique.
std::optional<std::size_t> poset_join(Network const& net, std::size_t a, std::size_t b);
std::optional<std::size_t> poset_meet(Network const& net, std::size_t a, std::size_t b);

/// Closure of `seeds` under poset joins and meets; sorted indices.
std::vector<std::size_t> generated_sublattice(Network const& net, std::vector<std::size_t> seeds);

/// The nine elements generated by the base b, its Kl and Kr upper covers
/// l, r and their Kl resp. Kr upper covers, for block `block` of a ladder.
/// Throws std::invalid_argument if the ladder shape is missing.
std::vector<std::size_t> block_core(Network const& net, std::size_t block = 0);

/// Unlabelled-node shape model of a graded poset.
struct LadderModel {
  std::vector<std::size_t> rank;  ///< per node
  std::vector<Cover> covers;
  std::size_t size() const noexcept { return rank.size(); }
  std::vector<std::size_t> rows() const;
};

/// Reference ladder obtained by gluing copies of the block template.
LadderModel reference_ladder(std::size_t depth, bool with_top = false);

LadderModel model_of(Network const& net);

/// Rank-preserving bijection carrying covers onto covers with equal labels.
bool isomorphic(Network const& net, LadderModel const& model);
bool isomorphic(LadderModel const& a, LadderModel const& b);

struct Bindings {
  std::optional<IdentityBasis> V, Vl, Vr;
};

/// Basis for every node that can be computed from the bindings: bases
/// for the bound symbols, apply_word for operator nodes, unions for meets,
/// the empty basis for CR.  Joins, chosen nodes, V^l and V^r stay
/// symbolic (nullopt).
std::vector<std::optional<IdentityBasis>> instantiate(Network const& net, Bindings const& bindings);

}  // namespace crvar
