#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "crvar/theta.hpp"
#include "crvar/variety.hpp"

namespace crvar {

/// Named varieties at the leaves of a network.  `Vup_l` and `Vup_r` are
/// the intermediate varieties V^l, V^r of the generalised ladder; `CR` is
/// the variety of all completely regular semigroups.
enum class BaseSymbol : unsigned char { V, Vl, Vr, Vup_l, Vup_r, CR };

/// Symbolic variety expression.
///
///   base    a BaseSymbol
///   upper   inner^w for an operator word w, applied left to right
///   chosen  inner^l or inner^r: a variety chosen between inner and
///           inner^Kl (resp. inner^Kr), as in the generalised ladder
///   join, meet  of two or more arguments
class NodeExpr {
 public:
  enum class Kind : unsigned char { base, upper, chosen, join, meet };

  static NodeExpr base(BaseSymbol s);
  static NodeExpr upper(NodeExpr inner, std::vector<Op> word);
  static NodeExpr chosen(NodeExpr inner, Side side);
  static NodeExpr join(std::vector<NodeExpr> args);
  static NodeExpr meet(std::vector<NodeExpr> args);

  Kind kind() const noexcept { return kind_; }
  BaseSymbol symbol() const noexcept { return symbol_; }
  std::vector<Op> const& word() const noexcept { return word_; }
  Side side() const noexcept { return side_; }
  /// The inner expression of upper and chosen; the arguments of join, meet.
  std::vector<NodeExpr> const& children() const noexcept { return children_; }
  NodeExpr const& inner() const { return children_.front(); }

  friend bool operator==(NodeExpr const&, NodeExpr const&);
  friend std::strong_ordering operator<=>(NodeExpr const&, NodeExpr const&);

 private:
  NodeExpr() = default;
  Kind kind_ = Kind::base;
  BaseSymbol symbol_ = BaseSymbol::V;
  Side side_ = Side::left;
  std::vector<Op> word_;
  std::vector<NodeExpr> children_;
};

/// Canonical text, e.g. "V", "V_l^[Kr]", "V^r^<l>", "join(V^[Kl], V_r)".
std::string to_string(NodeExpr const& e);
/// Inverse of to_string.  Throws SyntaxError.
NodeExpr parse_node_expr(std::string_view s);

struct NormalizeOptions {
  /// Allow rewriting the join of V^s and V^t (s, t alternating K-words of
  /// equal length with different heads, s ending in Kl) as the meet of
  /// V^{s Kr} and V^{t Kl}.  This identity needs V to be self-dual.
  bool self_dual_base = false;
};

/// Rewrites to a fixpoint:
///   nested upper operators are merged and repeated adjacent letters
///   collapse; nested joins (meets) are flattened; arguments subsumed by
///   another argument are dropped, using X <= X^w and X^s <= X^t for
///   alternating words over one alphabet with |s| < |t|; single-argument
///   joins and meets are unwrapped; arguments are sorted.
NodeExpr normalize(NodeExpr const& e, NormalizeOptions opts = {});

/// X <= Y is known from the rules above (reflexive).
bool known_leq(NodeExpr const& x, NodeExpr const& y);

/// Exchanges left and right everywhere: operator letters, chosen sides,
/// V_l with V_r and V^l with V^r.  Not normalised.
NodeExpr mirror_expr(NodeExpr const& e);

/// Replaces V^l, V^r by V^[Kl], V^[Kr] and X^<l>, X^<r> by X^[Kl], X^[Kr].
NodeExpr specialize_default(NodeExpr const& e);

std::string to_string(BaseSymbol s);

}  // namespace crvar
