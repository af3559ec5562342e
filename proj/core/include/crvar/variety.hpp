#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crvar/congruence.hpp"
#include "crvar/identity.hpp"
#include "crvar/table.hpp"

namespace crvar {

/// Upper operators on varieties of completely regular semigroups.
enum class Op : unsigned char { K, T, Tl, Tr, Kl, Kr };

inline constexpr Op kAllOps[] = {Op::K, Op::T, Op::Tl, Op::Tr, Op::Kl, Op::Kr};

std::string to_string(Op op);
/// Accepts "K", "T", "Tl", "Tr", "Kl", "Kr".  Throws SyntaxError.
Op parse_op(std::string_view s);
/// A word such as "KlKr", "Kl,Kr" or "Kl Kr".  Throws SyntaxError.
std::vector<Op> parse_ops(std::string_view s);
std::string to_string(std::span<Op const> ops);
/// Exchanges the left and right versions; K and T are fixed.
Op dual_op(Op op);

/// Mirror image of every identity.
IdentityBasis dual_basis(IdentityBasis const& b);

/// Lexicographically first single-letter names (then a0, b0, ...) not used
/// in `b`.
std::vector<std::string> fresh_variables(IdentityBasis const& b, std::size_t count);

// Basis schemas for the upper operators.  Each requires a content-balanced
// basis and throws ContentImbalance otherwise.  Below, a and b are fresh
// variables and w^0 stands for w(w)^-1.
//
//   K  : a u b (a v b)^-1 in E
//   T  : u^0 = v^0,  (a u b)^0 = (a v b)^0
//   Tl : a u = a u (a v)^0
//   Kl : the K schema and a u = a u (a v)^0, a v = a v (a u)^0
//   Tr, Kr : the duals of Tl, Kl
IdentityBasis op_K(IdentityBasis const& b);
IdentityBasis op_T(IdentityBasis const& b);
IdentityBasis op_Tl(IdentityBasis const& b);
IdentityBasis op_Tr(IdentityBasis const& b);
IdentityBasis op_Kl(IdentityBasis const& b);
IdentityBasis op_Kr(IdentityBasis const& b);

IdentityBasis apply_op(IdentityBasis const& b, Op op);
/// Applies the operators left to right.
IdentityBasis apply_word(IdentityBasis const& b, std::span<Op const> ops);

/// Union of the identity sets; presents the intersection of the varieties.
IdentityBasis meet(IdentityBasis const& a, IdentityBasis const& b);

bool member(UnaryCayleyTable const& s, IdentityBasis const& b);

/// The congruence whose quotient decides membership in the upper variety:
/// tau, H^0, L^0, R^0, (tau meet L)^0, (tau meet R)^0.
Congruence route_congruence(UnaryCayleyTable const& s, Op op);

/// member(quotient(s, route_congruence(s, op)), b).
bool member_via_quotient(UnaryCayleyTable const& s, IdentityBasis const& b, Op op);

/// Names of the built-in bases.
std::vector<std::string> catalog_names();
bool in_catalog(std::string_view name);
/// Throws std::out_of_range for unknown names.
IdentityBasis catalog(std::string_view name);

}  // namespace crvar
