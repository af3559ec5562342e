#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "crvar/word.hpp"

namespace crvar {

/// All terms reachable from `t` by one application, in either direction and
/// at one subterm position, of the schemas
///   s <-> s(s)^-1 s,   s <-> ((s)^-1)^-1,   s(s)^-1 <-> (s)^-1 s.
/// Inside a product every contiguous run of factors counts as a subterm.
/// The result is sorted and free of duplicates.
std::vector<Term> zeta_neighbors(Term const& t);

/// True iff `b` is one schema step away from `a`.
bool is_zeta_step(Term const& a, Term const& b);

/// True iff consecutive entries of `path` are one schema step apart.
bool is_zeta_path(std::vector<Term> const& path);

struct ZetaEquivalent {
  /// Starts at u, ends at v; `path.size() - 1` rewrite steps.
  std::vector<Term> path;
  std::size_t steps() const noexcept { return path.size() - 1; }
};

struct ZetaUnknown {
  std::size_t budget;
  std::size_t visited;  ///< terms examined before giving up
};

using ZetaVerdict = std::variant<ZetaEquivalent, ZetaUnknown>;

/// Upper bound on the number of distinct terms a single search may visit.
inline constexpr std::size_t kZetaVisitCap = 200000;

/// Bounded bidirectional breadth-first search for a rewrite path of at most
/// `budget` steps.  Sound but incomplete: ZetaUnknown says nothing about
/// inequivalence.  Throws std::invalid_argument if budget is 0.
ZetaVerdict zeta_equivalent(Term const& u, Term const& v, std::size_t budget);

}  // namespace crvar
