#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "crvar/table.hpp"

namespace crvar {

/// An equivalence relation on {0, ..., n-1}, stored as a block id per
/// element.  Block ids are normalised to first-occurrence order, so two
/// partitions are equal iff their block vectors are equal.
class EquivalenceRelation {
 public:
  EquivalenceRelation() = default;
  explicit EquivalenceRelation(std::vector<std::size_t> block_of);

  static EquivalenceRelation identity(std::size_t n);
  static EquivalenceRelation universal(std::size_t n);
  static EquivalenceRelation from_blocks(std::size_t n, std::vector<std::vector<Element>> const& blocks);

  std::size_t size() const noexcept { return block_.size(); }
  std::size_t block(Element a) const { return block_[a]; }
  std::vector<std::size_t> const& block_ids() const noexcept { return block_; }
  bool related(Element a, Element b) const { return block_[a] == block_[b]; }
  std::size_t num_blocks() const noexcept { return num_blocks_; }
  std::vector<std::vector<Element>> blocks() const;

  bool is_identity() const noexcept { return num_blocks_ == block_.size(); }
  bool is_universal() const noexcept { return num_blocks_ <= 1; }

  /// this is contained in `other`
  bool refines(EquivalenceRelation const& other) const;

  friend bool operator==(EquivalenceRelation const&, EquivalenceRelation const&) = default;

 private:
  std::vector<std::size_t> block_;
  std::size_t num_blocks_ = 0;
};

EquivalenceRelation meet(EquivalenceRelation const& a, EquivalenceRelation const& b);
/// Join in the lattice of equivalences: transitive closure of the union.
EquivalenceRelation join(EquivalenceRelation const& a, EquivalenceRelation const& b);

std::string to_string(EquivalenceRelation const& r);

bool is_congruence(UnaryCayleyTable const& s, EquivalenceRelation const& r);

/// An equivalence relation known to be compatible with multiplication and
/// inversion.
class Congruence {
 public:
  /// Throws NotCongruence if `r` is not compatible.
  static Congruence checked(UnaryCayleyTable const& s, EquivalenceRelation r);

  EquivalenceRelation const& relation() const noexcept { return rel_; }
  bool related(Element a, Element b) const { return rel_.related(a, b); }

  friend bool operator==(Congruence const&, Congruence const&) = default;

 private:
  friend Congruence largest_congruence_within(UnaryCayleyTable const&, EquivalenceRelation const&);
  explicit Congruence(EquivalenceRelation r) : rel_(std::move(r)) {}
  EquivalenceRelation rel_;
};

struct GreenRelations {
  EquivalenceRelation L, R, H, D;
};

GreenRelations green(UnaryCayleyTable const& s);

/// Greatest congruence contained in `theta`.
Congruence largest_congruence_within(UnaryCayleyTable const& s, EquivalenceRelation const& theta);

Congruence L0(UnaryCayleyTable const& s);
Congruence R0(UnaryCayleyTable const& s);
Congruence H0(UnaryCayleyTable const& s);
/// Greatest congruence within {E(S), S \ E(S)}.
Congruence tau(UnaryCayleyTable const& s);

struct KernelTrace {
  std::vector<Element> kernel;     ///< sorted
  std::vector<Element> idem;       ///< E(S), sorted
  EquivalenceRelation trace;       ///< on indices into `idem`
  EquivalenceRelation left_trace;  ///< trace of (rho v L)^0
  EquivalenceRelation right_trace; ///< trace of (rho v R)^0
};

KernelTrace kernel_trace(UnaryCayleyTable const& s, Congruence const& rho);

/// Flags of the relations K, T_l, T_r, T, K_l, K_r between two congruences.
enum RelationFlag : std::uint8_t {
  kFlagK = 1u << 0,
  kFlagTl = 1u << 1,
  kFlagTr = 1u << 2,
  kFlagT = 1u << 3,
  kFlagKl = 1u << 4,
  kFlagKr = 1u << 5,
};
using RelationFlags = std::uint8_t;
inline constexpr RelationFlags kAllRelationFlags = 0x3f;

/// K: equal kernels.  T_l, T_r: equal left and right traces.  T: equal
/// traces.  K_l = K and T_l, K_r = K and T_r.
RelationFlags relate(UnaryCayleyTable const& s, Congruence const& rho, Congruence const& lambda);
std::string flags_to_string(RelationFlags f);

/// Blocks become elements, numbered in order of their least member.
UnaryCayleyTable quotient(UnaryCayleyTable const& s, Congruence const& rho);
/// Checks compatibility first; throws NotCongruence.
UnaryCayleyTable quotient(UnaryCayleyTable const& s, EquivalenceRelation const& rho);

/// Elements of S \ I keep their relative order; the zero is last.
/// Throws NotIdeal.
UnaryCayleyTable rees_quotient(UnaryCayleyTable const& s, std::vector<Element> const& ideal);

/// D-classes ordered by principal two-sided ideals.  Returns the least
/// D-class, or throws NoLeastDClass.  (A finite semigroup always has one,
/// its minimal ideal; the check is kept for tables that are not
/// associative.)
std::vector<Element> least_d_class(UnaryCayleyTable const& s);

enum class GreenKind { H, L, R };

/// Equality outside the least D-class D, and the restriction of the given
/// Green relation inside D.  Throws NoLeastDClass, or NotCongruence if the
/// construction fails to be compatible.
Congruence least_d_congruence(UnaryCayleyTable const& s, GreenKind p);

}  // namespace crvar
