#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crvar/identity.hpp"
#include "crvar/word.hpp"

namespace crvar {

using Element = std::uint32_t;

/// A finite semigroup with a unary operation, given by its Cayley table and
/// inverse vector.  Elements are 0, ..., order() - 1.
///
/// The constructor only checks shapes and index ranges; use is_associative
/// and is_completely_regular for the axioms.
class UnaryCayleyTable {
 public:
  UnaryCayleyTable() = default;
  UnaryCayleyTable(std::size_t order, std::vector<Element> op_row_major, std::vector<Element> inv,
                   std::string name = {});

  static UnaryCayleyTable from_rows(std::vector<std::vector<Element>> const& rows,
                                    std::vector<Element> inv, std::string name = {});

  std::size_t order() const noexcept { return n_; }
  Element mul(Element a, Element b) const noexcept { return op_[a * n_ + b]; }
  Element inv(Element a) const noexcept { return inv_[a]; }
  std::vector<Element> const& op_data() const noexcept { return op_; }
  std::vector<Element> const& inv_data() const noexcept { return inv_; }

  std::string const& name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  /// Optional display names of the elements (empty if none).
  std::vector<std::string> const& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(Element a) const;

  bool is_idempotent(Element a) const noexcept { return mul(a, a) == a; }

  /// Same order, table and inverse vector; names and labels are ignored.
  friend bool operator==(UnaryCayleyTable const& a, UnaryCayleyTable const& b) {
    return a.n_ == b.n_ && a.op_ == b.op_ && a.inv_ == b.inv_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Element> op_;
  std::vector<Element> inv_;
  std::string name_;
  std::vector<std::string> labels_;
};

using Triple = std::array<Element, 3>;

std::optional<Triple> find_nonassociative_triple(UnaryCayleyTable const& s);
bool is_associative(UnaryCayleyTable const& s);

/// First element violating a = a a' a, a'' = a or a a' = a' a.
std::optional<Element> find_non_cr_element(UnaryCayleyTable const& s);
bool is_completely_regular(UnaryCayleyTable const& s);

std::vector<Element> idempotents(UnaryCayleyTable const& s);

/// a * b = b a, same inverse.
UnaryCayleyTable dual(UnaryCayleyTable const& s);

/// Componentwise product; the pair (a, b) has index a * |t| + b.
UnaryCayleyTable direct_product(UnaryCayleyTable const& s, UnaryCayleyTable const& t);

/// Closure of `seeds` under multiplication and inversion, sorted.
std::vector<Element> subsemigroup_generated(UnaryCayleyTable const& s, std::vector<Element> const& seeds);

/// Restriction to a subset closed under multiplication and inversion,
/// renumbered in increasing order.
UnaryCayleyTable restrict_to(UnaryCayleyTable const& s, std::vector<Element> const& subset);

/// Relabels s by the permutation perm (old index -> new index).
UnaryCayleyTable permute(UnaryCayleyTable const& s, std::vector<Element> const& perm);

// ---------------------------------------------------------------------------
// Evaluation of terms

using Assignment = std::map<std::string, Element>;

/// Throws UnboundVariable if a variable of `t` is missing from `a`.
Element evaluate(UnaryCayleyTable const& s, Term const& t, Assignment const& a);

/// A term compiled against a fixed variable order, for repeated evaluation.
class CompiledTerm {
 public:
  CompiledTerm(Term const& t, std::vector<std::string> const& variables);
  Element operator()(UnaryCayleyTable const& s, Element const* values) const;

 private:
  struct Step {
    enum class Op : unsigned char { push_var, invert, multiply } op;
    std::uint32_t arg;  // variable index, or number of factors
  };
  std::vector<Step> code_;
  std::size_t max_stack_ = 0;
};

struct SatisfactionResult {
  bool holds = true;
  std::optional<Assignment> counterexample;
  explicit operator bool() const noexcept { return holds; }
};

/// Checks `id` under all assignments of its variables.
SatisfactionResult satisfies(UnaryCayleyTable const& s, Identity const& id);

/// All identities of `b`; the counterexample, if any, is for the first
/// failing identity, whose index is stored in `failed_index`.
struct BasisSatisfaction {
  bool holds = true;
  std::size_t failed_index = 0;
  std::optional<Assignment> counterexample;
  explicit operator bool() const noexcept { return holds; }
};
BasisSatisfaction satisfies(UnaryCayleyTable const& s, IdentityBasis const& b);

}  // namespace crvar
