#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "crvar/word.hpp"

namespace crvar {

/// An identity u = v between terms.  The idempotency form "w in E" is kept
/// as a flag, with lhs = w and rhs = ww.
class Identity {
 public:
  static Identity equation(Term lhs, Term rhs);
  static Identity idempotent(Term w);

  Term const& lhs() const noexcept { return lhs_; }
  Term const& rhs() const noexcept { return rhs_; }
  bool idempotency_sugar() const noexcept { return sugar_; }

  bool content_balanced() const;
  std::set<std::string> variables() const;

  friend bool operator==(Identity const&, Identity const&) = default;
  friend auto operator<=>(Identity const&, Identity const&) = default;

 private:
  Identity(Term l, Term r, bool s) : lhs_(std::move(l)), rhs_(std::move(r)), sugar_(s) {}
  Term lhs_;
  Term rhs_;
  bool sugar_;
};

/// Mirror image of both sides.
Identity mirror(Identity const& id);

/// "u = v" or "w in E".
std::string to_string(Identity const& id);
/// Inverse of to_string.  Throws SyntaxError or InvalidWord.
Identity parse_identity(std::string_view line);

/// A named finite set of identities.  Insertion order is kept for output;
/// duplicates are dropped; equality ignores order and name.
class IdentityBasis {
 public:
  IdentityBasis() = default;
  IdentityBasis(std::string name, std::vector<Identity> ids);

  std::string const& name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  std::vector<Identity> const& identities() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }

  /// Adds `id` unless already present.
  void add(Identity id);

  /// Every identity has the same content on both sides.
  bool content_balanced() const;
  std::set<std::string> variables() const;

  friend bool operator==(IdentityBasis const& a, IdentityBasis const& b);

 private:
  std::string name_;
  std::vector<Identity> ids_;
};

struct BasisParseResult {
  IdentityBasis basis;
  /// 1-based line numbers whose identity has unequal content on both sides.
  std::vector<std::size_t> imbalanced_lines;
};

/// One identity per line; blank lines and text after '#' are ignored.
/// Errors are rethrown as FormatError naming the line.
BasisParseResult parse_basis(std::string_view text, std::string name = {});
std::string to_text(IdentityBasis const& b);

}  // namespace crvar
