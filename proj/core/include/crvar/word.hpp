#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace crvar {

/// One symbol of the alphabet Y: a letter, "(" or ")^-1".
class YSymbol {
 public:
  enum class Kind : unsigned char { letter, open, close_inverse };

  static YSymbol letter(std::string name);
  static YSymbol open() { return YSymbol(Kind::open, {}); }
  static YSymbol close_inverse() { return YSymbol(Kind::close_inverse, {}); }

  Kind kind() const noexcept { return kind_; }
  bool is_letter() const noexcept { return kind_ == Kind::letter; }
  std::string const& name() const noexcept { return name_; }

  friend bool operator==(YSymbol const&, YSymbol const&) = default;
  friend auto operator<=>(YSymbol const&, YSymbol const&) = default;

 private:
  YSymbol(Kind k, std::string n) : kind_(k), name_(std::move(n)) {}
  Kind kind_;
  std::string name_;
};

/// A word over Y.  Membership in the free unary semigroup is checked
/// separately by `validate`.
using FlatWord = std::vector<YSymbol>;

/// Reads the text form of a word.
///
/// Letters are a lowercase ASCII letter followed by optional digits or
/// underscores, so "rs" is two letters and "x1" is one.  ")^-1" may also be
/// written with the Unicode superscript ")⁻¹".  A suffix "^0" after a letter
/// or a bracketed group `A` expands to `A(A)^-1`; a group followed by "^0"
/// may be closed by a bare ")".  Whitespace is ignored.  Throws SyntaxError
/// on unknown characters; it does not check the bracket conditions.
FlatWord tokenize(std::string_view text);

/// Compact ASCII rendering, e.g. "x(yx)^-1".
std::string to_string(FlatWord const& w);

/// Result of checking the three bracket conditions.
struct WordCheck {
  int violated_condition = 0;  ///< 0 if valid, else 1, 2 or 3
  std::size_t position = 0;    ///< symbol index of the violation
  explicit operator bool() const noexcept { return violated_condition == 0; }
};

WordCheck check_word(FlatWord const& w);

/// True iff `w` is a member of the free unary semigroup: equal numbers of
/// "(" and ")^-1", every prefix has at least as many "(" as ")^-1", and "("
/// is never immediately followed by ")^-1".
bool validate(FlatWord const& w);

/// Parse tree of a word: a variable, a formal inverse, or a product of at
/// least two factors none of which is a product.
class Term {
 public:
  enum class Kind : unsigned char { variable, inverse, product };

  static Term variable(std::string name);
  static Term inverse(Term body);
  /// Flattens nested products; a single factor is returned unchanged.
  /// Throws std::invalid_argument on an empty factor list.
  static Term product(std::vector<Term> factors);
  static Term product(Term a, Term b);

  Kind kind() const noexcept { return kind_; }
  bool is_variable() const noexcept { return kind_ == Kind::variable; }
  bool is_inverse() const noexcept { return kind_ == Kind::inverse; }
  bool is_product() const noexcept { return kind_ == Kind::product; }

  /// Variable name; empty for other kinds.
  std::string const& name() const noexcept { return name_; }
  /// Body of an inverse.
  Term const& body() const { return children_.front(); }
  /// Sub-terms: the factors of a product, the body of an inverse.
  std::vector<Term> const& children() const noexcept { return children_; }
  /// Factors of a product; a non-product is its own single factor.
  std::vector<Term> factors() const;

  /// Number of symbols in the rendered flat word.
  std::size_t length() const;
  std::size_t depth() const;

  friend bool operator==(Term const&, Term const&);
  friend std::strong_ordering operator<=>(Term const&, Term const&);

 private:
  Term(Kind k, std::string n, std::vector<Term> c)
      : kind_(k), name_(std::move(n)), children_(std::move(c)) {}
  Kind kind_;
  std::string name_;
  std::vector<Term> children_;
};

/// Parses a valid flat word; throws InvalidWord otherwise.
Term parse(FlatWord const& w);
/// `parse(tokenize(text))`.
Term parse_term(std::string_view text);

FlatWord render(Term const& t);
std::string to_string(Term const& t);

/// Reverses `w` and exchanges "(" with ")^-1".
FlatWord mirror(FlatWord const& w);
/// Term-level mirror image; equals parse(mirror(render(t))).
Term mirror_term(Term const& t);

struct ContentHeadTail {
  std::set<std::string> content;
  std::string head;
  std::string tail;
};

/// For a word made of letters only; throws NotPlainWord otherwise.
ContentHeadTail content_head_tail(FlatWord const& w);
std::set<std::string> content(FlatWord const& w);
std::set<std::string> content(Term const& t);

/// t(t)^-1, flattened.
Term zero_power(Term const& t);

/// Concatenation of two flat words.
FlatWord concat(FlatWord const& a, FlatWord const& b);

}  // namespace crvar
