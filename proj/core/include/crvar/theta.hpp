#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "crvar/variety.hpp"

namespace crvar {

enum class Side : unsigned char { left, right };

inline Side other(Side s) { return s == Side::left ? Side::right : Side::left; }

/// An alternating word over {Tl, Tr}, possibly empty.
class ThetaWord {
 public:
  ThetaWord() = default;
  /// Throws std::invalid_argument if two adjacent letters are equal.
  explicit ThetaWord(std::vector<Side> letters);
  /// The alternating word of length n starting with `head`.
  static ThetaWord alternating(Side head, std::size_t n);

  std::vector<Side> const& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Side head() const { return letters_.front(); }
  Side tail() const { return letters_.back(); }

  friend bool operator==(ThetaWord const&, ThetaWord const&) = default;
  friend auto operator<=>(ThetaWord const&, ThetaWord const&) = default;

 private:
  std::vector<Side> letters_;
};

/// Concatenation, dropping the first letter of `t` when it repeats the last
/// letter of `s`.
ThetaWord multiply(ThetaWord const& s, ThetaWord const& t);

/// s <= t iff s is longer than t, or s = t.
bool leq(ThetaWord const& s, ThetaWord const& t);

/// The alternating words of length n: one for n = 0, two otherwise.
std::vector<ThetaWord> enumerate(std::size_t n);

/// Exchanges Tl and Tr.
ThetaWord dual_word(ThetaWord const& s);

enum class Alphabet : unsigned char { K, T };

/// Tl, Tr become Kl, Kr (alphabet K) or stay Tl, Tr (alphabet T).
std::vector<Op> substitute(ThetaWord const& s, Alphabet target);

/// "TlTrTl"; the empty word is "1".
std::string to_string(ThetaWord const& s);
/// Inverse of to_string.  Throws SyntaxError.
ThetaWord parse_theta(std::string_view s);

}  // namespace crvar
