#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crvar {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lexical error in the text form of a word or identity.
class SyntaxError : public Error {
 public:
  SyntaxError(std::string const& msg, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A flat word that is not a member of the free unary semigroup.
///
/// `condition()` is 1, 2 or 3: balanced bracket counts, prefix dominance,
/// or no "(" immediately followed by ")^-1".  `position()` is the symbol
/// index at which the violation was detected.
class InvalidWord : public Error {
 public:
  InvalidWord(int condition, std::size_t position);
  int condition() const noexcept { return condition_; }
  std::size_t position() const noexcept { return position_; }

 private:
  int condition_;
  std::size_t position_;
};

class NotPlainWord : public Error {
 public:
  using Error::Error;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(std::string const& name);
};

class NotCongruence : public Error {
 public:
  using Error::Error;
};

class NotIdeal : public Error {
 public:
  using Error::Error;
};

class NoLeastDClass : public Error {
 public:
  using Error::Error;
};

class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

/// Malformed table, basis or network file.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An upper-operator schema was applied to a basis whose identities do not
/// all have equal content on both sides.
class ContentImbalance : public Error {
 public:
  using Error::Error;
};

class MissingSideCondition : public Error {
 public:
  using Error::Error;
};

}  // namespace crvar
