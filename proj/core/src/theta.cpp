#include "crvar/theta.hpp"

#include <stdexcept>

#include "crvar/errors.hpp"

namespace crvar {

ThetaWord::ThetaWord(std::vector<Side> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i] == letters_[i - 1]) {
      throw std::invalid_argument("theta word letters must alternate");
    }
  }
}

ThetaWord ThetaWord::alternating(Side head, std::size_t n) {
  std::vector<Side> l;
  l.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    l.push_back(i % 2 == 0 ? head : other(head));
  }
  return ThetaWord(std::move(l));
}

ThetaWord multiply(ThetaWord const& s, ThetaWord const& t) {
  std::vector<Side> l = s.letters();
  auto begin = t.letters().begin();
  if (!s.empty() && !t.empty() && s.tail() == t.head()) {
    ++begin;
  }
  l.insert(l.end(), begin, t.letters().end());
  return ThetaWord(std::move(l));
}

bool leq(ThetaWord const& s, ThetaWord const& t) { return s.size() > t.size() || s == t; }

std::vector<ThetaWord> enumerate(std::size_t n) {
  if (n == 0) {
    return {ThetaWord()};
  }
  return {ThetaWord::alternating(Side::left, n), ThetaWord::alternating(Side::right, n)};
}

ThetaWord dual_word(ThetaWord const& s) {
  std::vector<Side> l;
  for (Side x : s.letters()) {
    l.push_back(other(x));
  }
  return ThetaWord(std::move(l));
}

std::vector<Op> substitute(ThetaWord const& s, Alphabet target) {
  std::vector<Op> r;
  for (Side x : s.letters()) {
    if (target == Alphabet::K) {
      r.push_back(x == Side::left ? Op::Kl : Op::Kr);
    } else {
      r.push_back(x == Side::left ? Op::Tl : Op::Tr);
    }
  }
  return r;
}

std::string to_string(ThetaWord const& s) {
  if (s.empty()) {
    return "1";
  }
  std::string r;
  for (Side x : s.letters()) {
    r += x == Side::left ? "Tl" : "Tr";
  }
  return r;
}

ThetaWord parse_theta(std::string_view s) {
  if (s == "1" || s.empty()) {
    return ThetaWord();
  }
  std::vector<Side> l;
  for (std::size_t i = 0; i < s.size(); i += 2) {
    auto tok = s.substr(i, 2);
    if (tok == "Tl") {
      l.push_back(Side::left);
    } else if (tok == "Tr") {
      l.push_back(Side::right);
    } else {
      throw SyntaxError("expected 'Tl' or 'Tr'", i);
    }
  }
  try {
    return ThetaWord(std::move(l));
  } catch (std::invalid_argument const&) {
    throw SyntaxError("letters must alternate", 0);
  }
}

}  // namespace crvar
