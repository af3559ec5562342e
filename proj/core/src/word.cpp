#include "crvar/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "crvar/errors.hpp"

namespace crvar {

YSymbol YSymbol::letter(std::string name) {
  if (name.empty()) {
    throw std::invalid_argument("empty letter name");
  }
  return YSymbol(Kind::letter, std::move(name));
}

namespace {

constexpr std::string_view kUnicodeInverse = "⁻¹";

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_index_char(char c) { return (c >= '0' && c <= '9') || c == '_'; }

void skip_space(std::string_view s, std::size_t& i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) {
    ++i;
  }
}

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Index of the "(" matching the ")^-1" at out.back(), or npos.
std::size_t matching_open(FlatWord const& out) {
  int depth = 0;
  for (std::size_t k = out.size(); k-- > 0;) {
    if (out[k].kind() == YSymbol::Kind::close_inverse) {
      ++depth;
    } else if (out[k].kind() == YSymbol::Kind::open) {
      if (--depth == 0) {
        return k;
      }
    }
  }
  return npos;
}

std::ptrdiff_t as_atom(std::size_t k) {
  return k == npos ? -1 : static_cast<std::ptrdiff_t>(k);
}

void append_zero_power(FlatWord& out, std::size_t start) {
  FlatWord atom(out.begin() + static_cast<std::ptrdiff_t>(start), out.end());
  out.push_back(YSymbol::open());
  out.insert(out.end(), atom.begin(), atom.end());
  out.push_back(YSymbol::close_inverse());
}

}  // namespace

FlatWord tokenize(std::string_view s) {
  FlatWord out;
  // start index in `out` of the most recent complete atom, or -1
  std::ptrdiff_t last_atom = -1;
  std::size_t i = 0;
  skip_space(s, i);
  while (i < s.size()) {
    char c = s[i];
    if (is_lower(c)) {
      std::size_t j = i + 1;
      while (j < s.size() && is_index_char(s[j])) {
        ++j;
      }
      last_atom = static_cast<std::ptrdiff_t>(out.size());
      out.push_back(YSymbol::letter(std::string(s.substr(i, j - i))));
      i = j;
    } else if (c == '(') {
      out.push_back(YSymbol::open());
      last_atom = -1;
      ++i;
    } else if (c == ')') {
      std::size_t at = i;
      ++i;
      skip_space(s, i);
      if (s.compare(i, 3, "^-1") == 0) {
        i += 3;
        out.push_back(YSymbol::close_inverse());
        last_atom = as_atom(matching_open(out));
      } else if (s.compare(i, kUnicodeInverse.size(), kUnicodeInverse) == 0) {
        i += kUnicodeInverse.size();
        out.push_back(YSymbol::close_inverse());
        last_atom = as_atom(matching_open(out));
      } else if (s.compare(i, 2, "^0") == 0) {
        i += 2;
        // (A)^0: drop the "(" and expand A^0
        out.push_back(YSymbol::close_inverse());
        std::size_t open = matching_open(out);
        out.pop_back();
        if (open == npos) {
          throw SyntaxError("unmatched ')'", at);
        }
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(open));
        if (open == out.size()) {
          throw SyntaxError("empty group", at);
        }
        append_zero_power(out, open);
        last_atom = static_cast<std::ptrdiff_t>(open);
      } else {
        throw SyntaxError("')' must be followed by '^-1' or '^0'", at);
      }
    } else if (c == '^') {
      if (s.compare(i, 2, "^0") != 0) {
        throw SyntaxError("expected '^0'", i);
      }
      if (last_atom < 0) {
        throw SyntaxError("'^0' without an operand", i);
      }
      i += 2;
      append_zero_power(out, static_cast<std::size_t>(last_atom));
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
    skip_space(s, i);
  }
  if (out.empty()) {
    throw SyntaxError("empty word", 0);
  }
  return out;
}

std::string to_string(FlatWord const& w) {
  std::string r;
  for (auto const& y : w) {
    switch (y.kind()) {
      case YSymbol::Kind::letter: r += y.name(); break;
      case YSymbol::Kind::open: r += '('; break;
      case YSymbol::Kind::close_inverse: r += ")^-1"; break;
    }
  }
  return r;
}

WordCheck check_word(FlatWord const& w) {
  long depth = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto k = w[i].kind();
    if (k == YSymbol::Kind::open) {
      if (i + 1 < w.size() && w[i + 1].kind() == YSymbol::Kind::close_inverse) {
        return {3, i};
      }
      ++depth;
    } else if (k == YSymbol::Kind::close_inverse) {
      if (--depth < 0) {
        return {2, i};
      }
    }
  }
  if (depth != 0) {
    return {1, w.size()};
  }
  if (w.empty()) {
    return {1, 0};
  }
  return {};
}

bool validate(FlatWord const& w) { return static_cast<bool>(check_word(w)); }

// ---------------------------------------------------------------------------
// Term

Term Term::variable(std::string name) {
  if (name.empty()) {
    throw std::invalid_argument("empty variable name");
  }
  return Term(Kind::variable, std::move(name), {});
}

Term Term::inverse(Term body) {
  std::vector<Term> c;
  c.push_back(std::move(body));
  return Term(Kind::inverse, {}, std::move(c));
}

Term Term::product(std::vector<Term> factors) {
  if (factors.empty()) {
    throw std::invalid_argument("empty product");
  }
  std::vector<Term> flat;
  flat.reserve(factors.size());
  for (auto& f : factors) {
    if (f.is_product()) {
      for (auto& g : f.children_) {
        flat.push_back(std::move(g));
      }
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.size() == 1) {
    return std::move(flat.front());
  }
  return Term(Kind::product, {}, std::move(flat));
}

Term Term::product(Term a, Term b) {
  std::vector<Term> f;
  f.reserve(2);
  f.push_back(std::move(a));
  f.push_back(std::move(b));
  return product(std::move(f));
}

std::vector<Term> Term::factors() const {
  if (is_product()) {
    return children_;
  }
  return {*this};
}

std::size_t Term::length() const {
  switch (kind_) {
    case Kind::variable: return 1;
    case Kind::inverse: return 2 + body().length();
    case Kind::product: {
      std::size_t n = 0;
      for (auto const& f : children_) {
        n += f.length();
      }
      return n;
    }
  }
  return 0;
}

std::size_t Term::depth() const {
  std::size_t d = 0;
  for (auto const& c : children_) {
    d = std::max(d, c.depth());
  }
  return d + 1;
}

bool operator==(Term const& a, Term const& b) {
  return a.kind_ == b.kind_ && a.name_ == b.name_ && a.children_ == b.children_;
}

std::strong_ordering operator<=>(Term const& a, Term const& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) {
    return c;
  }
  if (auto c = a.name_ <=> b.name_; c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(a.children_.begin(), a.children_.end(),
                                                b.children_.begin(), b.children_.end());
}

namespace {

Term parse_sequence(FlatWord const& w, std::size_t& i) {
  std::vector<Term> factors;
  while (i < w.size() && w[i].kind() != YSymbol::Kind::close_inverse) {
    if (w[i].is_letter()) {
      factors.push_back(Term::variable(w[i].name()));
      ++i;
    } else {
      ++i;  // "("
      Term inner = parse_sequence(w, i);
      ++i;  // ")^-1"
      factors.push_back(Term::inverse(std::move(inner)));
    }
  }
  return Term::product(std::move(factors));
}

void render_into(Term const& t, FlatWord& out) {
  switch (t.kind()) {
    case Term::Kind::variable: out.push_back(YSymbol::letter(t.name())); break;
    case Term::Kind::inverse:
      out.push_back(YSymbol::open());
      render_into(t.body(), out);
      out.push_back(YSymbol::close_inverse());
      break;
    case Term::Kind::product:
      for (auto const& f : t.children()) {
        render_into(f, out);
      }
      break;
  }
}

void collect_content(Term const& t, std::set<std::string>& out) {
  if (t.is_variable()) {
    out.insert(t.name());
  }
  for (auto const& c : t.children()) {
    collect_content(c, out);
  }
}

}  // namespace

Term parse(FlatWord const& w) {
  auto chk = check_word(w);
  if (!chk) {
    throw InvalidWord(chk.violated_condition, chk.position);
  }
  std::size_t i = 0;
  return parse_sequence(w, i);
}

Term parse_term(std::string_view text) { return parse(tokenize(text)); }

FlatWord render(Term const& t) {
  FlatWord out;
  render_into(t, out);
  return out;
}

std::string to_string(Term const& t) { return to_string(render(t)); }

FlatWord mirror(FlatWord const& w) {
  FlatWord r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    switch (it->kind()) {
      case YSymbol::Kind::letter: r.push_back(*it); break;
      case YSymbol::Kind::open: r.push_back(YSymbol::close_inverse()); break;
      case YSymbol::Kind::close_inverse: r.push_back(YSymbol::open()); break;
    }
  }
  return r;
}

Term mirror_term(Term const& t) {
  switch (t.kind()) {
    case Term::Kind::variable: return t;
    case Term::Kind::inverse: return Term::inverse(mirror_term(t.body()));
    case Term::Kind::product: {
      std::vector<Term> f;
      f.reserve(t.children().size());
      for (auto it = t.children().rbegin(); it != t.children().rend(); ++it) {
        f.push_back(mirror_term(*it));
      }
      return Term::product(std::move(f));
    }
  }
  return t;
}

ContentHeadTail content_head_tail(FlatWord const& w) {
  if (w.empty()) {
    throw NotPlainWord("empty word");
  }
  ContentHeadTail r;
  for (auto const& y : w) {
    if (!y.is_letter()) {
      throw NotPlainWord("word contains brackets: " + to_string(w));
    }
    r.content.insert(y.name());
  }
  r.head = w.front().name();
  r.tail = w.back().name();
  return r;
}

std::set<std::string> content(FlatWord const& w) {
  std::set<std::string> r;
  for (auto const& y : w) {
    if (y.is_letter()) {
      r.insert(y.name());
    }
  }
  return r;
}

std::set<std::string> content(Term const& t) {
  std::set<std::string> r;
  collect_content(t, r);
  return r;
}

Term zero_power(Term const& t) { return Term::product(t, Term::inverse(t)); }

FlatWord concat(FlatWord const& a, FlatWord const& b) {
  FlatWord r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace crvar
