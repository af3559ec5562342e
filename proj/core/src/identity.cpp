#include "crvar/identity.hpp"

#include <algorithm>
#include <sstream>

#include "crvar/errors.hpp"

namespace crvar {

Identity Identity::equation(Term lhs, Term rhs) {
  return Identity(std::move(lhs), std::move(rhs), false);
}

Identity Identity::idempotent(Term w) {
  Term ww = Term::product(w, w);
  return Identity(std::move(w), std::move(ww), true);
}

bool Identity::content_balanced() const { return content(lhs_) == content(rhs_); }

std::set<std::string> Identity::variables() const {
  auto r = content(lhs_);
  auto s = content(rhs_);
  r.insert(s.begin(), s.end());
  return r;
}

Identity mirror(Identity const& id) {
  if (id.idempotency_sugar()) {
    return Identity::idempotent(mirror_term(id.lhs()));
  }
  return Identity::equation(mirror_term(id.lhs()), mirror_term(id.rhs()));
}

std::string to_string(Identity const& id) {
  if (id.idempotency_sugar()) {
    return to_string(id.lhs()) + " in E";
  }
  return to_string(id.lhs()) + " = " + to_string(id.rhs());
}

namespace {

std::string_view trim(std::string_view s) {
  auto const ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) {
    return {};
  }
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

Identity parse_identity(std::string_view line) {
  line = trim(line);
  if (auto eq = line.find('='); eq != std::string_view::npos) {
    auto l = trim(line.substr(0, eq));
    auto r = trim(line.substr(eq + 1));
    if (l.empty() || r.empty()) {
      throw SyntaxError("identity needs two sides", eq);
    }
    return Identity::equation(parse_term(l), parse_term(r));
  }
  constexpr std::string_view suffix = " in E";
  if (line.size() > suffix.size() && line.substr(line.size() - suffix.size()) == suffix) {
    return Identity::idempotent(parse_term(trim(line.substr(0, line.size() - suffix.size()))));
  }
  throw SyntaxError("expected 'u = v' or 'w in E'", 0);
}

IdentityBasis::IdentityBasis(std::string name, std::vector<Identity> ids) : name_(std::move(name)) {
  for (auto& id : ids) {
    add(std::move(id));
  }
}

void IdentityBasis::add(Identity id) {
  if (std::find(ids_.begin(), ids_.end(), id) == ids_.end()) {
    ids_.push_back(std::move(id));
  }
}

bool IdentityBasis::content_balanced() const {
  return std::all_of(ids_.begin(), ids_.end(), [](Identity const& i) { return i.content_balanced(); });
}

std::set<std::string> IdentityBasis::variables() const {
  std::set<std::string> r;
  for (auto const& id : ids_) {
    auto v = id.variables();
    r.insert(v.begin(), v.end());
  }
  return r;
}

bool operator==(IdentityBasis const& a, IdentityBasis const& b) {
  auto x = a.ids_;
  auto y = b.ids_;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

BasisParseResult parse_basis(std::string_view text, std::string name) {
  BasisParseResult r;
  r.basis.set_name(std::move(name));
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    try {
      auto id = parse_identity(line);
      if (!id.content_balanced()) {
        r.imbalanced_lines.push_back(line_no);
      }
      r.basis.add(std::move(id));
    } catch (Error const& e) {
      throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return r;
}

std::string to_text(IdentityBasis const& b) {
  std::ostringstream os;
  for (auto const& id : b.identities()) {
    os << to_string(id) << '\n';
  }
  return os.str();
}

}  // namespace crvar
