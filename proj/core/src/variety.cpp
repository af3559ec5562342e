#include "crvar/variety.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "crvar/errors.hpp"

namespace crvar {

std::string to_string(Op op) {
  switch (op) {
    case Op::K: return "K";
    case Op::T: return "T";
    case Op::Tl: return "Tl";
    case Op::Tr: return "Tr";
    case Op::Kl: return "Kl";
    case Op::Kr: return "Kr";
  }
  return "?";
}

Op parse_op(std::string_view s) {
  for (Op op : kAllOps) {
    if (to_string(op) == s) {
      return op;
    }
  }
  throw SyntaxError("unknown operator '" + std::string(s) + "'", 0);
}

std::vector<Op> parse_ops(std::string_view s) {
  std::vector<Op> ops;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == ',' || c == ' ') {
      ++i;
      continue;
    }
    if (c != 'K' && c != 'T') {
      throw SyntaxError("expected an operator", i);
    }
    std::size_t len = (i + 1 < s.size() && (s[i + 1] == 'l' || s[i + 1] == 'r')) ? 2 : 1;
    ops.push_back(parse_op(s.substr(i, len)));
    i += len;
  }
  return ops;
}

std::string to_string(std::span<Op const> ops) {
  std::string r;
  for (Op op : ops) {
    r += to_string(op);
  }
  return r;
}

Op dual_op(Op op) {
  switch (op) {
    case Op::Tl: return Op::Tr;
    case Op::Tr: return Op::Tl;
    case Op::Kl: return Op::Kr;
    case Op::Kr: return Op::Kl;
    default: return op;
  }
}

IdentityBasis dual_basis(IdentityBasis const& b) {
  std::vector<Identity> ids;
  for (auto const& id : b.identities()) {
    ids.push_back(mirror(id));
  }
  return IdentityBasis(b.name().empty() ? "" : "dual(" + b.name() + ")", std::move(ids));
}

std::vector<std::string> fresh_variables(IdentityBasis const& b, std::size_t count) {
  auto used = b.variables();
  std::vector<std::string> out;
  for (int round = 0; out.size() < count; ++round) {
    for (char c = 'a'; c <= 'z' && out.size() < count; ++c) {
      std::string name(1, c);
      if (round > 0) {
        name += std::to_string(round - 1);
      }
      if (used.count(name) == 0) {
        out.push_back(name);
      }
    }
  }
  return out;
}

namespace {

void require_balanced(IdentityBasis const& b, char const* op) {
  for (auto const& id : b.identities()) {
    if (!id.content_balanced()) {
      throw ContentImbalance(std::string("operator ") + op + " needs equal content on both sides; '" +
                             to_string(id) + "' is unbalanced");
    }
  }
}

std::string derived_name(IdentityBasis const& b, std::string const& op) {
  return b.name().empty() ? "" : b.name() + "^" + op;
}

Term prod(std::vector<Term> f) { return Term::product(std::move(f)); }

// a u b (a v b)^-1 in E
Identity k_schema(Term const& a, Term const& b, Identity const& id) {
  Term aub = prod({a, id.lhs(), b});
  Term avb = prod({a, id.rhs(), b});
  return Identity::idempotent(prod({aub, Term::inverse(avb)}));
}

// a u = a u (a v)^0
Identity tl_schema(Term const& a, Term const& u, Term const& v) {
  Term au = Term::product(a, u);
  Term av = Term::product(a, v);
  return Identity::equation(au, Term::product(au, zero_power(av)));
}

}  // namespace

IdentityBasis op_K(IdentityBasis const& b) {
  require_balanced(b, "K");
  auto f = fresh_variables(b, 2);
  Term x = Term::variable(f[0]), y = Term::variable(f[1]);
  IdentityBasis r(derived_name(b, "K"), {});
  for (auto const& id : b.identities()) {
    r.add(k_schema(x, y, id));
  }
  return r;
}

IdentityBasis op_T(IdentityBasis const& b) {
  require_balanced(b, "T");
  auto f = fresh_variables(b, 2);
  Term x = Term::variable(f[0]), y = Term::variable(f[1]);
  IdentityBasis r(derived_name(b, "T"), {});
  for (auto const& id : b.identities()) {
    r.add(Identity::equation(zero_power(id.lhs()), zero_power(id.rhs())));
    r.add(Identity::equation(zero_power(prod({x, id.lhs(), y})), zero_power(prod({x, id.rhs(), y}))));
  }
  return r;
}

IdentityBasis op_Tl(IdentityBasis const& b) {
  require_balanced(b, "Tl");
  Term x = Term::variable(fresh_variables(b, 1)[0]);
  IdentityBasis r(derived_name(b, "Tl"), {});
  for (auto const& id : b.identities()) {
    r.add(tl_schema(x, id.lhs(), id.rhs()));
  }
  return r;
}

IdentityBasis op_Kl(IdentityBasis const& b) {
  require_balanced(b, "Kl");
  auto f = fresh_variables(b, 2);
  Term x = Term::variable(f[0]), y = Term::variable(f[1]);
  IdentityBasis r(derived_name(b, "Kl"), {});
  for (auto const& id : b.identities()) {
    r.add(k_schema(x, y, id));
    r.add(tl_schema(x, id.lhs(), id.rhs()));
    r.add(tl_schema(x, id.rhs(), id.lhs()));
  }
  return r;
}

IdentityBasis op_Tr(IdentityBasis const& b) {
  require_balanced(b, "Tr");
  auto r = dual_basis(op_Tl(dual_basis(b)));
  r.set_name(derived_name(b, "Tr"));
  return r;
}

IdentityBasis op_Kr(IdentityBasis const& b) {
  require_balanced(b, "Kr");
  auto r = dual_basis(op_Kl(dual_basis(b)));
  r.set_name(derived_name(b, "Kr"));
  return r;
}

IdentityBasis apply_op(IdentityBasis const& b, Op op) {
  switch (op) {
    case Op::K: return op_K(b);
    case Op::T: return op_T(b);
    case Op::Tl: return op_Tl(b);
    case Op::Tr: return op_Tr(b);
    case Op::Kl: return op_Kl(b);
    case Op::Kr: return op_Kr(b);
  }
  return b;
}

IdentityBasis apply_word(IdentityBasis const& b, std::span<Op const> ops) {
  IdentityBasis r = b;
  std::string name = b.name();
  for (Op op : ops) {
    r = apply_op(r, op);
  }
  if (!name.empty() && !ops.empty()) {
    r.set_name(name + "^" + to_string(ops));
  }
  return r;
}

IdentityBasis meet(IdentityBasis const& a, IdentityBasis const& b) {
  IdentityBasis r = a;
  for (auto const& id : b.identities()) {
    r.add(id);
  }
  r.set_name(a.name().empty() || b.name().empty() ? "" : "meet(" + a.name() + ", " + b.name() + ")");
  return r;
}

bool member(UnaryCayleyTable const& s, IdentityBasis const& b) { return static_cast<bool>(satisfies(s, b)); }

Congruence route_congruence(UnaryCayleyTable const& s, Op op) {
  switch (op) {
    case Op::K: return tau(s);
    case Op::T: return H0(s);
    case Op::Tl: return L0(s);
    case Op::Tr: return R0(s);
    case Op::Kl: return largest_congruence_within(s, meet(tau(s).relation(), green(s).L));
    case Op::Kr: return largest_congruence_within(s, meet(tau(s).relation(), green(s).R));
  }
  throw std::logic_error("unknown operator");
}

bool member_via_quotient(UnaryCayleyTable const& s, IdentityBasis const& b, Op op) {
  return member(quotient(s, route_congruence(s, op)), b);
}

namespace {

std::map<std::string, std::string, std::less<>> const& catalog_text() {
  static std::map<std::string, std::string, std::less<>> const m{
      {"T", "x = y"},
      {"LZ", "xy = x"},
      {"RZ", "xy = y"},
      {"RB", "xyz = xz\nx in E"},
      {"G", "x^0 = y^0"},
      {"S", "xy = yx\nx in E"},
      {"LNB", "xyz = xzy\nx in E"},
      {"RNB", "xyz = yxz\nx in E"},
      {"NB", "axyb = ayxb\nx in E"},
      {"LRB", "xyx = xy\nx in E"},
      {"RRB", "xyx = yx\nx in E"},
      {"ReB", "xyxzx = xyzx\nx in E"},
      {"B", "x in E"},
      {"SG", "x^0y = yx^0"},
  };
  return m;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> r;
  for (auto const& [k, v] : catalog_text()) {
    r.push_back(k);
  }
  return r;
}

bool in_catalog(std::string_view name) { return catalog_text().count(name) != 0; }

IdentityBasis catalog(std::string_view name) {
  auto it = catalog_text().find(name);
  if (it == catalog_text().end()) {
    throw std::out_of_range("no catalog basis named '" + std::string(name) + "'");
  }
  return parse_basis(it->second, it->first).basis;
}

}  // namespace crvar
