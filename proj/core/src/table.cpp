#include "crvar/table.hpp"

#include <algorithm>
#include <numeric>

#include "crvar/errors.hpp"

namespace crvar {

UnaryCayleyTable::UnaryCayleyTable(std::size_t order, std::vector<Element> op, std::vector<Element> inv,
                                   std::string name)
    : n_(order), op_(std::move(op)), inv_(std::move(inv)), name_(std::move(name)) {
  if (n_ == 0) {
    throw FormatError("table order must be positive");
  }
  if (op_.size() != n_ * n_) {
    throw FormatError("multiplication table must have order^2 entries");
  }
  if (inv_.size() != n_) {
    throw FormatError("inverse vector must have order entries");
  }
  for (std::size_t i = 0; i < op_.size(); ++i) {
    if (op_[i] >= n_) {
      throw FormatError("op[" + std::to_string(i / n_) + "][" + std::to_string(i % n_) + "] = "
                        + std::to_string(op_[i]) + " is out of range");
    }
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (inv_[i] >= n_) {
      throw FormatError("inv[" + std::to_string(i) + "] is out of range");
    }
  }
}

UnaryCayleyTable UnaryCayleyTable::from_rows(std::vector<std::vector<Element>> const& rows,
                                             std::vector<Element> inv, std::string name) {
  std::size_t n = rows.size();
  std::vector<Element> op;
  op.reserve(n * n);
  for (auto const& r : rows) {
    if (r.size() != n) {
      throw FormatError("multiplication table is not square");
    }
    op.insert(op.end(), r.begin(), r.end());
  }
  return UnaryCayleyTable(n, std::move(op), std::move(inv), std::move(name));
}

void UnaryCayleyTable::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_) {
    throw FormatError("label count does not match the order");
  }
  labels_ = std::move(labels);
}

std::string UnaryCayleyTable::label(Element a) const {
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

std::optional<Triple> find_nonassociative_triple(UnaryCayleyTable const& s) {
  std::size_t n = s.order();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      Element ab = s.mul(a, b);
      for (Element c = 0; c < n; ++c) {
        if (s.mul(ab, c) != s.mul(a, s.mul(b, c))) {
          return Triple{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_associative(UnaryCayleyTable const& s) { return !find_nonassociative_triple(s); }

std::optional<Element> find_non_cr_element(UnaryCayleyTable const& s) {
  for (Element a = 0; a < s.order(); ++a) {
    Element b = s.inv(a);
    if (s.mul(s.mul(a, b), a) != a || s.inv(b) != a || s.mul(a, b) != s.mul(b, a)) {
      return a;
    }
  }
  return std::nullopt;
}

bool is_completely_regular(UnaryCayleyTable const& s) { return !find_non_cr_element(s); }

std::vector<Element> idempotents(UnaryCayleyTable const& s) {
  std::vector<Element> e;
  for (Element a = 0; a < s.order(); ++a) {
    if (s.is_idempotent(a)) {
      e.push_back(a);
    }
  }
  return e;
}

UnaryCayleyTable dual(UnaryCayleyTable const& s) {
  std::size_t n = s.order();
  std::vector<Element> op(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      op[a * n + b] = s.mul(b, a);
    }
  }
  UnaryCayleyTable d(n, std::move(op), s.inv_data(), s.name().empty() ? "" : "dual(" + s.name() + ")");
  d.set_labels(s.labels());
  return d;
}

UnaryCayleyTable direct_product(UnaryCayleyTable const& s, UnaryCayleyTable const& t) {
  std::size_t m = s.order(), k = t.order(), n = m * k;
  std::vector<Element> op(n * n), inv(n);
  for (Element a = 0; a < n; ++a) {
    Element a1 = a / k, a2 = a % k;
    inv[a] = s.inv(a1) * k + t.inv(a2);
    for (Element b = 0; b < n; ++b) {
      Element b1 = b / k, b2 = b % k;
      op[a * n + b] = s.mul(a1, b1) * k + t.mul(a2, b2);
    }
  }
  std::string name;
  if (!s.name().empty() && !t.name().empty()) {
    name = s.name() + "x" + t.name();
  }
  return UnaryCayleyTable(n, std::move(op), std::move(inv), std::move(name));
}

std::vector<Element> subsemigroup_generated(UnaryCayleyTable const& s, std::vector<Element> const& seeds) {
  std::vector<char> in(s.order(), 0);
  std::vector<Element> members;
  auto add = [&](Element a) {
    if (!in[a]) {
      in[a] = 1;
      members.push_back(a);
    }
  };
  for (Element a : seeds) {
    if (a >= s.order()) {
      throw std::out_of_range("seed element out of range");
    }
    add(a);
  }
  // members grows while we scan it
  for (std::size_t i = 0; i < members.size(); ++i) {
    Element a = members[i];
    add(s.inv(a));
    for (std::size_t j = 0; j <= i; ++j) {
      Element b = members[j];
      add(s.mul(a, b));
      add(s.mul(b, a));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

UnaryCayleyTable restrict_to(UnaryCayleyTable const& s, std::vector<Element> const& subset) {
  std::vector<Element> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::int64_t> index(s.order(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    index[sorted[i]] = static_cast<std::int64_t>(i);
  }
  auto map = [&](Element a) {
    if (index[a] < 0) {
      throw std::invalid_argument("subset is not closed");
    }
    return static_cast<Element>(index[a]);
  };
  std::size_t n = sorted.size();
  std::vector<Element> op(n * n), inv(n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    inv[i] = map(s.inv(sorted[i]));
    for (std::size_t j = 0; j < n; ++j) {
      op[i * n + j] = map(s.mul(sorted[i], sorted[j]));
    }
    if (!s.labels().empty()) {
      labels.push_back(s.labels()[sorted[i]]);
    }
  }
  UnaryCayleyTable r(n, std::move(op), std::move(inv));
  r.set_labels(std::move(labels));
  return r;
}

UnaryCayleyTable permute(UnaryCayleyTable const& s, std::vector<Element> const& perm) {
  std::size_t n = s.order();
  std::vector<Element> op(n * n), inv(n);
  for (Element a = 0; a < n; ++a) {
    inv[perm[a]] = perm[s.inv(a)];
    for (Element b = 0; b < n; ++b) {
      op[perm[a] * n + perm[b]] = perm[s.mul(a, b)];
    }
  }
  return UnaryCayleyTable(n, std::move(op), std::move(inv), s.name());
}

// ---------------------------------------------------------------------------

Element evaluate(UnaryCayleyTable const& s, Term const& t, Assignment const& a) {
  switch (t.kind()) {
    case Term::Kind::variable: {
      auto it = a.find(t.name());
      if (it == a.end()) {
        throw UnboundVariable(t.name());
      }
      if (it->second >= s.order()) {
        throw std::out_of_range("assigned element out of range");
      }
      return it->second;
    }
    case Term::Kind::inverse: return s.inv(evaluate(s, t.body(), a));
    case Term::Kind::product: {
      auto const& f = t.children();
      Element r = evaluate(s, f.front(), a);
      for (std::size_t i = 1; i < f.size(); ++i) {
        r = s.mul(r, evaluate(s, f[i], a));
      }
      return r;
    }
  }
  return 0;
}

namespace {

void compile_into(Term const& t, std::vector<std::string> const& vars, auto& code, std::size_t depth,
                  std::size_t& max_depth) {
  using Step = std::remove_reference_t<decltype(code.front())>;
  max_depth = std::max(max_depth, depth + 1);
  switch (t.kind()) {
    case Term::Kind::variable: {
      auto it = std::find(vars.begin(), vars.end(), t.name());
      if (it == vars.end()) {
        throw UnboundVariable(t.name());
      }
      code.push_back(Step{Step::Op::push_var, static_cast<std::uint32_t>(it - vars.begin())});
      break;
    }
    case Term::Kind::inverse:
      compile_into(t.body(), vars, code, depth, max_depth);
      code.push_back(Step{Step::Op::invert, 0});
      break;
    case Term::Kind::product: {
      std::size_t k = 0;
      for (auto const& f : t.children()) {
        compile_into(f, vars, code, depth + k, max_depth);
        ++k;
      }
      code.push_back(Step{Step::Op::multiply, static_cast<std::uint32_t>(k)});
      break;
    }
  }
}

}  // namespace

CompiledTerm::CompiledTerm(Term const& t, std::vector<std::string> const& variables) {
  compile_into(t, variables, code_, 0, max_stack_);
}

Element CompiledTerm::operator()(UnaryCayleyTable const& s, Element const* values) const {
  // small fixed buffer covers every term the library builds
  Element local[64];
  std::vector<Element> heap;
  Element* stack = local;
  if (max_stack_ > 64) {
    heap.resize(max_stack_);
    stack = heap.data();
  }
  std::size_t sp = 0;
  for (auto const& st : code_) {
    switch (st.op) {
      case Step::Op::push_var: stack[sp++] = values[st.arg]; break;
      case Step::Op::invert: stack[sp - 1] = s.inv(stack[sp - 1]); break;
      case Step::Op::multiply: {
        std::size_t base = sp - st.arg;
        Element r = stack[base];
        for (std::size_t i = base + 1; i < sp; ++i) {
          r = s.mul(r, stack[i]);
        }
        sp = base;
        stack[sp++] = r;
        break;
      }
    }
  }
  return stack[sp - 1];
}

SatisfactionResult satisfies(UnaryCayleyTable const& s, Identity const& id) {
  auto var_set = id.variables();
  std::vector<std::string> vars(var_set.begin(), var_set.end());
  CompiledTerm lhs(id.lhs(), vars), rhs(id.rhs(), vars);
  std::size_t k = vars.size(), n = s.order();
  std::vector<Element> values(k, 0);
  while (true) {
    if (lhs(s, values.data()) != rhs(s, values.data())) {
      Assignment a;
      for (std::size_t i = 0; i < k; ++i) {
        a[vars[i]] = values[i];
      }
      return {false, std::move(a)};
    }
    std::size_t i = 0;
    while (i < k && ++values[i] == n) {
      values[i++] = 0;
    }
    if (i == k) {
      break;
    }
  }
  return {};
}

BasisSatisfaction satisfies(UnaryCayleyTable const& s, IdentityBasis const& b) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto r = satisfies(s, b.identities()[i]);
    if (!r) {
      return {false, i, std::move(r.counterexample)};
    }
  }
  return {};
}

}  // namespace crvar
