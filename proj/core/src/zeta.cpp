#include "crvar/zeta.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace crvar {

namespace {

using Factors = std::vector<Term>;

Term splice(Factors const& f, std::size_t i, std::size_t j, Factors const& middle) {
  Factors r;
  r.reserve(f.size() - (j - i) + middle.size());
  r.insert(r.end(), f.begin(), f.begin() + static_cast<std::ptrdiff_t>(i));
  r.insert(r.end(), middle.begin(), middle.end());
  r.insert(r.end(), f.begin() + static_cast<std::ptrdiff_t>(j), f.end());
  return Term::product(std::move(r));
}

Term range_product(Factors const& f, std::size_t i, std::size_t j) {
  return Term::product(Factors(f.begin() + static_cast<std::ptrdiff_t>(i),
                               f.begin() + static_cast<std::ptrdiff_t>(j)));
}

bool range_equals(Factors const& f, std::size_t at, Factors const& a) {
  if (at + a.size() > f.size()) {
    return false;
  }
  return std::equal(a.begin(), a.end(), f.begin() + static_cast<std::ptrdiff_t>(at));
}

void neighbors_into(Term const& t, std::vector<Term>& out) {
  out.push_back(Term::product({t, Term::inverse(t), t}));
  out.push_back(Term::inverse(Term::inverse(t)));

  if (t.is_inverse()) {
    if (t.body().is_inverse()) {
      out.push_back(t.body().body());
    }
    std::vector<Term> inner;
    neighbors_into(t.body(), inner);
    for (auto& m : inner) {
      out.push_back(Term::inverse(std::move(m)));
    }
    return;
  }
  if (!t.is_product()) {
    return;
  }

  Factors const& f = t.children();
  std::size_t const n = f.size();

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> inner;
    neighbors_into(f[i], inner);
    for (auto& m : inner) {
      out.push_back(splice(f, i, i + 1, {std::move(m)}));
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j <= n; ++j) {
      if (j - i == n) {
        continue;  // whole product, done at the root
      }
      Term s = range_product(f, i, j);
      Term s_inv = Term::inverse(s);
      out.push_back(splice(f, i, j, {s, s_inv, s}));
      out.push_back(splice(f, i, j, {Term::inverse(s_inv)}));
    }
  }

  // Reverse directions.  A is the run f[i, i+k).
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 1; i + k < n; ++k) {
      Factors a(f.begin() + static_cast<std::ptrdiff_t>(i),
                f.begin() + static_cast<std::ptrdiff_t>(i + k));
      Term a_term = Term::product(a);
      Term a_inv = Term::inverse(a_term);
      if (f[i + k] == a_inv) {
        // A (A)^-1 A -> A
        if (range_equals(f, i + k + 1, a)) {
          out.push_back(splice(f, i, i + 2 * k + 1, a));
        }
        // A (A)^-1 -> (A)^-1 A
        Factors swapped{a_inv};
        swapped.insert(swapped.end(), a.begin(), a.end());
        out.push_back(splice(f, i, i + k + 1, swapped));
      }
    }
    // (A)^-1 A -> A (A)^-1
    if (f[i].is_inverse()) {
      Factors a = f[i].body().factors();
      if (range_equals(f, i + 1, a)) {
        Factors swapped = a;
        swapped.push_back(f[i]);
        out.push_back(splice(f, i, i + 1 + a.size(), swapped));
      }
    }
  }
}

struct Visit {
  std::string parent;  // empty for the root
  Term term;
};

using SeenMap = std::unordered_map<std::string, Visit>;

void trace(SeenMap const& seen, std::string key, std::vector<Term>& out) {
  while (!key.empty()) {
    auto const& v = seen.at(key);
    out.push_back(v.term);
    key = v.parent;
  }
}

}  // namespace

std::vector<Term> zeta_neighbors(Term const& t) {
  std::vector<Term> out;
  neighbors_into(t, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_zeta_step(Term const& a, Term const& b) {
  auto n = zeta_neighbors(a);
  return std::binary_search(n.begin(), n.end(), b);
}

bool is_zeta_path(std::vector<Term> const& path) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!is_zeta_step(path[i], path[i + 1])) {
      return false;
    }
  }
  return !path.empty();
}

ZetaVerdict zeta_equivalent(Term const& u, Term const& v, std::size_t budget) {
  if (budget == 0) {
    throw std::invalid_argument("zeta budget must be positive");
  }
  if (u == v) {
    return ZetaEquivalent{{u}};
  }

  struct Side {
    SeenMap seen;
    std::vector<Term> frontier;
    std::size_t depth = 0;
  };
  Side fwd, bwd;
  fwd.seen.emplace(to_string(u), Visit{{}, u});
  fwd.frontier.push_back(u);
  bwd.seen.emplace(to_string(v), Visit{{}, v});
  bwd.frontier.push_back(v);

  auto join_paths = [&](std::string const& meet_key) {
    std::vector<Term> left, right;
    trace(fwd.seen, meet_key, left);
    trace(bwd.seen, meet_key, right);
    std::reverse(left.begin(), left.end());
    left.insert(left.end(), right.begin() + 1, right.end());
    return ZetaEquivalent{std::move(left)};
  };

  while (fwd.depth + bwd.depth < budget) {
    bool grow_fwd = fwd.frontier.size() <= bwd.frontier.size();
    Side& me = grow_fwd ? fwd : bwd;
    Side& other = grow_fwd ? bwd : fwd;
    std::vector<Term> next;
    for (auto const& t : me.frontier) {
      std::string parent = to_string(t);
      for (auto& m : zeta_neighbors(t)) {
        std::string key = to_string(m);
        if (me.seen.count(key) != 0) {
          continue;
        }
        me.seen.emplace(key, Visit{parent, m});
        if (other.seen.count(key) != 0) {
          return join_paths(key);
        }
        if (fwd.seen.size() + bwd.seen.size() > kZetaVisitCap) {
          return ZetaUnknown{budget, fwd.seen.size() + bwd.seen.size()};
        }
        next.push_back(std::move(m));
      }
    }
    me.frontier = std::move(next);
    ++me.depth;
    if (me.frontier.empty()) {
      break;
    }
  }
  return ZetaUnknown{budget, fwd.seen.size() + bwd.seen.size()};
}

}  // namespace crvar
