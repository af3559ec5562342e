#include "crvar/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "crvar/errors.hpp"

namespace crvar {

namespace {

// Renumbers arbitrary keys to first-occurrence block ids.
template <typename Key>
std::vector<std::size_t> normalise_keys(std::vector<Key> const& keys) {
  std::map<Key, std::size_t> ids;
  std::vector<std::size_t> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto [it, fresh] = ids.emplace(keys[i], ids.size());
    out[i] = it->second;
  }
  return out;
}

struct VectorHash {
  std::size_t operator()(std::vector<std::size_t> const& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

EquivalenceRelation::EquivalenceRelation(std::vector<std::size_t> block_of) {
  block_ = normalise_keys(block_of);
  num_blocks_ = block_.empty() ? 0 : *std::max_element(block_.begin(), block_.end()) + 1;
}

EquivalenceRelation EquivalenceRelation::identity(std::size_t n) {
  std::vector<std::size_t> b(n);
  std::iota(b.begin(), b.end(), 0);
  return EquivalenceRelation(std::move(b));
}

EquivalenceRelation EquivalenceRelation::universal(std::size_t n) {
  return EquivalenceRelation(std::vector<std::size_t>(n, 0));
}

EquivalenceRelation EquivalenceRelation::from_blocks(std::size_t n,
                                                     std::vector<std::vector<Element>> const& blocks) {
  std::vector<std::size_t> b(n, static_cast<std::size_t>(-1));
  std::size_t next = 0;
  for (auto const& blk : blocks) {
    for (Element a : blk) {
      if (a >= n || b[a] != static_cast<std::size_t>(-1)) {
        throw std::invalid_argument("blocks do not partition the carrier");
      }
      b[a] = next;
    }
    ++next;
  }
  for (auto& x : b) {
    if (x == static_cast<std::size_t>(-1)) {
      x = next++;
    }
  }
  return EquivalenceRelation(std::move(b));
}

std::vector<std::vector<Element>> EquivalenceRelation::blocks() const {
  std::vector<std::vector<Element>> r(num_blocks_);
  for (Element a = 0; a < block_.size(); ++a) {
    r[block_[a]].push_back(a);
  }
  return r;
}

bool EquivalenceRelation::refines(EquivalenceRelation const& other) const {
  // every block of this maps into a single block of other
  std::vector<std::size_t> image(num_blocks_, static_cast<std::size_t>(-1));
  for (std::size_t a = 0; a < block_.size(); ++a) {
    auto& im = image[block_[a]];
    if (im == static_cast<std::size_t>(-1)) {
      im = other.block_[a];
    } else if (im != other.block_[a]) {
      return false;
    }
  }
  return true;
}

EquivalenceRelation meet(EquivalenceRelation const& a, EquivalenceRelation const& b) {
  std::vector<std::pair<std::size_t, std::size_t>> keys(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    keys[i] = {a.block(static_cast<Element>(i)), b.block(static_cast<Element>(i))};
  }
  return EquivalenceRelation(normalise_keys(keys));
}

EquivalenceRelation join(EquivalenceRelation const& a, EquivalenceRelation const& b) {
  std::size_t n = a.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite_by = [&](EquivalenceRelation const& r) {
    std::vector<std::size_t> first(r.num_blocks(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < n; ++i) {
      auto& f = first[r.block(static_cast<Element>(i))];
      if (f == static_cast<std::size_t>(-1)) {
        f = i;
      } else {
        parent[find(i)] = find(f);
      }
    }
  };
  unite_by(a);
  unite_by(b);
  std::vector<std::size_t> roots(n);
  for (std::size_t i = 0; i < n; ++i) {
    roots[i] = find(i);
  }
  return EquivalenceRelation(std::move(roots));
}

std::string to_string(EquivalenceRelation const& r) {
  std::ostringstream os;
  os << '{';
  bool first_block = true;
  for (auto const& blk : r.blocks()) {
    os << (first_block ? "" : ", ") << '{';
    first_block = false;
    for (std::size_t i = 0; i < blk.size(); ++i) {
      os << (i ? "," : "") << blk[i];
    }
    os << '}';
  }
  os << '}';
  return os.str();
}

bool is_congruence(UnaryCayleyTable const& s, EquivalenceRelation const& r) {
  if (r.size() != s.order()) {
    return false;
  }
  std::size_t n = s.order();
  for (auto const& blk : r.blocks()) {
    for (std::size_t i = 1; i < blk.size(); ++i) {
      Element a = blk[0], b = blk[i];
      if (!r.related(s.inv(a), s.inv(b))) {
        return false;
      }
      for (Element c = 0; c < n; ++c) {
        if (!r.related(s.mul(c, a), s.mul(c, b)) || !r.related(s.mul(a, c), s.mul(b, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

Congruence Congruence::checked(UnaryCayleyTable const& s, EquivalenceRelation r) {
  if (!is_congruence(s, r)) {
    throw NotCongruence("relation " + to_string(r) + " is not a congruence");
  }
  return Congruence(std::move(r));
}

// ---------------------------------------------------------------------------

namespace {

// Principal ideals as sorted element lists; `left` gives S^1 a, otherwise a S^1.
std::vector<std::vector<Element>> principal_one_sided(UnaryCayleyTable const& s, bool left) {
  std::size_t n = s.order();
  std::vector<std::vector<Element>> out(n);
  for (Element a = 0; a < n; ++a) {
    std::vector<char> in(n, 0);
    in[a] = 1;
    for (Element c = 0; c < n; ++c) {
      in[left ? s.mul(c, a) : s.mul(a, c)] = 1;
    }
    for (Element x = 0; x < n; ++x) {
      if (in[x]) {
        out[a].push_back(x);
      }
    }
  }
  return out;
}

std::vector<std::vector<Element>> principal_two_sided(UnaryCayleyTable const& s) {
  std::size_t n = s.order();
  auto left = principal_one_sided(s, true);
  std::vector<std::vector<Element>> out(n);
  for (Element a = 0; a < n; ++a) {
    std::vector<char> in(n, 0);
    for (Element x : left[a]) {
      in[x] = 1;
      for (Element c = 0; c < n; ++c) {
        in[s.mul(x, c)] = 1;
      }
    }
    for (Element x = 0; x < n; ++x) {
      if (in[x]) {
        out[a].push_back(x);
      }
    }
  }
  return out;
}

}  // namespace

GreenRelations green(UnaryCayleyTable const& s) {
  GreenRelations g;
  g.L = EquivalenceRelation(normalise_keys(principal_one_sided(s, true)));
  g.R = EquivalenceRelation(normalise_keys(principal_one_sided(s, false)));
  g.H = meet(g.L, g.R);
  g.D = join(g.L, g.R);
  return g;
}

Congruence largest_congruence_within(UnaryCayleyTable const& s, EquivalenceRelation const& theta) {
  std::size_t n = s.order();
  if (theta.size() != n) {
    throw std::invalid_argument("relation size does not match the table");
  }
  EquivalenceRelation p = theta;
  std::vector<std::size_t> sig(2 * n + 2);
  while (true) {
    std::unordered_map<std::vector<std::size_t>, std::size_t, VectorHash> ids;
    std::vector<std::size_t> next(n);
    for (Element a = 0; a < n; ++a) {
      sig[0] = p.block(a);
      sig[1] = p.block(s.inv(a));
      for (Element c = 0; c < n; ++c) {
        sig[2 + c] = p.block(s.mul(c, a));
        sig[2 + n + c] = p.block(s.mul(a, c));
      }
      auto [it, fresh] = ids.emplace(sig, ids.size());
      next[a] = it->second;
    }
    EquivalenceRelation q(std::move(next));
    if (q.num_blocks() == p.num_blocks()) {
      break;
    }
    p = std::move(q);
  }
  return Congruence(std::move(p));
}

Congruence L0(UnaryCayleyTable const& s) { return largest_congruence_within(s, green(s).L); }
Congruence R0(UnaryCayleyTable const& s) { return largest_congruence_within(s, green(s).R); }
Congruence H0(UnaryCayleyTable const& s) { return largest_congruence_within(s, green(s).H); }

Congruence tau(UnaryCayleyTable const& s) {
  std::vector<std::size_t> b(s.order());
  for (Element a = 0; a < s.order(); ++a) {
    b[a] = s.is_idempotent(a) ? 0 : 1;
  }
  return largest_congruence_within(s, EquivalenceRelation(std::move(b)));
}

namespace {

EquivalenceRelation restrict_to_idempotents(EquivalenceRelation const& r, std::vector<Element> const& idem) {
  std::vector<std::size_t> b(idem.size());
  for (std::size_t i = 0; i < idem.size(); ++i) {
    b[i] = r.block(idem[i]);
  }
  return EquivalenceRelation(std::move(b));
}

}  // namespace

KernelTrace kernel_trace(UnaryCayleyTable const& s, Congruence const& rho) {
  KernelTrace kt;
  kt.idem = idempotents(s);
  auto const& r = rho.relation();
  std::vector<char> idem_block(r.num_blocks(), 0);
  for (Element e : kt.idem) {
    idem_block[r.block(e)] = 1;
  }
  for (Element a = 0; a < s.order(); ++a) {
    if (idem_block[r.block(a)]) {
      kt.kernel.push_back(a);
    }
  }
  auto g = green(s);
  kt.trace = restrict_to_idempotents(r, kt.idem);
  kt.left_trace =
      restrict_to_idempotents(largest_congruence_within(s, join(r, g.L)).relation(), kt.idem);
  kt.right_trace =
      restrict_to_idempotents(largest_congruence_within(s, join(r, g.R)).relation(), kt.idem);
  return kt;
}

RelationFlags relate(UnaryCayleyTable const& s, Congruence const& rho, Congruence const& lambda) {
  auto a = kernel_trace(s, rho);
  auto b = kernel_trace(s, lambda);
  RelationFlags f = 0;
  bool k = a.kernel == b.kernel;
  bool tl = a.left_trace == b.left_trace;
  bool tr = a.right_trace == b.right_trace;
  if (k) f |= kFlagK;
  if (tl) f |= kFlagTl;
  if (tr) f |= kFlagTr;
  if (a.trace == b.trace) f |= kFlagT;
  if (k && tl) f |= kFlagKl;
  if (k && tr) f |= kFlagKr;
  return f;
}

std::string flags_to_string(RelationFlags f) {
  static constexpr std::pair<RelationFlag, char const*> names[] = {
      {kFlagK, "K"}, {kFlagTl, "Tl"}, {kFlagTr, "Tr"}, {kFlagT, "T"}, {kFlagKl, "Kl"}, {kFlagKr, "Kr"}};
  std::string r;
  for (auto [flag, name] : names) {
    if (f & flag) {
      r += r.empty() ? "" : ",";
      r += name;
    }
  }
  return "{" + r + "}";
}

UnaryCayleyTable quotient(UnaryCayleyTable const& s, Congruence const& rho) {
  auto blocks = rho.relation().blocks();
  std::size_t m = blocks.size();
  std::vector<Element> op(m * m), inv(m);
  std::vector<std::string> labels;
  auto const& r = rho.relation();
  for (std::size_t i = 0; i < m; ++i) {
    Element a = blocks[i].front();
    inv[i] = static_cast<Element>(r.block(s.inv(a)));
    for (std::size_t j = 0; j < m; ++j) {
      op[i * m + j] = static_cast<Element>(r.block(s.mul(a, blocks[j].front())));
    }
    std::string lbl = "[";
    for (std::size_t k = 0; k < blocks[i].size(); ++k) {
      lbl += (k ? "," : "") + s.label(blocks[i][k]);
    }
    labels.push_back(lbl + "]");
  }
  UnaryCayleyTable q(m, std::move(op), std::move(inv));
  q.set_labels(std::move(labels));
  return q;
}

UnaryCayleyTable quotient(UnaryCayleyTable const& s, EquivalenceRelation const& rho) {
  return quotient(s, Congruence::checked(s, rho));
}

UnaryCayleyTable rees_quotient(UnaryCayleyTable const& s, std::vector<Element> const& ideal) {
  std::size_t n = s.order();
  std::vector<char> in(n, 0);
  for (Element a : ideal) {
    if (a >= n) {
      throw NotIdeal("element " + std::to_string(a) + " out of range");
    }
    in[a] = 1;
  }
  if (ideal.empty()) {
    throw NotIdeal("an ideal must be non-empty");
  }
  for (Element a = 0; a < n; ++a) {
    if (!in[a]) {
      continue;
    }
    for (Element c = 0; c < n; ++c) {
      if (!in[s.mul(a, c)] || !in[s.mul(c, a)]) {
        throw NotIdeal("product of " + std::to_string(a) + " and " + std::to_string(c) + " leaves the set");
      }
    }
  }
  std::vector<Element> index(n);
  std::vector<Element> outside;
  for (Element a = 0; a < n; ++a) {
    if (!in[a]) {
      index[a] = static_cast<Element>(outside.size());
      outside.push_back(a);
    }
  }
  Element zero = static_cast<Element>(outside.size());
  for (Element a = 0; a < n; ++a) {
    if (in[a]) {
      index[a] = zero;
    }
  }
  std::size_t m = outside.size() + 1;
  std::vector<Element> op(m * m, zero), inv(m, zero);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < outside.size(); ++i) {
    inv[i] = index[s.inv(outside[i])];
    for (std::size_t j = 0; j < outside.size(); ++j) {
      op[i * m + j] = index[s.mul(outside[i], outside[j])];
    }
    labels.push_back(s.label(outside[i]));
  }
  labels.push_back("0");
  UnaryCayleyTable q(m, std::move(op), std::move(inv));
  q.set_labels(std::move(labels));
  return q;
}

std::vector<Element> least_d_class(UnaryCayleyTable const& s) {
  auto ideals = principal_two_sided(s);
  auto d = green(s).D;
  for (auto const& blk : d.blocks()) {
    auto const& mine = ideals[blk.front()];
    bool least = true;
    for (Element b = 0; b < s.order() && least; ++b) {
      least = std::includes(ideals[b].begin(), ideals[b].end(), mine.begin(), mine.end());
    }
    if (least) {
      return blk;
    }
  }
  throw NoLeastDClass("the D-classes have no least element");
}

Congruence least_d_congruence(UnaryCayleyTable const& s, GreenKind p) {
  auto d = least_d_class(s);
  auto g = green(s);
  EquivalenceRelation const& rel = p == GreenKind::H ? g.H : p == GreenKind::L ? g.L : g.R;
  std::vector<char> in_d(s.order(), 0);
  for (Element a : d) {
    in_d[a] = 1;
  }
  std::vector<std::pair<std::size_t, std::size_t>> keys(s.order());
  for (Element a = 0; a < s.order(); ++a) {
    keys[a] = in_d[a] ? std::pair{std::size_t{0}, rel.block(a)} : std::pair{std::size_t{1}, std::size_t{a}};
  }
  return Congruence::checked(s, EquivalenceRelation(normalise_keys(keys)));
}

}  // namespace crvar
