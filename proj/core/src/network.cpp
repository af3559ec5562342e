#include "crvar/network.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

#include "crvar/errors.hpp"
#include "crvar/theta.hpp"
#include "crvar/variety.hpp"

namespace crvar {

std::string to_string(EdgeLabel l) {
  switch (l) {
    case EdgeLabel::Kl: return "Kl";
    case EdgeLabel::Kr: return "Kr";
    case EdgeLabel::Tl: return "Tl";
    case EdgeLabel::Tr: return "Tr";
    case EdgeLabel::plain: return "plain";
    case EdgeLabel::cross: return "cross";
  }
  return "?";
}

EdgeLabel parse_edge_label(std::string_view s) {
  for (auto l : {EdgeLabel::Kl, EdgeLabel::Kr, EdgeLabel::Tl, EdgeLabel::Tr, EdgeLabel::plain, EdgeLabel::cross}) {
    if (s == to_string(l)) {
      return l;
    }
  }
  throw FormatError("unknown edge label '" + std::string(s) + "'");
}

EdgeLabel mirror_label(EdgeLabel l) {
  switch (l) {
    case EdgeLabel::Kl: return EdgeLabel::Kr;
    case EdgeLabel::Kr: return EdgeLabel::Kl;
    case EdgeLabel::Tl: return EdgeLabel::Tr;
    case EdgeLabel::Tr: return EdgeLabel::Tl;
    default: return l;
  }
}

std::string to_string(NetworkKind k) {
  switch (k) {
    case NetworkKind::K: return "K";
    case NetworkKind::T: return "T";
    case NetworkKind::combined: return "combined";
    case NetworkKind::ladder: return "ladder";
    case NetworkKind::ladder_general: return "ladder-general";
  }
  return "?";
}

NetworkKind parse_network_kind(std::string_view s) {
  for (auto k : {NetworkKind::K, NetworkKind::T, NetworkKind::combined, NetworkKind::ladder,
                 NetworkKind::ladder_general}) {
    if (s == to_string(k)) {
      return k;
    }
  }
  throw FormatError("unknown network kind '" + std::string(s) + "'");
}

std::optional<std::size_t> Network::find(std::string_view id) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id == id) {
      return i;
    }
  }
  return std::nullopt;
}

std::size_t Network::add_node(NodeExpr expr, std::string id_prefix, std::vector<std::string> notes) {
  std::string id = id_prefix + to_string(expr);
  if (auto i = find(id)) {
    return *i;
  }
  nodes.push_back(NetworkNode{std::move(id), std::move(expr), std::move(notes)});
  return nodes.size() - 1;
}

void Network::add_cover(std::size_t lower, std::size_t upper, EdgeLabel label) {
  if (lower >= nodes.size() || upper >= nodes.size()) {
    throw std::out_of_range("cover endpoint out of range");
  }
  covers.push_back(Cover{lower, upper, label});
}

std::vector<std::size_t> Network::lower_covers(std::size_t v) const {
  std::vector<std::size_t> r;
  for (auto const& c : covers) {
    if (c.upper == v) r.push_back(c.lower);
  }
  return r;
}

std::vector<std::size_t> Network::upper_covers(std::size_t v) const {
  std::vector<std::size_t> r;
  for (auto const& c : covers) {
    if (c.lower == v) r.push_back(c.upper);
  }
  return r;
}

bool same_network(Network const& a, Network const& b) {
  if (!(a.meta == b.meta) || a.nodes.size() != b.nodes.size() || a.covers.size() != b.covers.size()) {
    return false;
  }
  std::map<std::string, NodeExpr const*> na;
  for (auto const& n : a.nodes) {
    na.emplace(n.id, &n.expr);
  }
  for (auto const& n : b.nodes) {
    auto it = na.find(n.id);
    if (it == na.end() || !(*it->second == n.expr)) {
      return false;
    }
  }
  using Key = std::tuple<std::string, std::string, EdgeLabel>;
  auto keys = [](Network const& n) {
    std::vector<Key> k;
    for (auto const& c : n.covers) {
      k.emplace_back(n.nodes[c.lower].id, n.nodes[c.upper].id, c.label);
    }
    std::sort(k.begin(), k.end());
    return k;
  };
  return keys(a) == keys(b);
}

namespace {

NodeExpr V() { return NodeExpr::base(BaseSymbol::V); }

NodeExpr up(NodeExpr e, std::vector<Op> w) { return NodeExpr::upper(std::move(e), std::move(w)); }

// Alternating word of length k ending in the given side.
std::vector<Op> word_ending(Side tail, std::size_t k, Alphabet a) {
  Side head = k % 2 == 1 ? tail : other(tail);
  return substitute(ThetaWord::alternating(head, k), a);
}

void require_depth(std::size_t depth) {
  if (depth == 0) {
    throw std::invalid_argument("depth must be at least 1");
  }
}

}  // namespace

Network gen_K_network(std::size_t depth, bool with_top) {
  require_depth(depth);
  Network net;
  net.meta = {NetworkKind::K, depth, with_top};
  NormalizeOptions sd{true};
  auto node = [&](NodeExpr e, std::vector<std::string> notes = {}) {
    return net.add_node(normalize(e, sd), "", std::move(notes));
  };
  std::size_t below = node(V());
  for (std::size_t k = 1; k <= depth; ++k) {
    auto lw = word_ending(Side::left, k, Alphabet::K);
    auto rw = word_ending(Side::right, k, Alphabet::K);
    std::size_t l = node(up(V(), lw));
    std::size_t r = node(up(V(), rw));
    net.add_cover(below, l, EdgeLabel::Kl);
    net.add_cover(below, r, EdgeLabel::Kr);
    std::string shown = to_string(NodeExpr::join({up(V(), lw), up(V(), rw)}));
    std::size_t c = node(NodeExpr::join({up(V(), lw), up(V(), rw)}),
                         {"equals " + shown, "join rewritten as a meet for a self-dual base"});
    net.add_cover(l, c, EdgeLabel::Kr);
    net.add_cover(r, c, EdgeLabel::Kl);
    below = c;
  }
  if (with_top) {
    net.add_cover(below, node(up(V(), {Op::K})), EdgeLabel::plain);
  }
  return net;
}

Network gen_T_network(std::size_t depth, bool with_top) {
  require_depth(depth);
  Network net;
  net.meta = {NetworkKind::T, depth, with_top};
  auto node = [&](NodeExpr e, std::vector<std::string> notes = {}) {
    return net.add_node(normalize(e), "", std::move(notes));
  };
  std::size_t v = node(V());
  std::size_t below = node(up(V(), {Op::T}));
  net.add_cover(v, below, EdgeLabel::plain);
  for (std::size_t k = 1; k <= depth; ++k) {
    auto lw = word_ending(Side::left, k, Alphabet::T);
    auto rw = word_ending(Side::right, k, Alphabet::T);
    std::size_t l = node(up(V(), lw));
    std::size_t r = node(up(V(), rw));
    net.add_cover(below, l, EdgeLabel::Tl);
    net.add_cover(below, r, EdgeLabel::Tr);
    std::size_t j = node(NodeExpr::join({up(V(), lw), up(V(), rw)}), {"may coincide with the meet above it"});
    net.add_cover(l, j, EdgeLabel::Tr);
    net.add_cover(r, j, EdgeLabel::Tl);
    auto lw2 = lw;
    lw2.push_back(Op::Tr);
    auto rw2 = rw;
    rw2.push_back(Op::Tl);
    std::size_t m = node(NodeExpr::meet({up(V(), lw2), up(V(), rw2)}), {"equals the T-image of the join below it"});
    net.add_cover(j, m, EdgeLabel::plain);
    below = m;
  }
  if (with_top) {
    net.add_cover(below, node(NodeExpr::base(BaseSymbol::CR)), EdgeLabel::plain);
  }
  return net;
}

Network gen_combined(std::size_t depth, bool with_top) {
  Network k = gen_K_network(depth, with_top);
  Network t = gen_T_network(depth, with_top);
  Network net;
  net.meta = {NetworkKind::combined, depth, with_top};
  auto copy = [&net](Network const& part, std::string const& prefix) {
    std::vector<std::size_t> map;
    for (auto const& n : part.nodes) {
      map.push_back(net.add_node(n.expr, prefix, n.notes));
    }
    for (auto const& c : part.covers) {
      net.add_cover(map[c.lower], map[c.upper], c.label);
    }
  };
  copy(k, "K|");
  copy(t, "T|");
  for (std::size_t len = 1; len <= depth; ++len) {
    for (Side head : {Side::left, Side::right}) {
      auto w = ThetaWord::alternating(head, len);
      auto from = net.find("K|" + to_string(normalize(up(V(), substitute(w, Alphabet::K)))));
      auto to = net.find("T|" + to_string(normalize(up(V(), substitute(w, Alphabet::T)))));
      net.add_cover(*from, *to, EdgeLabel::cross);
    }
  }
  return net;
}

namespace {

// Bottom of the chain of `label` lower covers starting at v.
std::size_t chain_bottom(Network const& net, std::size_t v, EdgeLabel label) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (auto const& c : net.covers) {
      if (c.upper == v && c.label == label) {
        v = c.lower;
        moved = true;
        break;
      }
    }
  }
  return v;
}

Network build_ladder(std::size_t depth, bool general, bool with_top) {
  require_depth(depth);
  Network net;
  net.meta = {general ? NetworkKind::ladder_general : NetworkKind::ladder, depth, with_top};
  auto node = [&](NodeExpr e, std::vector<std::string> notes = {}) {
    return net.add_node(normalize(e), "", std::move(notes));
  };
  auto ex = [&](std::size_t i) { return net.nodes[i].expr; };
  auto cover = [&](std::size_t a, std::size_t b, EdgeLabel l) { net.add_cover(a, b, l); };

  std::size_t b = node(V());
  std::size_t l = node(NodeExpr::base(BaseSymbol::Vl), {"V < V_l < V^[Kl]"});
  std::size_t r = node(NodeExpr::base(BaseSymbol::Vr), {"V < V_r < V^[Kr]"});
  std::size_t ul, ur;
  if (general) {
    ul = node(NodeExpr::base(BaseSymbol::Vup_l), {"V_l < V^l <= V^[Kl]", "(V^l)_Kr = V^l"});
    ur = node(NodeExpr::base(BaseSymbol::Vup_r), {"V_r < V^r <= V^[Kr]", "(V^r)_Kl = V^r"});
  } else {
    ul = node(up(V(), {Op::Kl}));
    ur = node(up(V(), {Op::Kr}));
  }
  std::size_t c = node(NodeExpr::join({ex(l), ex(r)}));
  cover(b, l, EdgeLabel::Kl);
  cover(b, r, EdgeLabel::Kr);
  cover(l, ul, EdgeLabel::Kl);
  cover(l, c, EdgeLabel::Kr);
  cover(r, c, EdgeLabel::Kl);
  cover(r, ur, EdgeLabel::Kr);

  for (std::size_t block = 0; block < depth; ++block) {
    std::size_t x = node(NodeExpr::join({ex(ul), ex(r)}));
    std::size_t y = node(NodeExpr::join({ex(l), ex(ur)}));
    cover(ul, x, EdgeLabel::Kr);
    cover(c, x, EdgeLabel::Kl);
    cover(c, y, EdgeLabel::Kr);
    cover(ur, y, EdgeLabel::Kl);
    // nodes joined by Kl covers share one Kl-image
    NodeExpr left_base = ex(chain_bottom(net, x, EdgeLabel::Kl));
    NodeExpr right_base = ex(chain_bottom(net, y, EdgeLabel::Kr));
    std::size_t ul2, ur2;
    if (general) {
      NodeExpr lc = NodeExpr::chosen(left_base, Side::left);
      NodeExpr rc = NodeExpr::chosen(right_base, Side::right);
      ul2 = node(lc, {to_string(ex(x)) + " < " + to_string(lc) + " <= " + to_string(normalize(up(left_base, {Op::Kl}))),
                      "(" + to_string(lc) + ")_Kr = " + to_string(lc)});
      ur2 = node(rc, {to_string(ex(y)) + " < " + to_string(rc) + " <= " + to_string(normalize(up(right_base, {Op::Kr}))),
                      "(" + to_string(rc) + ")_Kl = " + to_string(rc)});
    } else {
      ul2 = node(up(left_base, {Op::Kl}));
      ur2 = node(up(right_base, {Op::Kr}));
    }
    std::size_t c2 = node(NodeExpr::join({ex(ul), ex(ur)}));
    cover(x, ul2, EdgeLabel::Kl);
    cover(x, c2, EdgeLabel::Kr);
    cover(y, c2, EdgeLabel::Kl);
    cover(y, ur2, EdgeLabel::Kr);
    b = c;
    l = x;
    r = y;
    ul = ul2;
    c = c2;
    ur = ur2;
  }
  (void)b;
  if (with_top) {
    std::size_t top = node(up(V(), {Op::K}));
    for (std::size_t v : {ul, c, ur}) {
      cover(v, top, EdgeLabel::plain);
    }
  }
  return net;
}

}  // namespace

Network gen_ladder(std::size_t depth, bool with_top) { return build_ladder(depth, false, with_top); }

Network gen_ladder_general(std::size_t depth, LadderConditions const& cond, bool with_top) {
  std::vector<std::string> missing;
  if (!cond.chain_left) missing.push_back("V < V_l < V^l <= V^[Kl]");
  if (!cond.chain_right) missing.push_back("V < V_r < V^r <= V^[Kr]");
  if (!cond.upper_left_closed) missing.push_back("(V^l)_Kr = V^l");
  if (!cond.upper_right_closed) missing.push_back("(V^r)_Kl = V^r");
  if (!missing.empty()) {
    std::string msg = "missing side condition";
    for (std::size_t i = 0; i < missing.size(); ++i) {
      msg += (i ? "; " : ": ") + missing[i];
    }
    throw MissingSideCondition(msg);
  }
  return build_ladder(depth, true, with_top);
}

namespace {

std::string id_prefix(NetworkNode const& n) {
  std::string plain = to_string(n.expr);
  return n.id.size() > plain.size() ? n.id.substr(0, n.id.size() - plain.size()) : std::string{};
}

Network rebuild(Network const& net, std::function<NodeExpr(NodeExpr const&)> const& f,
                std::function<EdgeLabel(EdgeLabel)> const& g) {
  Network out;
  out.meta = net.meta;
  for (auto const& n : net.nodes) {
    NodeExpr e = f(n.expr);
    std::string id = id_prefix(n) + to_string(e);
    out.nodes.push_back(NetworkNode{std::move(id), std::move(e), n.notes});
  }
  for (auto const& c : net.covers) {
    out.covers.push_back(Cover{c.lower, c.upper, g(c.label)});
  }
  return out;
}

NormalizeOptions options_for(NetworkNode const& n, NetworkKind k) {
  return NormalizeOptions{k == NetworkKind::K || (k == NetworkKind::combined && n.id.rfind("K|", 0) == 0)};
}

}  // namespace

Network specialize_default(Network const& net) {
  Network out = rebuild(
      net, [](NodeExpr const& e) { return specialize_default(e); }, [](EdgeLabel l) { return l; });
  for (std::size_t i = 0; i < out.nodes.size(); ++i) {
    auto& n = out.nodes[i];
    std::string prefix = id_prefix(net.nodes[i]);
    n.expr = normalize(n.expr, options_for(net.nodes[i], net.meta.kind));
    n.id = prefix + to_string(n.expr);
  }
  if (out.meta.kind == NetworkKind::ladder_general) {
    out.meta.kind = NetworkKind::ladder;
  }
  return out;
}

Network mirror_network(Network const& net) {
  Network out = rebuild(net, [](NodeExpr const& e) { return mirror_expr(e); }, mirror_label);
  for (std::size_t i = 0; i < out.nodes.size(); ++i) {
    auto& n = out.nodes[i];
    n.expr = normalize(n.expr, options_for(net.nodes[i], net.meta.kind));
    n.id = id_prefix(net.nodes[i]) + to_string(n.expr);
  }
  return out;
}

std::vector<std::size_t> ranks(Network const& net) {
  std::size_t n = net.nodes.size();
  std::vector<std::size_t> indeg(n, 0), rank(n, 0);
  for (auto const& c : net.covers) {
    ++indeg[c.upper];
  }
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    if (indeg[i] == 0) queue.push_back(i);
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::size_t v = queue[qi];
    for (auto const& c : net.covers) {
      if (c.lower != v) continue;
      rank[c.upper] = std::max(rank[c.upper], rank[v] + 1);
      if (--indeg[c.upper] == 0) queue.push_back(c.upper);
    }
  }
  if (queue.size() != n) {
    throw std::invalid_argument("cover graph has a cycle");
  }
  return rank;
}

namespace {

std::vector<std::size_t> widths_of(std::vector<std::size_t> const& rank) {
  std::vector<std::size_t> w;
  for (std::size_t r : rank) {
    if (r >= w.size()) w.resize(r + 1, 0);
    ++w[r];
  }
  return w;
}

}  // namespace

std::vector<std::size_t> row_widths(Network const& net) { return widths_of(ranks(net)); }

std::vector<std::vector<bool>> order_matrix(Network const& net) {
  std::size_t n = net.nodes.size();
  std::vector<std::vector<std::size_t>> up(n);
  for (auto const& c : net.covers) {
    up[c.lower].push_back(c.upper);
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    leq[s][s] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : up[v]) {
        if (!leq[s][w]) {
          leq[s][w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return leq;
}

namespace {

std::optional<std::size_t> extremum(std::vector<std::size_t> const& set, std::vector<std::vector<bool>> const& leq,
                                    bool greatest) {
  for (std::size_t g : set) {
    bool ok = std::all_of(set.begin(), set.end(), [&](std::size_t z) { return greatest ? leq[z][g] : leq[g][z]; });
    if (ok) return g;
  }
  return std::nullopt;
}

std::vector<std::size_t> common_bounds(std::vector<std::vector<bool>> const& leq, std::size_t a, std::size_t b,
                                       bool upper) {
  std::vector<std::size_t> r;
  for (std::size_t z = 0; z < leq.size(); ++z) {
    if (upper ? (leq[a][z] && leq[b][z]) : (leq[z][a] && leq[z][b])) r.push_back(z);
  }
  return r;
}

}  // namespace

std::optional<std::size_t> poset_join(Network const& net, std::size_t a, std::size_t b) {
  auto leq = order_matrix(net);
  return extremum(common_bounds(leq, a, b, true), leq, false);
}

std::optional<std::size_t> poset_meet(Network const& net, std::size_t a, std::size_t b) {
  auto leq = order_matrix(net);
  return extremum(common_bounds(leq, a, b, false), leq, true);
}

LatticeReport check_lattice(Network const& net) {
  LatticeReport rep;
  auto fail = [&](std::string msg, std::size_t a, std::size_t b) {
    rep.ok = false;
    rep.message = std::move(msg);
    rep.offending = std::make_pair(net.nodes[a].id, net.nodes[b].id);
    return rep;
  };
  if (net.nodes.empty()) {
    rep.ok = false;
    rep.message = "empty network";
    return rep;
  }
  try {
    ranks(net);
  } catch (std::invalid_argument const&) {
    rep.ok = false;
    rep.message = "cover graph has a cycle";
    return rep;
  }
  auto leq = order_matrix(net);
  for (std::size_t i = 0; i < net.covers.size(); ++i) {
    auto const& c = net.covers[i];
    for (std::size_t j = 0; j < net.covers.size(); ++j) {
      auto const& d = net.covers[j];
      if (j == i || d.lower != c.lower) continue;
      if (d.upper == c.upper) {
        return fail("duplicate cover", c.lower, c.upper);
      }
      if (leq[d.upper][c.upper]) {
        return fail("cover is implied by a longer chain", c.lower, c.upper);
      }
    }
  }
  std::vector<std::size_t> minimal;
  for (std::size_t v = 0; v < net.nodes.size(); ++v) {
    if (net.lower_covers(v).empty()) minimal.push_back(v);
  }
  if (minimal.size() > 1) {
    return fail("more than one minimal element", minimal[0], minimal[1]);
  }
  std::size_t n = net.nodes.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!extremum(common_bounds(leq, a, b, false), leq, true)) {
        return fail("no greatest lower bound", a, b);
      }
      auto ub = common_bounds(leq, a, b, true);
      if (!ub.empty() && !extremum(ub, leq, false)) {
        return fail("no least upper bound", a, b);
      }
    }
  }
  return rep;
}

std::vector<std::size_t> generated_sublattice(Network const& net, std::vector<std::size_t> seeds) {
  auto leq = order_matrix(net);
  std::vector<bool> in(net.nodes.size(), false);
  std::vector<std::size_t> members;
  auto add = [&](std::size_t v) {
    if (!in[v]) {
      in[v] = true;
      members.push_back(v);
    }
  };
  for (std::size_t s : seeds) add(s);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::size_t a = members[i], b = members[j];
      if (auto m = extremum(common_bounds(leq, a, b, false), leq, true)) add(*m);
      if (auto m = extremum(common_bounds(leq, a, b, true), leq, false)) add(*m);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::size_t> block_core(Network const& net, std::size_t block) {
  auto labelled_up = [&](std::size_t v, EdgeLabel l) {
    for (auto const& c : net.covers) {
      if (c.lower == v && c.label == l) return c.upper;
    }
    throw std::invalid_argument("network does not have the ladder shape");
  };
  std::optional<std::size_t> bottom;
  for (std::size_t v = 0; v < net.nodes.size(); ++v) {
    if (net.lower_covers(v).empty()) {
      bottom = v;
      break;
    }
  }
  if (!bottom) {
    throw std::invalid_argument("network has no minimal node");
  }
  std::size_t b = *bottom;
  for (std::size_t i = 0;; ++i) {
    std::size_t l = labelled_up(b, EdgeLabel::Kl), r = labelled_up(b, EdgeLabel::Kr);
    std::size_t ul = labelled_up(l, EdgeLabel::Kl), ur = labelled_up(r, EdgeLabel::Kr);
    if (i == block) {
      return generated_sublattice(net, {b, l, r, ul, ur});
    }
    auto c = poset_join(net, l, r);
    if (!c) {
      throw std::invalid_argument("network does not have the ladder shape");
    }
    b = *c;
  }
}

std::vector<std::size_t> LadderModel::rows() const { return widths_of(rank); }

LadderModel reference_ladder(std::size_t depth, bool with_top) {
  require_depth(depth);
  LadderModel m;
  auto add = [&m](std::size_t r) {
    m.rank.push_back(r);
    return m.rank.size() - 1;
  };
  auto cover = [&m](std::size_t a, std::size_t b, EdgeLabel l) { m.covers.push_back(Cover{a, b, l}); };
  std::size_t b = add(0), l = add(1), r = add(1), ul = add(2), c = add(2), ur = add(2);
  cover(b, l, EdgeLabel::Kl);
  cover(b, r, EdgeLabel::Kr);
  cover(l, ul, EdgeLabel::Kl);
  cover(l, c, EdgeLabel::Kr);
  cover(r, c, EdgeLabel::Kl);
  cover(r, ur, EdgeLabel::Kr);
  std::size_t top_rank = 2;
  for (std::size_t block = 0; block < depth; ++block) {
    std::size_t base = m.rank[c];
    std::size_t x = add(base + 1), y = add(base + 1);
    std::size_t ul2 = add(base + 2), c2 = add(base + 2), ur2 = add(base + 2);
    cover(ul, x, EdgeLabel::Kr);
    cover(c, x, EdgeLabel::Kl);
    cover(c, y, EdgeLabel::Kr);
    cover(ur, y, EdgeLabel::Kl);
    cover(x, ul2, EdgeLabel::Kl);
    cover(x, c2, EdgeLabel::Kr);
    cover(y, c2, EdgeLabel::Kl);
    cover(y, ur2, EdgeLabel::Kr);
    l = x;
    r = y;
    ul = ul2;
    c = c2;
    ur = ur2;
    top_rank = base + 2;
  }
  (void)l;
  (void)r;
  if (with_top) {
    std::size_t t = add(top_rank + 1);
    for (std::size_t v : {ul, c, ur}) cover(v, t, EdgeLabel::plain);
  }
  return m;
}

LadderModel model_of(Network const& net) { return LadderModel{ranks(net), net.covers}; }

bool isomorphic(LadderModel const& a, LadderModel const& b) {
  std::size_t n = a.size();
  if (n != b.size() || a.covers.size() != b.covers.size() || a.rows() != b.rows()) {
    return false;
  }
  std::vector<std::vector<int>> lb(n, std::vector<int>(n, -1));
  for (auto const& c : b.covers) {
    lb[c.lower][c.upper] = static_cast<int>(c.label);
  }
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(n);  // neighbours in a, as (node, signed label)
  for (auto const& c : a.covers) {
    adj[c.upper].push_back({c.lower, static_cast<int>(c.label)});
    adj[c.lower].push_back({c.upper, -1 - static_cast<int>(c.label)});
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a.rank[x] < a.rank[y]; });
  std::vector<std::size_t> map(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t k) {
    if (k == n) return true;
    std::size_t v = order[k];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || b.rank[w] != a.rank[v]) continue;
      bool ok = true;
      for (auto const& [u, sl] : adj[v]) {
        if (map[u] == n) continue;
        ok = sl >= 0 ? lb[map[u]][w] == sl : lb[w][map[u]] == -1 - sl;
        if (!ok) break;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (extend(k + 1)) return true;
      map[v] = n;
      used[w] = false;
    }
    return false;
  };
  return extend(0);
}

bool isomorphic(Network const& net, LadderModel const& model) {
  try {
    return isomorphic(model_of(net), model);
  } catch (std::invalid_argument const&) {
    return false;
  }
}

std::vector<std::optional<IdentityBasis>> instantiate(Network const& net, Bindings const& bindings) {
  std::map<std::string, std::optional<IdentityBasis>> cache;
  std::function<std::optional<IdentityBasis>(NodeExpr const&)> eval = [&](NodeExpr const& e)
      -> std::optional<IdentityBasis> {
    std::string key = to_string(e);
    if (auto it = cache.find(key); it != cache.end()) {
      return it->second;
    }
    std::optional<IdentityBasis> r;
    switch (e.kind()) {
      case NodeExpr::Kind::base:
        switch (e.symbol()) {
          case BaseSymbol::V: r = bindings.V; break;
          case BaseSymbol::Vl: r = bindings.Vl; break;
          case BaseSymbol::Vr: r = bindings.Vr; break;
          case BaseSymbol::CR: r = IdentityBasis("CR", {}); break;
          default: break;
        }
        break;
      case NodeExpr::Kind::upper:
        if (auto inner = eval(e.inner())) {
          r = apply_word(*inner, e.word());
        }
        break;
      case NodeExpr::Kind::meet: {
        IdentityBasis acc;
        bool all = true;
        for (std::size_t i = 0; i < e.children().size() && all; ++i) {
          auto c = eval(e.children()[i]);
          if (!c) {
            all = false;
          } else {
            acc = i == 0 ? *c : meet(acc, *c);
          }
        }
        if (all) r = std::move(acc);
        break;
      }
      case NodeExpr::Kind::join:
      case NodeExpr::Kind::chosen: break;
    }
    cache.emplace(key, r);
    return r;
  };
  std::vector<std::optional<IdentityBasis>> out;
  for (auto const& n : net.nodes) {
    out.push_back(eval(n.expr));
  }
  return out;
}

}  // namespace crvar
