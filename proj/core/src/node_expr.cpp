#include "crvar/node_expr.hpp"

#include <algorithm>
#include <stdexcept>

#include "crvar/errors.hpp"

namespace crvar {

NodeExpr NodeExpr::base(BaseSymbol s) {
  NodeExpr e;
  e.kind_ = Kind::base;
  e.symbol_ = s;
  return e;
}

NodeExpr NodeExpr::upper(NodeExpr inner, std::vector<Op> word) {
  NodeExpr e;
  e.kind_ = Kind::upper;
  e.word_ = std::move(word);
  e.children_.push_back(std::move(inner));
  return e;
}

NodeExpr NodeExpr::chosen(NodeExpr inner, Side side) {
  NodeExpr e;
  e.kind_ = Kind::chosen;
  e.side_ = side;
  e.children_.push_back(std::move(inner));
  return e;
}

NodeExpr NodeExpr::join(std::vector<NodeExpr> args) {
  if (args.empty()) {
    throw std::invalid_argument("join needs arguments");
  }
  NodeExpr e;
  e.kind_ = Kind::join;
  e.children_ = std::move(args);
  return e;
}

NodeExpr NodeExpr::meet(std::vector<NodeExpr> args) {
  if (args.empty()) {
    throw std::invalid_argument("meet needs arguments");
  }
  NodeExpr e;
  e.kind_ = Kind::meet;
  e.children_ = std::move(args);
  return e;
}

bool operator==(NodeExpr const& a, NodeExpr const& b) {
  return a.kind_ == b.kind_ && a.symbol_ == b.symbol_ && a.side_ == b.side_ && a.word_ == b.word_ &&
         a.children_ == b.children_;
}

std::strong_ordering operator<=>(NodeExpr const& a, NodeExpr const& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.symbol_ <=> b.symbol_; c != 0) return c;
  if (auto c = a.side_ <=> b.side_; c != 0) return c;
  if (auto c = a.word_ <=> b.word_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.children_.begin(), a.children_.end(), b.children_.begin(),
                                                b.children_.end());
}

std::string to_string(BaseSymbol s) {
  switch (s) {
    case BaseSymbol::V: return "V";
    case BaseSymbol::Vl: return "V_l";
    case BaseSymbol::Vr: return "V_r";
    case BaseSymbol::Vup_l: return "V^l";
    case BaseSymbol::Vup_r: return "V^r";
    case BaseSymbol::CR: return "CR";
  }
  return "?";
}

std::string to_string(NodeExpr const& e) {
  switch (e.kind()) {
    case NodeExpr::Kind::base: return to_string(e.symbol());
    case NodeExpr::Kind::upper: {
      std::string r = to_string(e.inner()) + "^[";
      for (std::size_t i = 0; i < e.word().size(); ++i) {
        r += (i ? "," : "") + to_string(e.word()[i]);
      }
      return r + "]";
    }
    case NodeExpr::Kind::chosen:
      return to_string(e.inner()) + (e.side() == Side::left ? "^<l>" : "^<r>");
    case NodeExpr::Kind::join:
    case NodeExpr::Kind::meet: {
      std::string r = e.kind() == NodeExpr::Kind::join ? "join(" : "meet(";
      for (std::size_t i = 0; i < e.children().size(); ++i) {
        r += (i ? ", " : "") + to_string(e.children()[i]);
      }
      return r + ")";
    }
  }
  return "?";
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  NodeExpr parse_all() {
    NodeExpr e = parse_expr();
    skip();
    if (i_ != s_.size()) {
      throw SyntaxError("trailing input in node expression", i_);
    }
    return e;
  }

 private:
  void skip() {
    while (i_ < s_.size() && s_[i_] == ' ') {
      ++i_;
    }
  }
  bool eat(std::string_view t) {
    skip();
    if (s_.compare(i_, t.size(), t) == 0) {
      i_ += t.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view t) {
    if (!eat(t)) {
      throw SyntaxError("expected '" + std::string(t) + "'", i_);
    }
  }

  std::vector<NodeExpr> parse_args() {
    std::vector<NodeExpr> args{parse_expr()};
    while (eat(",")) {
      args.push_back(parse_expr());
    }
    expect(")");
    return args;
  }

  NodeExpr parse_primary() {
    if (eat("join(")) return NodeExpr::join(parse_args());
    if (eat("meet(")) return NodeExpr::meet(parse_args());
    if (eat("CR")) return NodeExpr::base(BaseSymbol::CR);
    if (eat("V_l")) return NodeExpr::base(BaseSymbol::Vl);
    if (eat("V_r")) return NodeExpr::base(BaseSymbol::Vr);
    if (eat("V^l")) return NodeExpr::base(BaseSymbol::Vup_l);
    if (eat("V^r")) return NodeExpr::base(BaseSymbol::Vup_r);
    if (eat("V")) return NodeExpr::base(BaseSymbol::V);
    throw SyntaxError("expected a node expression", i_);
  }

  NodeExpr parse_expr() {
    NodeExpr e = parse_primary();
    while (true) {
      if (eat("^[")) {
        std::size_t close = s_.find(']', i_);
        if (close == std::string_view::npos) {
          throw SyntaxError("unterminated operator word", i_);
        }
        auto ops = parse_ops(s_.substr(i_, close - i_));
        i_ = close + 1;
        e = NodeExpr::upper(std::move(e), std::move(ops));
      } else if (eat("^<l>")) {
        e = NodeExpr::chosen(std::move(e), Side::left);
      } else if (eat("^<r>")) {
        e = NodeExpr::chosen(std::move(e), Side::right);
      } else {
        return e;
      }
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

enum class WordAlphabet { none, k, t };

// Alphabet of an alternating word over {Kl, Kr} or {Tl, Tr}.
WordAlphabet theta_alphabet(std::vector<Op> const& w) {
  if (w.empty()) {
    return WordAlphabet::none;
  }
  bool k = std::all_of(w.begin(), w.end(), [](Op o) { return o == Op::Kl || o == Op::Kr; });
  bool t = std::all_of(w.begin(), w.end(), [](Op o) { return o == Op::Tl || o == Op::Tr; });
  if (!k && !t) {
    return WordAlphabet::none;
  }
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1]) {
      return WordAlphabet::none;
    }
  }
  return k ? WordAlphabet::k : WordAlphabet::t;
}

void sort_unique(std::vector<NodeExpr>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Drops arguments made redundant by another one.
void prune(std::vector<NodeExpr>& args, bool is_meet) {
  std::vector<NodeExpr> kept;
  for (std::size_t i = 0; i < args.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < args.size() && !redundant; ++j) {
      if (i == j) {
        continue;
      }
      bool dominated = is_meet ? known_leq(args[j], args[i]) : known_leq(args[i], args[j]);
      bool mutual = is_meet ? known_leq(args[i], args[j]) : known_leq(args[j], args[i]);
      // keep the first of two mutually comparable arguments
      redundant = dominated && (!mutual || j < i);
    }
    if (!redundant) {
      kept.push_back(args[i]);
    }
  }
  args = std::move(kept);
}

NodeExpr normalize_once(NodeExpr const& e, NormalizeOptions opts);

NodeExpr normalize_lattice(NodeExpr const& e, NormalizeOptions opts) {
  bool is_meet = e.kind() == NodeExpr::Kind::meet;
  std::vector<NodeExpr> args;
  for (auto const& c : e.children()) {
    NodeExpr n = normalize_once(c, opts);
    if (n.kind() == e.kind()) {
      args.insert(args.end(), n.children().begin(), n.children().end());
    } else {
      args.push_back(std::move(n));
    }
  }
  sort_unique(args);
  prune(args, is_meet);
  if (args.size() == 1) {
    return args.front();
  }
  if (!is_meet && opts.self_dual_base && args.size() == 2) {
    auto const& a = args[0];
    auto const& b = args[1];
    if (a.kind() == NodeExpr::Kind::upper && b.kind() == NodeExpr::Kind::upper && a.inner() == b.inner() &&
        a.inner().kind() == NodeExpr::Kind::base && a.inner().symbol() == BaseSymbol::V &&
        theta_alphabet(a.word()) == WordAlphabet::k && theta_alphabet(b.word()) == WordAlphabet::k &&
        a.word().size() == b.word().size() && a.word().front() != b.word().front()) {
      auto const& s = a.word().back() == Op::Kl ? a : b;
      auto const& t = a.word().back() == Op::Kl ? b : a;
      auto sw = s.word();
      sw.push_back(Op::Kr);
      auto tw = t.word();
      tw.push_back(Op::Kl);
      return NodeExpr::meet({NodeExpr::upper(s.inner(), std::move(sw)), NodeExpr::upper(t.inner(), std::move(tw))});
    }
  }
  return is_meet ? NodeExpr::meet(std::move(args)) : NodeExpr::join(std::move(args));
}

NodeExpr normalize_once(NodeExpr const& e, NormalizeOptions opts) {
  switch (e.kind()) {
    case NodeExpr::Kind::base: return e;
    case NodeExpr::Kind::upper: {
      NodeExpr inner = normalize_once(e.inner(), opts);
      std::vector<Op> word;
      if (inner.kind() == NodeExpr::Kind::upper) {
        word = inner.word();
        NodeExpr base = inner.inner();
        inner = std::move(base);
      }
      for (Op o : e.word()) {
        if (word.empty() || word.back() != o) {
          word.push_back(o);
        }
      }
      if (word.empty()) {
        return inner;
      }
      return NodeExpr::upper(std::move(inner), std::move(word));
    }
    case NodeExpr::Kind::chosen: return NodeExpr::chosen(normalize_once(e.inner(), opts), e.side());
    case NodeExpr::Kind::join:
    case NodeExpr::Kind::meet: return normalize_lattice(e, opts);
  }
  return e;
}

}  // namespace

NodeExpr parse_node_expr(std::string_view s) { return ExprParser(s).parse_all(); }

bool known_leq(NodeExpr const& x, NodeExpr const& y) {
  if (x == y) {
    return true;
  }
  using K = NodeExpr::Kind;
  if (x.kind() == K::join) {
    return std::all_of(x.children().begin(), x.children().end(),
                       [&](NodeExpr const& c) { return known_leq(c, y); });
  }
  if (y.kind() == K::meet) {
    return std::all_of(y.children().begin(), y.children().end(),
                       [&](NodeExpr const& c) { return known_leq(x, c); });
  }
  if (y.kind() == K::join &&
      std::any_of(y.children().begin(), y.children().end(), [&](NodeExpr const& c) { return known_leq(x, c); })) {
    return true;
  }
  if (x.kind() == K::meet &&
      std::any_of(x.children().begin(), x.children().end(), [&](NodeExpr const& c) { return known_leq(c, y); })) {
    return true;
  }
  if (x.kind() == K::upper && y.kind() == K::upper && x.inner() == y.inner()) {
    auto ax = theta_alphabet(x.word());
    if (ax != WordAlphabet::none && ax == theta_alphabet(y.word()) && x.word().size() < y.word().size()) {
      return true;
    }
  }
  if ((y.kind() == K::upper || y.kind() == K::chosen) && known_leq(x, y.inner())) {
    return true;
  }
  return false;
}

NodeExpr normalize(NodeExpr const& e, NormalizeOptions opts) {
  NodeExpr cur = e;
  while (true) {
    NodeExpr next = normalize_once(cur, opts);
    if (next == cur) {
      return cur;
    }
    cur = std::move(next);
  }
}

NodeExpr mirror_expr(NodeExpr const& e) {
  switch (e.kind()) {
    case NodeExpr::Kind::base:
      switch (e.symbol()) {
        case BaseSymbol::Vl: return NodeExpr::base(BaseSymbol::Vr);
        case BaseSymbol::Vr: return NodeExpr::base(BaseSymbol::Vl);
        case BaseSymbol::Vup_l: return NodeExpr::base(BaseSymbol::Vup_r);
        case BaseSymbol::Vup_r: return NodeExpr::base(BaseSymbol::Vup_l);
        default: return e;
      }
    case NodeExpr::Kind::upper: {
      std::vector<Op> w;
      for (Op o : e.word()) {
        w.push_back(dual_op(o));
      }
      return NodeExpr::upper(mirror_expr(e.inner()), std::move(w));
    }
    case NodeExpr::Kind::chosen: return NodeExpr::chosen(mirror_expr(e.inner()), other(e.side()));
    case NodeExpr::Kind::join:
    case NodeExpr::Kind::meet: {
      std::vector<NodeExpr> args;
      for (auto const& c : e.children()) {
        args.push_back(mirror_expr(c));
      }
      return e.kind() == NodeExpr::Kind::join ? NodeExpr::join(std::move(args)) : NodeExpr::meet(std::move(args));
    }
  }
  return e;
}

NodeExpr specialize_default(NodeExpr const& e) {
  switch (e.kind()) {
    case NodeExpr::Kind::base:
      if (e.symbol() == BaseSymbol::Vup_l) return NodeExpr::upper(NodeExpr::base(BaseSymbol::V), {Op::Kl});
      if (e.symbol() == BaseSymbol::Vup_r) return NodeExpr::upper(NodeExpr::base(BaseSymbol::V), {Op::Kr});
      return e;
    case NodeExpr::Kind::upper: return NodeExpr::upper(specialize_default(e.inner()), e.word());
    case NodeExpr::Kind::chosen:
      return NodeExpr::upper(specialize_default(e.inner()), {e.side() == Side::left ? Op::Kl : Op::Kr});
    case NodeExpr::Kind::join:
    case NodeExpr::Kind::meet: {
      std::vector<NodeExpr> args;
      for (auto const& c : e.children()) {
        args.push_back(specialize_default(c));
      }
      return e.kind() == NodeExpr::Kind::join ? NodeExpr::join(std::move(args)) : NodeExpr::meet(std::move(args));
    }
  }
  return e;
}

}  // namespace crvar
