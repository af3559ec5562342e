// Acceptance checks.  Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "crvar/congruence.hpp"
#include "crvar/free_band.hpp"
#include "crvar/identity.hpp"
#include "crvar/network.hpp"
#include "crvar/standard_tables.hpp"
#include "crvar/table.hpp"
#include "crvar/theta.hpp"
#include "crvar/variety.hpp"
#include "crvar/word.hpp"
#include "oracles.hpp"

using namespace crvar;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  std::size_t failures = 0;

  void fail(std::string const& what) {
    if (failures++ < 5) detail << " [" << what << "]";
    ok = false;
  }
  void expect(bool cond, std::string const& what) {
    if (!cond) fail(what);
  }
};

// ---------------------------------------------------------------------------

void word_grammar(Outcome& o) {
  std::size_t total = 0, disagreements = 0;
  for (std::size_t len = 1; len <= 10; ++len) {
    for (auto const& w : oracle::all_words(len)) {
      ++total;
      if (validate(w) != oracle::grammar_member(w)) {
        ++disagreements;
        o.fail(to_string(w));
      }
    }
  }
  o.detail << " words=" << total << " disagreements=" << disagreements;
}

void mirror_laws(Outcome& o) {
  o.expect(to_string(mirror(tokenize("p(q(rs)^-1t)^-1u"))) == "u(t(sr)^-1q)^-1p", "worked example");
  std::mt19937_64 rng(1);
  std::vector<std::string> letters{"p", "q", "r", "s", "t", "u"};
  std::size_t failures = 0;
  for (int i = 0; i < 10000; ++i) {
    Term t = oracle::random_term(rng, 6, letters);
    Term s = oracle::random_term(rng, 6, letters);
    FlatWord w = render(t);
    bool ok = mirror(mirror(w)) == w && mirror_term(mirror_term(t)) == t &&
              mirror_term(Term::product(t, s)) == Term::product(mirror_term(s), mirror_term(t)) &&
              mirror_term(Term::inverse(t)) == Term::inverse(mirror_term(t)) && validate(w) &&
              validate(mirror(w)) && render(mirror_term(t)) == mirror(w) && content(mirror_term(t)) == content(t);
    if (!ok) {
      ++failures;
      o.fail(to_string(t));
    }
  }
  o.detail << " terms=10000 failures=" << failures;
}

std::vector<Identity> identity_battery() {
  std::vector<Identity> r;
  for (char const* s : {"xy = yx", "xy = x", "xy = y", "x in E", "xyz = xzy", "xyz = yxz", "xyx = xy", "xyx = x",
                        "x(x)^-1 = y(y)^-1", "x(x)^-1y = yx(x)^-1", "(xy)^-1 = (y)^-1(x)^-1", "x(y)^-1 = xy"}) {
    r.push_back(parse_identity(s));
  }
  return r;
}

void finite_duality(Outcome& o) {
  auto ids = identity_battery();
  std::size_t tables = 0, checks = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& s : oracle::all_cr_tables(n)) {
      ++tables;
      auto d = dual(s);
      o.expect(dual(d) == s, "dual of dual");
      o.expect(green(s).L == green(d).R, "L(S) = R(dual S)");
      for (auto const& id : ids) {
        ++checks;
        o.expect(satisfies(s, id).holds == satisfies(d, mirror(id)).holds, to_string(id));
      }
    }
  }
  o.detail << " tables=" << tables << " identity checks=" << checks << " identities=" << ids.size();
}

void route_equivalence(Outcome& o) {
  auto battery = tables::curated_battery();
  std::size_t lo = 99, hi = 0;
  for (auto const& s : battery) {
    lo = std::min(lo, s.order());
    hi = std::max(hi, s.order());
    o.expect(is_completely_regular(s), "battery table not CR");
  }
  o.expect(battery.size() >= 20 && lo >= 2 && hi <= 8, "battery shape");
  std::size_t comparisons = 0, disagreements = 0;
  for (char const* name : {"S", "SG"}) {
    auto b = catalog(name);
    for (auto const& s : battery) {
      for (Op op : kAllOps) {
        ++comparisons;
        if (member(s, apply_word(b, std::vector<Op>{op})) != member_via_quotient(s, b, op)) {
          ++disagreements;
          o.fail(std::string(name) + " " + to_string(op) + " " + s.name());
        }
      }
    }
  }
  o.detail << " tables=" << battery.size() << " orders=" << lo << ".." << hi << " comparisons=" << comparisons
           << " disagreements=" << disagreements;
}

void congruence_oracle(Outcome& o) {
  std::vector<UnaryCayleyTable> small;
  for (auto const& s : tables::curated_battery()) {
    if (s.order() <= 4) small.push_back(s);
  }
  std::size_t thetas = 0, pairs = 0;
  for (auto const& s : small) {
    for (auto const& theta : oracle::all_partitions(s.order())) {
      ++thetas;
      o.expect(largest_congruence_within(s, theta).relation() == oracle::brute_largest_within(s, theta),
               "largest within on " + s.name());
    }
    auto congs = oracle::all_congruences(s);
    for (auto const& a : congs) {
      for (auto const& b : congs) {
        ++pairs;
        auto f = relate(s, Congruence::checked(s, a), Congruence::checked(s, b));
        bool kt = (f & kFlagK) && (f & kFlagT);
        bool klkr = (f & kFlagKl) && (f & kFlagKr);
        if (kt || klkr) o.expect(a == b, "K and T relate distinct congruences on " + s.name());
      }
    }
  }
  o.detail << " tables=" << small.size() << " thetas=" << thetas << " congruence pairs=" << pairs;
}

// Words of length <= max_len over `letters` letters, merged whenever one is
// obtained from the other by deleting one copy of a square factor uu.
std::map<std::string, std::size_t> square_closure(int letters, std::size_t max_len) {
  std::vector<std::string> words;
  std::map<std::string, std::size_t> index;
  std::function<void(std::string&)> gen = [&](std::string& w) {
    if (!w.empty()) {
      index[w] = words.size();
      words.push_back(w);
    }
    if (w.size() == max_len) return;
    for (int c = 0; c < letters; ++c) {
      w.push_back(static_cast<char>('a' + c));
      gen(w);
      w.pop_back();
    }
  };
  std::string seed;
  gen(seed);
  std::vector<std::size_t> parent(words.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto const& w = words[i];
    for (std::size_t p = 0; p < w.size(); ++p) {
      for (std::size_t k = 1; p + 2 * k <= w.size(); ++k) {
        if (w.compare(p, k, w, p + k, k) != 0) continue;
        std::string shorter = w.substr(0, p) + w.substr(p + k);
        parent[find(i)] = find(index.at(shorter));
      }
    }
  }
  std::map<std::string, std::size_t> cls;
  for (auto const& [w, i] : index) cls[w] = find(i);
  return cls;
}

void free_bands(Outcome& o) {
  o.expect(free_band(1).order() == 1, "FB(1) order");
  auto fb2 = free_band(2);
  auto fb3 = free_band(3);
  o.expect(fb2.order() == 6, "FB(2) order");
  o.expect(fb3.order() == 159, "FB(3) order");
  o.expect(satisfies(fb2, parse_identity("xx = x")).holds, "FB(2) idempotent");
  o.expect(!satisfies(fb2, parse_identity("xy = yx")).holds, "FB(2) not commutative");
  for (auto const* f : {&fb2, &fb3}) o.expect(is_associative(*f) && idempotents(*f).size() == f->order(), "band");

  std::vector<UnaryCayleyTable> bands;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto& b : oracle::all_bands(n)) bands.push_back(std::move(b));
  }

  // Soundness: every evaluation into a small band is a homomorphism from
  // the free band table.
  std::size_t homs = 0;
  for (auto const& b : bands) {
    std::size_t n = b.order();
    for (std::size_t code = 0; code < n * n * n; ++code) {
      std::vector<Element> gens{static_cast<Element>(code % n), static_cast<Element>(code / n % n),
                                static_cast<Element>(code / (n * n))};
      std::vector<Element> phi(fb3.order());
      for (Element i = 0; i < fb3.order(); ++i) phi[i] = oracle::eval_letters(b, fb3.label(i), gens);
      ++homs;
      bool ok = true;
      for (Element i = 0; i < fb3.order() && ok; ++i) {
        for (Element j = 0; j < fb3.order(); ++j) {
          if (phi[fb3.mul(i, j)] != b.mul(phi[i], phi[j])) {
            ok = false;
            break;
          }
        }
      }
      o.expect(ok, "evaluation into a band is not a homomorphism");
    }
  }

  // Completeness on two letters: distinct normal forms are separated by a
  // band of order <= 4.
  std::vector<std::string> two;
  for (Element i = 0; i < fb2.order(); ++i) two.push_back(fb2.label(i));
  for (std::size_t i = 0; i < two.size(); ++i) {
    for (std::size_t j = i + 1; j < two.size(); ++j) {
      bool separated = false;
      for (auto const& b : bands) {
        std::size_t n = b.order();
        for (std::size_t code = 0; code < n * n && !separated; ++code) {
          std::vector<Element> g{static_cast<Element>(code % n), static_cast<Element>(code / n)};
          separated = oracle::eval_letters(b, two[i], g) != oracle::eval_letters(b, two[j], g);
        }
        if (separated) break;
      }
      o.expect(separated, two[i] + " vs " + two[j] + " not separated");
    }
  }

  // Completeness on three letters for short words: the square-deletion
  // closure induces the same partition as the normal form.
  auto cls = square_closure(3, 9);
  std::map<std::size_t, std::string> form_of_class;
  std::map<std::string, std::size_t> class_of_form;
  std::size_t mismatches = 0;
  for (auto const& [w, c] : cls) {
    if (w.size() > 6) continue;
    std::string nf = band_normal_form(w);
    auto [it1, new1] = form_of_class.emplace(c, nf);
    auto [it2, new2] = class_of_form.emplace(nf, c);
    if (it1->second != nf || it2->second != c) ++mismatches;
  }
  o.expect(mismatches == 0, "square closure disagrees with normal form");
  o.detail << " orders=1,6,159 bands<=4=" << bands.size() << " homomorphisms=" << homs
           << " short-word classes=" << class_of_form.size() << " mismatches=" << mismatches;
}

void theta_monoid(Outcome& o) {
  std::vector<ThetaWord> upto4, upto8;
  for (std::size_t n = 0; n <= 8; ++n) {
    auto e = enumerate(n);
    std::set<ThetaWord> distinct(e.begin(), e.end());
    o.expect(distinct.size() == (n == 0 ? 1u : 2u), "count at length " + std::to_string(n));
    for (auto const& w : e) {
      o.expect(w.size() == n, "length");
      if (n > 0) o.expect(distinct.count(dual_word(w)) == 1, "letter swap stays in length class");
      if (n <= 4) upto4.push_back(w);
      upto8.push_back(w);
    }
  }
  std::size_t triples = 0;
  for (auto const& a : upto4) {
    for (auto const& b : upto4) {
      for (auto const& c : upto4) {
        ++triples;
        o.expect(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)), "associativity");
      }
    }
  }
  for (auto const& a : upto8) {
    o.expect(multiply(a, ThetaWord{}) == a && multiply(ThetaWord{}, a) == a, "identity");
    if (a.size() == 1) o.expect(multiply(a, a) == a, "idempotent letter");
    o.expect(leq(a, a), "reflexive");
    o.expect(dual_word(dual_word(a)) == a, "dual involution");
    for (auto const& b : upto8) {
      auto ab = multiply(a, b);
      o.expect(ab.size() + 1 >= a.size() + b.size() && ab.size() <= a.size() + b.size(), "product length");
      o.expect(dual_word(ab) == multiply(dual_word(a), dual_word(b)), "dual of product");
      o.expect(leq(a, b) == leq(dual_word(a), dual_word(b)), "dual preserves order");
      if (leq(a, b) && leq(b, a)) o.expect(a == b, "antisymmetric");
      for (auto const& c : upto8) {
        if (leq(a, b) && leq(b, c)) o.expect(leq(a, c), "transitive");
      }
    }
  }
  o.detail << " triples=" << triples << " words<=8=" << upto8.size();
}

std::vector<std::size_t> k_rows(std::size_t d) {
  std::vector<std::size_t> r{1};
  for (std::size_t i = 0; i < d; ++i) r.insert(r.end(), {2, 1});
  return r;
}

std::vector<std::size_t> t_rows(std::size_t d) {
  std::vector<std::size_t> r{1, 1};
  for (std::size_t i = 0; i < d; ++i) r.insert(r.end(), {2, 1, 1});
  return r;
}

bool is_left(EdgeLabel l) { return l == EdgeLabel::Kl || l == EdgeLabel::Tl; }
bool is_right(EdgeLabel l) { return l == EdgeLabel::Kr || l == EdgeLabel::Tr; }

// A cover into V^w carries the last letter of w; a cover from V^w into a
// join or meet carries the opposite side.  Other covers are plain.
void check_labels(Outcome& o, Network const& n) {
  for (auto const& c : n.covers) {
    auto const& lo = n.nodes[c.lower].expr;
    auto const& hi = n.nodes[c.upper].expr;
    auto last_side = [](NodeExpr const& e) -> std::optional<bool> {
      if (e.kind() != NodeExpr::Kind::upper || e.word().empty()) return std::nullopt;
      Op op = e.word().back();
      if (op == Op::Kl || op == Op::Tl) return true;
      if (op == Op::Kr || op == Op::Tr) return false;
      return std::nullopt;
    };
    std::string where = n.nodes[c.lower].id + " -> " + n.nodes[c.upper].id;
    if (auto s = last_side(hi)) {
      o.expect(*s ? is_left(c.label) : is_right(c.label), "label into " + where);
    } else if (hi.kind() == NodeExpr::Kind::join || hi.kind() == NodeExpr::Kind::meet) {
      if (auto s = last_side(lo)) {
        o.expect(*s ? is_right(c.label) : is_left(c.label), "label into join/meet " + where);
      } else {
        o.expect(c.label == EdgeLabel::plain, "plain " + where);
      }
    } else {
      o.expect(c.label == EdgeLabel::plain, "plain " + where);
    }
  }
}

void network_shapes(Outcome& o) {
  for (std::size_t d = 1; d <= 4; ++d) {
    auto k = gen_K_network(d);
    auto t = gen_T_network(d);
    o.expect(row_widths(k) == k_rows(d), "K rows depth " + std::to_string(d));
    o.expect(row_widths(t) == t_rows(d), "T rows depth " + std::to_string(d));
    check_labels(o, k);
    check_labels(o, t);
    o.expect(check_lattice(k).ok && check_lattice(t).ok, "K/T lattice");
    o.expect(same_network(mirror_network(k), k), "K mirror");
    o.expect(isomorphic(model_of(mirror_network(t)), model_of(t)), "T mirror");
  }
  for (std::size_t d = 1; d <= 5; ++d) {
    auto l = gen_ladder(d);
    std::string tag = " depth " + std::to_string(d);
    auto rep = check_lattice(l);
    o.expect(rep.ok, "ladder lattice" + tag + ": " + rep.message);
    o.expect(l.nodes.size() == 6 + 5 * d, "ladder size" + tag);
    o.expect(isomorphic(l, reference_ladder(d)), "ladder reference" + tag);
    o.expect(!isomorphic(l, reference_ladder(d + 1)), "ladder vs deeper reference" + tag);
    o.expect(isomorphic(gen_ladder(d, true), reference_ladder(d, true)), "ladder with top" + tag);
    auto m = mirror_network(l);
    o.expect(same_network(m, l), "ladder mirror" + tag);
    o.expect(isomorphic(m, reference_ladder(d)), "mirror reference" + tag);
    for (std::size_t b = 0; b < d; ++b) {
      o.expect(block_core(l, b).size() == 9, "block core" + tag);
    }
    o.expect(same_network(specialize_default(gen_ladder_general(d, LadderConditions::all())), l),
             "general ladder default" + tag);
  }
  o.detail << " K,T depths 1-4; ladder depths 1-5";
}

void instantiation(Outcome& o) {
  auto net = gen_ladder(1);
  auto inst = instantiate(net, Bindings{catalog("S"), catalog("LNB"), catalog("RNB")});
  std::vector<std::string> names{"V", "V_l", "V_r", "V^[Kl]", "V^[Kr]", "V_l^[Kr]", "V_r^[Kl]"};
  std::vector<IdentityBasis> bases;
  for (auto const& n : names) {
    auto idx = net.find(n);
    if (!idx || !inst[*idx]) {
      o.fail("missing instantiation " + n);
      return;
    }
    bases.push_back(*inst[*idx]);
  }
  auto witnesses = tables::curated_battery();
  witnesses.push_back(free_band(3));
  std::size_t separated = 0;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      bool sep = false;
      for (auto const& w : witnesses) {
        if (member(w, bases[i]) != member(w, bases[j])) {
          sep = true;
          break;
        }
      }
      separated += sep;
      o.expect(sep, names[i] + " vs " + names[j]);
    }
  }
  auto klsg = op_Kl(catalog("SG"));
  o.expect(member(tables::left_zero(2), klsg), "LZ2 in SG^Kl");
  o.expect(!member(tables::right_zero(2), klsg), "RZ2 not in SG^Kl");
  o.detail << " separated pairs=" << separated << "/21";
}

void extension(Outcome& o) {
  auto fb2 = free_band(2);
  auto ext = right_zero_extension(fb2);
  o.expect(ext.order() == 13, "order");
  o.expect(is_associative(ext), "associative");
  o.expect(is_completely_regular(ext), "completely regular");
  o.expect(L0(ext).relation().is_identity(), "L0 identity");
  std::vector<Element> r;
  for (Element i = 6; i < 13; ++i) r.push_back(i);
  o.expect(rees_quotient(ext, r) == tables::adjoin_zero(fb2), "Rees quotient");
  o.detail << " order=" << ext.order();
}

struct Criterion {
  int number;
  char const* title;
  double limit_seconds;
  void (*run)(Outcome&);
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "word grammar equivalence", 60, word_grammar},
      {2, "mirror laws", 60, mirror_laws},
      {3, "finite duality", 300, finite_duality},
      {4, "upper operator routes", 120, route_equivalence},
      {5, "congruence oracle", 120, congruence_oracle},
      {6, "free bands", 120, free_bands},
      {7, "theta monoid", 60, theta_monoid},
      {8, "network shapes", 120, network_shapes},
      {9, "ladder instantiation", 60, instantiation},
      {10, "right zero extension", 60, extension},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (std::exception const& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) o.fail("time limit exceeded");
    if (!o.ok) ++failed;
    std::printf("%s criterion %2d: %-26s (%.2fs)%s\n", o.ok ? "PASS" : "FAIL", c.number, c.title, secs,
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
