#include <set>

#include "catch_amalgamated.hpp"
#include "crvar/errors.hpp"
#include "crvar/theta.hpp"

using namespace crvar;

namespace {

ThetaWord w(char const* s) { return parse_theta(s); }

std::vector<ThetaWord> words_up_to(std::size_t n) {
  std::vector<ThetaWord> r;
  for (std::size_t k = 0; k <= n; ++k) {
    for (auto const& x : enumerate(k)) r.push_back(x);
  }
  return r;
}

}  // namespace

TEST_CASE("theta words render and parse", "[theta]") {
  CHECK(to_string(ThetaWord{}) == "1");
  CHECK(to_string(ThetaWord::alternating(Side::left, 3)) == "TlTrTl");
  CHECK(w("TrTl") == ThetaWord({Side::right, Side::left}));
  CHECK(w("1").empty());
  CHECK_THROWS_AS(parse_theta("TlTl"), SyntaxError);
  CHECK_THROWS_AS(parse_theta("Kl"), SyntaxError);
  CHECK_THROWS_AS(ThetaWord({Side::left, Side::left}), std::invalid_argument);
}

TEST_CASE("multiplication", "[theta]") {
  CHECK(multiply(w("Tl"), w("Tl")) == w("Tl"));
  CHECK(multiply(w("TlTr"), w("TrTl")) == w("TlTrTl"));
  CHECK(multiply(w("TlTr"), w("TlTr")) == w("TlTrTlTr"));
  CHECK(multiply(ThetaWord{}, w("Tr")) == w("Tr"));
}

TEST_CASE("order", "[theta]") {
  CHECK(leq(w("TlTr"), w("Tl")));
  CHECK(leq(w("TrTl"), w("TrTl")));
  CHECK_FALSE(leq(w("Tl"), w("Tr")));
  CHECK_FALSE(leq(w("Tl"), w("TlTr")));
  CHECK(leq(w("Tl"), ThetaWord{}));
}

TEST_CASE("enumeration", "[theta]") {
  CHECK(enumerate(0) == std::vector<ThetaWord>{ThetaWord{}});
  auto two = enumerate(2);
  CHECK(std::set<ThetaWord>(two.begin(), two.end()) == std::set<ThetaWord>{w("TlTr"), w("TrTl")});
  auto five = enumerate(5);
  CHECK(std::set<ThetaWord>(five.begin(), five.end()) ==
        std::set<ThetaWord>{w("TlTrTlTrTl"), w("TrTlTrTlTr")});
}

TEST_CASE("substitution and duality", "[theta]") {
  CHECK(substitute(w("TlTr"), Alphabet::K) == std::vector<Op>{Op::Kl, Op::Kr});
  CHECK(substitute(w("TlTr"), Alphabet::T) == std::vector<Op>{Op::Tl, Op::Tr});
  CHECK(substitute(ThetaWord{}, Alphabet::K).empty());
  CHECK(dual_word(w("TlTrTl")) == w("TrTlTr"));
}

TEST_CASE("property: monoid laws", "[theta][property]") {
  auto small = words_up_to(4);
  for (auto const& a : small) {
    CHECK(multiply(a, ThetaWord{}) == a);
    CHECK(multiply(ThetaWord{}, a) == a);
    if (a.size() == 1) CHECK(multiply(a, a) == a);
    for (auto const& b : small) {
      auto ab = multiply(a, b);
      CHECK((ab.size() == a.size() + b.size() || ab.size() + 1 == a.size() + b.size()));
      for (auto const& c : small) {
        CHECK(multiply(ab, c) == multiply(a, multiply(b, c)));
      }
    }
  }
}

TEST_CASE("property: order axioms and duality up to length 6", "[theta][property]") {
  auto all = words_up_to(6);
  for (auto const& a : all) {
    CHECK(leq(a, a));
    CHECK(dual_word(dual_word(a)) == a);
    for (auto const& b : all) {
      if (leq(a, b) && leq(b, a)) CHECK(a == b);
      CHECK(dual_word(multiply(a, b)) == multiply(dual_word(a), dual_word(b)));
      CHECK(leq(a, b) == leq(dual_word(a), dual_word(b)));
      for (auto const& c : all) {
        if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
      }
    }
    auto k = substitute(a, Alphabet::K);
    auto kd = substitute(dual_word(a), Alphabet::K);
    REQUIRE(k.size() == kd.size());
    for (std::size_t i = 0; i < k.size(); ++i) CHECK(kd[i] == dual_op(k[i]));
  }
}
