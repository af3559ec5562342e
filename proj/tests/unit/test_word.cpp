#include <random>

#include "catch_amalgamated.hpp"
#include "crvar/errors.hpp"
#include "crvar/word.hpp"
#include "oracles.hpp"

using namespace crvar;

namespace {

Term var(char const* n) { return Term::variable(n); }

}  // namespace

TEST_CASE("tokenize splits letters and brackets", "[word]") {
  FlatWord w = tokenize("x1(y_2)^-1");
  REQUIRE(w.size() == 4);
  CHECK(w[0] == YSymbol::letter("x1"));
  CHECK(w[1] == YSymbol::open());
  CHECK(w[2] == YSymbol::letter("y_2"));
  CHECK(w[3] == YSymbol::close_inverse());
  CHECK(to_string(tokenize("rs")) == "rs");
  CHECK(tokenize("rs").size() == 2);
  CHECK(tokenize("y_z").size() == 2);
}

TEST_CASE("tokenize accepts the superscript inverse and zero powers", "[word]") {
  CHECK(tokenize("(x)⁻¹") == tokenize("(x)^-1"));
  CHECK(to_string(tokenize("x^0")) == "x(x)^-1");
  CHECK(to_string(tokenize("(xy)^0")) == "xy(xy)^-1");
  CHECK(to_string(tokenize(" x  y ")) == "xy");
}

TEST_CASE("tokenize rejects unknown characters", "[word]") {
  CHECK_THROWS_AS(tokenize("x+y"), SyntaxError);
  CHECK_THROWS_AS(tokenize("X"), SyntaxError);
}

TEST_CASE("validate on frozen examples", "[word]") {
  CHECK(validate(tokenize("p(q(rs)^-1t)^-1u")));
  CHECK(validate(tokenize("x")));
  CHECK(validate(tokenize("((x)^-1)^-1")));

  auto bad_prefix = check_word(tokenize("x)^-1"));
  CHECK(bad_prefix.violated_condition == 2);
  CHECK(bad_prefix.position == 1);

  auto empty_group = check_word(tokenize("()^-1"));
  CHECK(empty_group.violated_condition == 3);
  CHECK(empty_group.position == 0);

  auto unbalanced = check_word(tokenize("(x"));
  CHECK(unbalanced.violated_condition == 1);

  CHECK_FALSE(validate(FlatWord{}));
}

TEST_CASE("parse builds the expected trees", "[word]") {
  Term t = parse_term("xy(x)^-1");
  REQUIRE(t.is_product());
  REQUIRE(t.children().size() == 3);
  CHECK(t.children()[0] == var("x"));
  CHECK(t.children()[1] == var("y"));
  CHECK(t.children()[2] == Term::inverse(var("x")));

  Term u = parse_term("(xy)^-1");
  REQUIRE(u.is_inverse());
  CHECK(u.body() == Term::product(var("x"), var("y")));

  CHECK(t.length() == 5);
  CHECK(u.depth() >= 2);
}

TEST_CASE("parse rejects invalid words with the violated condition", "[word]") {
  try {
    (void)parse(tokenize("x)^-1"));
    FAIL("expected InvalidWord");
  } catch (InvalidWord const& e) {
    CHECK(e.condition() == 2);
  }
  CHECK_THROWS_AS(parse_term("()^-1"), InvalidWord);
}

TEST_CASE("render of nested inverses", "[word]") {
  Term t = Term::inverse(Term::inverse(var("x")));
  CHECK(to_string(t) == "((x)^-1)^-1");
  CHECK(parse_term("((x)^-1)^-1") == t);
}

TEST_CASE("product flattens nested products", "[word]") {
  Term p = Term::product({Term::product(var("x"), var("y")), var("z")});
  CHECK(p.children().size() == 3);
  CHECK(Term::product({var("x")}) == var("x"));
  CHECK_THROWS_AS(Term::product(std::vector<Term>{}), std::invalid_argument);
}

TEST_CASE("mirror on frozen examples", "[word]") {
  CHECK(to_string(mirror(tokenize("p(q(rs)^-1t)^-1u"))) == "u(t(sr)^-1q)^-1p");
  CHECK(to_string(mirror(tokenize("x(x)^-1"))) == "(x)^-1x");
  CHECK(to_string(mirror_term(parse_term("xy(x)^-1"))) == "(x)^-1yx");
}

TEST_CASE("content, head and tail", "[word]") {
  auto cht = content_head_tail(tokenize("xyx"));
  CHECK(cht.content == std::set<std::string>{"x", "y"});
  CHECK(cht.head == "x");
  CHECK(cht.tail == "x");
  CHECK_THROWS_AS(content_head_tail(tokenize("(x)^-1")), NotPlainWord);
  CHECK(content(parse_term("p(q(rs)^-1t)^-1u")) == std::set<std::string>{"p", "q", "r", "s", "t", "u"});
}

TEST_CASE("zero power", "[word]") {
  Term z = zero_power(Term::product(var("x"), var("y")));
  REQUIRE(z.is_product());
  REQUIRE(z.children().size() == 3);
  CHECK(z.children()[0] == var("x"));
  CHECK(z.children()[1] == var("y"));
  CHECK(z.children()[2] == Term::inverse(Term::product(var("x"), var("y"))));
  CHECK(to_string(zero_power(var("x"))) == "x(x)^-1");
}

TEST_CASE("property: mirror laws on random terms", "[word][property]") {
  std::mt19937_64 rng(20240611);
  std::vector<std::string> letters{"x", "y", "z"};
  for (int i = 0; i < 2000; ++i) {
    Term t = oracle::random_term(rng, 5, letters);
    Term s = oracle::random_term(rng, 5, letters);
    FlatWord w = render(t);
    INFO(to_string(w));
    REQUIRE(validate(w));
    CHECK(parse(w) == t);
    CHECK(mirror(mirror(w)) == w);
    CHECK(mirror_term(mirror_term(t)) == t);
    CHECK(render(mirror_term(t)) == mirror(w));
    CHECK(validate(mirror(w)));
    CHECK(content(mirror_term(t)) == content(t));
    CHECK(mirror_term(Term::product(t, s)) == Term::product(mirror_term(s), mirror_term(t)));
    CHECK(mirror_term(Term::inverse(t)) == Term::inverse(mirror_term(t)));
  }
}

TEST_CASE("property: validate agrees with the inductive grammar up to length 7", "[word][property]") {
  for (std::size_t len = 1; len <= 7; ++len) {
    for (auto const& w : oracle::all_words(len)) {
      INFO(to_string(w));
      REQUIRE(validate(w) == oracle::grammar_member(w));
    }
  }
}
