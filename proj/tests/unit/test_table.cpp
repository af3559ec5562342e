#include "catch_amalgamated.hpp"
#include "crvar/errors.hpp"
#include "crvar/identity.hpp"
#include "crvar/standard_tables.hpp"
#include "crvar/table.hpp"
#include "crvar/table_io.hpp"
#include "oracles.hpp"

using namespace crvar;
namespace t = crvar::tables;

TEST_CASE("small standard tables satisfy the axioms", "[table]") {
  for (auto const& s : {t::left_zero(2), t::right_zero(2), t::chain_semilattice(2), t::cyclic_group(3),
                        t::symmetric_group3(), t::rectangular_band(2, 3), t::rees_matrix_z2()}) {
    INFO(s.name());
    CHECK(is_associative(s));
    CHECK(is_completely_regular(s));
  }
}

TEST_CASE("axiom checks report the first failure", "[table]") {
  // x*y = x+1 mod 2 is not associative: (0*0)*0 = 0 but 0*(0*0) = 1
  auto bad = UnaryCayleyTable::from_rows({{1, 1}, {0, 0}}, {0, 1});
  CHECK_FALSE(is_associative(bad));
  REQUIRE(find_nonassociative_triple(bad).has_value());

  // null semigroup with zero 0: 1*1 = 0, so 1 lies in no subgroup
  auto null2 = UnaryCayleyTable::from_rows({{0, 0}, {0, 0}}, {0, 1});
  CHECK(is_associative(null2));
  CHECK(find_non_cr_element(null2) == Element{1});
}

TEST_CASE("evaluate terms", "[table]") {
  auto sl2 = t::chain_semilattice(2);
  CHECK(evaluate(sl2, parse_term("xy"), {{"x", 0}, {"y", 1}}) == 0);
  auto z3 = t::cyclic_group(3);
  CHECK(evaluate(z3, parse_term("(x)^-1"), {{"x", 1}}) == 2);
  CHECK(evaluate(z3, parse_term("x(x)^-1"), {{"x", 1}}) == 0);
  CHECK_THROWS_AS(evaluate(z3, parse_term("xy"), {{"x", 1}}), UnboundVariable);
}

TEST_CASE("identity satisfaction with witnesses", "[table]") {
  auto lz2 = t::left_zero(2);
  CHECK(satisfies(lz2, parse_identity("xy = x")).holds);
  auto r = satisfies(lz2, parse_identity("xy = y"));
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.counterexample.has_value());
  Assignment w = *r.counterexample;
  CHECK(w.at("x") != w.at("y"));
}

TEST_CASE("dual table", "[table]") {
  CHECK(dual(t::left_zero(2)) == t::right_zero(2));
  CHECK(satisfies(dual(t::left_zero(2)), parse_identity("xy = y")).holds);
  CHECK(dual(t::cyclic_group(4)) == t::cyclic_group(4));
  auto fb = t::symmetric_group3();
  CHECK(dual(dual(fb)) == fb);
}

TEST_CASE("direct products and generated subsemigroups", "[table]") {
  auto p = direct_product(t::left_zero(2), t::cyclic_group(3));
  CHECK(p.order() == 6);
  CHECK(is_completely_regular(p));
  auto sl3 = t::chain_semilattice(3);
  CHECK(subsemigroup_generated(sl3, {1}) == std::vector<Element>{1});
  auto s3 = t::symmetric_group3();
  auto all = subsemigroup_generated(s3, {1, 3});
  CHECK(all.size() <= s3.order());
  auto sub = restrict_to(sl3, {0, 2});
  CHECK(sub.order() == 2);
  CHECK(is_associative(sub));
}

TEST_CASE("adjoining zero and identity", "[table]") {
  auto z = t::adjoin_zero(t::left_zero(2));
  CHECK(z.order() == 3);
  CHECK(is_completely_regular(z));
  auto one = t::adjoin_identity(t::right_zero(2));
  CHECK(one.order() == 3);
  CHECK(is_completely_regular(one));
}

TEST_CASE("table JSON round trip and validation", "[table][io]") {
  auto s = t::symmetric_group3();
  CHECK(table_from_json(table_to_json(s)) == s);
  CHECK_THROWS_AS(table_from_json(R"({"order": 2, "op": [[1,1],[0,0]], "inv": [0,1]})"), FormatError);
  CHECK_NOTHROW(table_from_json(R"({"order": 2, "op": [[1,1],[0,0]], "inv": [0,1]})", TableCheck::none));
  CHECK_THROWS_AS(table_from_json(R"({"order": 2, "op": [[0,0],[0,0]], "inv": [0,1]})"), FormatError);
  CHECK_NOTHROW(table_from_json(R"({"order": 2, "op": [[0,0],[0,0]], "inv": [0,1]})", TableCheck::associative));
  CHECK_THROWS_AS(table_from_json(R"({"order": 2, "op": [[0,5],[0,0]], "inv": [0,1]})"), FormatError);
  CHECK_THROWS_AS(table_from_json("not json"), FormatError);
}

TEST_CASE("property: satisfaction is transported by dual and mirror", "[table][property]") {
  std::vector<Identity> ids = {parse_identity("xy = x"), parse_identity("xy = yx"), parse_identity("xyz = xzy"),
                               parse_identity("x(x)^-1 = (y)^-1y"), parse_identity("x(y)^-1 = xy")};
  for (auto const& s : oracle::all_cr_tables(2)) {
    for (auto const& id : ids) {
      CHECK(satisfies(s, id).holds == satisfies(dual(s), mirror(id)).holds);
    }
    CHECK(dual(dual(s)) == s);
  }
}

TEST_CASE("property: permuting a table preserves satisfaction", "[table][property]") {
  auto s = t::symmetric_group3();
  auto p = permute(s, {5, 4, 3, 2, 1, 0});
  CHECK(is_completely_regular(p));
  for (char const* text : {"xy = yx", "x(x)^-1 = y(y)^-1", "xyx = x"}) {
    auto id = parse_identity(text);
    CHECK(satisfies(s, id).holds == satisfies(p, id).holds);
  }
}
