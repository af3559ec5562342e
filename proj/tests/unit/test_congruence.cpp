#include "catch_amalgamated.hpp"
#include "crvar/congruence.hpp"
#include "crvar/errors.hpp"
#include "crvar/free_band.hpp"
#include "crvar/standard_tables.hpp"
#include "oracles.hpp"

using namespace crvar;
namespace t = crvar::tables;

TEST_CASE("equivalence relations normalise block ids", "[congruence]") {
  EquivalenceRelation a({3, 3, 7});
  EquivalenceRelation b({0, 0, 1});
  CHECK(a == b);
  CHECK(a.num_blocks() == 2);
  CHECK(EquivalenceRelation::identity(3).refines(a));
  CHECK(a.refines(EquivalenceRelation::universal(3)));
  CHECK(join(EquivalenceRelation({0, 0, 1, 2}), EquivalenceRelation({0, 1, 1, 2})) ==
        EquivalenceRelation({0, 0, 0, 1}));
  CHECK(meet(EquivalenceRelation({0, 0, 1}), EquivalenceRelation({0, 1, 1})).is_identity());
}

TEST_CASE("Green relations of a left zero band and of a group", "[congruence]") {
  auto g = green(t::left_zero(2));
  CHECK(g.L.is_universal());
  CHECK(g.R.is_identity());
  CHECK(g.H.is_identity());
  CHECK(g.D.is_universal());

  auto gz = green(t::cyclic_group(3));
  CHECK(gz.L.is_universal());
  CHECK(gz.R.is_universal());
  CHECK(gz.H.is_universal());
  CHECK(gz.D.is_universal());
}

TEST_CASE("largest congruence within trivial bounds", "[congruence]") {
  auto s = t::symmetric_group3();
  CHECK(largest_congruence_within(s, EquivalenceRelation::identity(6)).relation().is_identity());
  CHECK(largest_congruence_within(s, EquivalenceRelation::universal(6)).relation().is_universal());
}

TEST_CASE("named congruences on small tables", "[congruence]") {
  CHECK(L0(t::left_zero(2)).relation().is_universal());
  CHECK(R0(t::left_zero(2)).relation().is_identity());
  CHECK(H0(t::cyclic_group(4)).relation().is_universal());
  CHECK(tau(t::rectangular_band(2, 2)).relation().is_universal());
  CHECK(tau(t::cyclic_group(2)).relation().is_identity());
}

TEST_CASE("tau on a band with a group adjoined keeps idempotents apart", "[congruence]") {
  auto s = direct_product(t::cyclic_group(2), t::left_zero(2));
  auto ker = kernel_trace(s, tau(s)).kernel;
  CHECK(ker == idempotents(s));
  auto z = t::adjoin_zero(t::cyclic_group(3));
  CHECK(kernel_trace(z, tau(z)).kernel == idempotents(z));
}

TEST_CASE("kernel and trace of identity and universal congruences", "[congruence]") {
  auto s = t::adjoin_identity(t::cyclic_group(2));
  auto id = Congruence::checked(s, EquivalenceRelation::identity(s.order()));
  auto kt = kernel_trace(s, id);
  CHECK(kt.kernel == idempotents(s));
  CHECK(kt.trace.is_identity());
  auto all = Congruence::checked(s, EquivalenceRelation::universal(s.order()));
  CHECK(kernel_trace(s, all).kernel.size() == s.order());
}

TEST_CASE("relate flags", "[congruence]") {
  auto z = t::cyclic_group(3);
  auto id = Congruence::checked(z, EquivalenceRelation::identity(3));
  auto all = Congruence::checked(z, EquivalenceRelation::universal(3));
  CHECK(relate(z, id, id) == kAllRelationFlags);
  CHECK((relate(z, id, all) & kFlagK) == 0);
  CHECK((relate(z, id, all) & kFlagT) != 0);
}

TEST_CASE("quotients", "[congruence]") {
  auto s = t::symmetric_group3();
  auto id = Congruence::checked(s, EquivalenceRelation::identity(6));
  CHECK(quotient(s, id) == s);
  CHECK(quotient(s, Congruence::checked(s, EquivalenceRelation::universal(6))).order() == 1);
  auto fb2 = free_band(2);
  CHECK(quotient(fb2, H0(fb2)).order() == 6);
  CHECK_THROWS_AS(quotient(t::chain_semilattice(3), EquivalenceRelation({0, 1, 0})), NotCongruence);
  CHECK_THROWS_AS(Congruence::checked(t::chain_semilattice(3), EquivalenceRelation({0, 1, 0})), NotCongruence);
}

TEST_CASE("Rees quotients", "[congruence]") {
  auto sl2 = t::chain_semilattice(2);
  CHECK(rees_quotient(sl2, {0, 1}).order() == 1);
  auto r = rees_quotient(sl2, {0});
  CHECK(r.order() == 2);
  CHECK(permute(r, {1, 0}) == t::chain_semilattice(2));
  CHECK_THROWS_AS(rees_quotient(sl2, {1}), NotIdeal);
  for (auto const& s : t::curated_battery()) {
    auto d = least_d_class(s);
    INFO(s.name());
    CHECK(is_completely_regular(rees_quotient(s, d)));
  }
}

TEST_CASE("least D-class congruences", "[congruence]") {
  CHECK(least_d_congruence(t::cyclic_group(3), GreenKind::H).relation().is_universal());
  CHECK(least_d_congruence(t::chain_semilattice(2), GreenKind::L).relation().is_identity());
  for (auto const& s : t::curated_battery()) {
    INFO(s.name());
    auto d = least_d_class(s);
    auto g = green(s);
    auto rl = least_d_congruence(s, GreenKind::L).relation();
    CHECK(is_congruence(s, rl));
    CHECK(is_congruence(s, least_d_congruence(s, GreenKind::R).relation()));
    CHECK(is_congruence(s, least_d_congruence(s, GreenKind::H).relation()));
    for (Element a : d) {
      for (Element b : d) {
        if (rl.related(a, b)) CHECK(g.L.related(a, b));
      }
    }
  }
}

TEST_CASE("property: largest congruence within matches brute force", "[congruence][property]") {
  for (auto const& s : oracle::all_cr_tables(3)) {
    for (auto const& theta : oracle::all_partitions(3)) {
      REQUIRE(largest_congruence_within(s, theta).relation() == oracle::brute_largest_within(s, theta));
    }
  }
}

TEST_CASE("property: Green relations and named congruences swap under dual", "[congruence][property]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& s : oracle::all_cr_tables(n)) {
      auto g = green(s), gd = green(dual(s));
      CHECK(g.L == gd.R);
      CHECK(g.R == gd.L);
      CHECK(g.H == gd.H);
      CHECK(L0(s).relation() == R0(dual(s)).relation());
      for (auto const& p : oracle::all_congruences(s)) {
        auto rho = Congruence::checked(s, p);
        auto rho_d = Congruence::checked(dual(s), p);
        CHECK(kernel_trace(s, rho).left_trace == kernel_trace(dual(s), rho_d).right_trace);
      }
    }
  }
}

TEST_CASE("property: quotients of CR tables are CR", "[congruence][property]") {
  for (auto const& s : t::curated_battery()) {
    for (auto const& c : {L0(s), R0(s), H0(s), tau(s)}) {
      CHECK(is_completely_regular(quotient(s, c)));
    }
  }
}
