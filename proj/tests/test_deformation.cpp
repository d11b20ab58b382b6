#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsc/deformation.hpp"
#include "support.hpp"

using namespace lsc;
using namespace testing_support;

namespace {

LambdaMap rank_one_table(const RingPtr& ring, const Poly& p) {
  LambdaMap t(ring, 1, 1, 1);
  t.at(0, 0)[0] = p;
  return t;
}

ModuleMap rank_one_map(const RingPtr& ring, const Poly& p) { return ModuleMap::scalar(ring, 1, p); }

ModuleMap map2(const RingPtr& ring, std::vector<std::vector<Poly>> rows) {
  ModuleMap m = ModuleMap::zero(ring, 2, 2);
  for (std::size_t i = 0; i < 2; ++i) m.images[i] = Element(rows[i]);
  return m;
}

ModuleMap random_map(Gen& g, const RingPtr& ring, std::size_t rank, int deg) {
  ModuleMap m = ModuleMap::zero(ring, rank, rank);
  for (auto& img : m.images)
    for (auto& p : img.c) p = g.poly(ring, {ring->d()}, deg, 2);
  return m;
}

bool all_zero(const std::vector<LambdaMap>& ts) {
  for (const auto& t : ts)
    if (!t.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("scalar Nijenhuis operators on A_c") {
  Vars v;
  const Poly c = v.p("c");
  auto a = a_c(v, c);
  for (const Poly& kappa : {v.k(0), v.k(1), v.p("k"), v.q(-2, 3)}) {
    ModuleMap n = rank_one_map(v.ring, kappa);
    CHECK(nijenhuis_check(a, n).pass);
    // a ._N a = kappa (D + L + c)
    CHECK(nijenhuis_product(a, n).at(0, 0)[0] == kappa * (v.D + v.L + c));
    auto eq = trivial_equiv_check(a, nijenhuis_product(a, n), n);
    CHECK(eq.pass());
    CHECK(sub_adjacent_nijenhuis(a, n).lsc);
    CHECK(sub_adjacent_nijenhuis(a, n).holds());
  }
  auto deformed = nijenhuis_deformed(a, rank_one_map(v.ring, v.k(3)));
  CHECK(deformed.product.at(0, 0)[0] == v.k(3) * (v.D + v.L + c));
}

TEST_CASE("N = D is not Nijenhuis on A_c") {
  Vars v;
  const Poly c = v.p("c");
  auto a = a_c(v, c);
  ModuleMap n = rank_one_map(v.ring, v.D);
  // (Da)_L b = -L a_L b and a_L (Db) = (D + L) a_L b, so a ._N a = 0
  CHECK(nijenhuis_product(a, n).is_zero());
  auto nc = nijenhuis_check(a, n);
  REQUIRE_FALSE(nc.pass);
  REQUIRE(nc.residuals.size() == 1);
  CHECK(nc.residuals[0].value[0] == -v.L * (v.D + v.L) * (v.D + v.L + c));
  CHECK_THROWS_AS(nijenhuis_deformed(a, n), std::invalid_argument);

  auto eq = trivial_equiv_check(a, nijenhuis_product(a, n), n);
  CHECK(eq.find("order-t")->pass);
  const auto* t2 = eq.find("order-t2");
  REQUIRE_FALSE(t2->pass);
  CHECK(t2->residuals[0].value[0] == v.L * (v.D + v.L) * (v.D + v.L + c));
  CHECK(eq.find("order-t3")->pass);
}

TEST_CASE("the Nijenhuis product is the coboundary of N") {
  Vars v;
  Gen g(11);
  auto seeds = lsa_seeds();
  for (int round = 0; round < 6; ++round) {
    auto a = current_algebra(v.ring, FreeModule({"e1", "e2"}), transform(seeds[round % seeds.size()], g.invertible2()));
    ModuleMap n = random_map(g, v.ring, 2, 2);
    Cochain dn = delta_lsc(a, adjoint_rep(a), cochain_from_map(v.ring, n));
    CHECK(dn == cochain_from_table(v.ring, nijenhuis_product(a, n)));
    // first order of id + tN against (. + t delta N) never fails
    auto eq = trivial_equiv_check(a, nijenhuis_product(a, n), n);
    CHECK(eq.find("order-t")->pass);
    CHECK(eq.find("order-t2")->pass == nijenhuis_check(a, n).pass);
  }
}

TEST_CASE("non-scalar Nijenhuis operators in rank two") {
  Vars v;
  auto seeds = lsa_seeds();
  const RingPtr& r = v.ring;
  {
    // two orthogonal idempotents, N = diag(1, k)
    auto a = current_algebra(r, FreeModule({"e1", "e2"}), seeds[3]);
    ModuleMap n = map2(r, {{v.k(1), v.k(0)}, {v.k(0), v.p("k")}});
    CHECK(nijenhuis_check(a, n).pass);
    auto t = sub_adjacent_nijenhuis(a, n);
    CHECK(t.lsc);
    CHECK(t.lie);
    auto b = nijenhuis_deformed(a, n);
    CHECK(b.product.at(1, 1)[1] == v.p("k"));
  }
  {
    // e1 e1 = e2, N e1 = e2, N e2 = 0
    auto a = current_algebra(r, FreeModule({"e1", "e2"}), seeds[1]);
    ModuleMap n = map2(r, {{v.k(0), v.k(1)}, {v.k(0), v.k(0)}});
    CHECK(nijenhuis_product(a, n).is_zero());
    CHECK(nijenhuis_check(a, n).pass);
    CHECK(trivial_equiv_check(a, nijenhuis_product(a, n), n).pass());
  }
  {
    // e1 acts as a unit, e2^2 = 0; N e1 = e2 gives e1 ._N e1 = e2 and N(e2) = 0
    auto a = current_algebra(r, FreeModule({"e1", "e2"}), seeds[2]);
    ModuleMap n = map2(r, {{v.k(0), v.k(1)}, {v.k(0), v.k(0)}});
    CHECK(nijenhuis_product(a, n).at(0, 0) == vec({v.k(0), v.k(1)}));
    CHECK(nijenhuis_check(a, n).pass);
  }
}

TEST_CASE("Nijenhuis operators transfer to the sub-adjacent algebra") {
  Vars v;
  Gen g(23);
  auto seeds = lsa_seeds();
  int lsc_hits = 0;
  for (int round = 0; round < 40; ++round) {
    auto a = current_algebra(v.ring, FreeModule({"e1", "e2"}), transform(seeds[round % seeds.size()], g.invertible2()));
    // constant maps hit the Nijenhuis locus often enough to make the test meaningful
    ModuleMap n = ModuleMap::zero(v.ring, 2, 2);
    for (auto& img : n.images)
      for (auto& p : img.c) p = Poly(v.ring, g.integer(-1, 1));
    auto t = sub_adjacent_nijenhuis(a, n);
    lsc_hits += t.lsc;
    CHECK(t.holds());
  }
  CHECK(lsc_hits > 5);
}

TEST_CASE("linear deformations") {
  Vars v;
  const Poly c = v.p("c");
  auto a = a_c(v, c);
  // omega = the product itself: (1 + T) times the product
  auto rep = check_linear_deformation(a, a.product);
  CHECK(rep.pass());

  Gen g(5);
  int passes = 0;
  for (int round = 0; round < 30; ++round) {
    Poly w = g.poly(v.ring, {v.ring->d(), v.ring->lambda(1)}, 2, 2);
    auto r = check_linear_deformation(a, rank_one_table(v.ring, w));
    bool cocycle = r.find("cocycle")->pass, own = r.find("omega-lsc")->pass;
    CHECK(r.find("deformed-product")->pass == (cocycle && own));
    passes += r.pass();
  }
  // constant multiples of the product and of D + L
  for (const Poly& w : {v.k(2) * (v.D + v.L + c), v.D + v.L}) passes += check_linear_deformation(a, rank_one_table(v.ring, w)).pass();
  CHECK(passes >= 1);
}

TEST_CASE("tilde omega") {
  Vars v;
  const Poly c = v.p("c");
  auto a = a_c(v, c);
  Cochain w = cochain_from_table(v.ring, a.product);
  Cochain t = tilde_omega(v.ring, w);
  CHECK(t.flavor == Flavor::lie);
  CHECK(t.table[0][0] == v.D + v.k(2) * v.L);
  CHECK(validate_cochain(v.ring, t).pass());

  auto r = sub_adjacent(a);
  CHECK(check_lie_linear_deformation(r, table_from_cochain(v.ring, t)).pass());

  // every LSC 2-cocycle that is itself left-symmetric gives a Lie deformation
  Gen g(31);
  auto seeds = lsa_seeds();
  for (int round = 0; round < 6; ++round) {
    auto b = current_algebra(v.ring, FreeModule({"e1", "e2"}), transform(seeds[round % seeds.size()], g.invertible2()));
    ModuleMap n = random_map(g, v.ring, 2, 1);
    Cochain omega = delta_lsc(b, adjoint_rep(b), cochain_from_map(v.ring, n));
    Cochain om_t = tilde_omega(v.ring, omega);
    Cochain d = d_lie(v.ring, sub_adjacent(b).bracket, module_action(v.ring, sub_adjacent(b).bracket), om_t);
    CHECK(d.is_zero());
    if (check_linear_deformation(b, table_from_cochain(v.ring, omega)).pass())
      CHECK(check_lie_linear_deformation(sub_adjacent(b), table_from_cochain(v.ring, om_t)).pass());
  }
}

TEST_CASE("formal deformations: first order is the cocycle condition") {
  Vars v;
  const Poly c = v.p("c");
  auto a = a_c(v, c);
  Gen g(41);
  for (int round = 0; round < 20; ++round) {
    Poly w = g.poly(v.ring, {v.ring->d(), v.ring->lambda(1)}, 2, 2);
    auto r = formal_check(a, {rank_one_table(v.ring, w)}, 2);
    CHECK(r.find("order-1")->pass == r.find("theta1-cocycle")->pass);
  }
  // theta_t = (1 + t) times the product
  CHECK(formal_check(a, {a.product}, 3).pass());
  // any scalar series times the product is a formal deformation
  CHECK(formal_check(a, {a.product, a.product}, 3).pass());
  // theta_1 = 0, theta_2 = L fails at order 2
  auto r = formal_check(a, {LambdaMap(v.ring, 1, 1, 1), rank_one_table(v.ring, v.L)}, 3);
  CHECK(r.find("order-1")->pass);
  CHECK_FALSE(r.find("order-2")->pass);
}

TEST_CASE("transport by a formal equivalence") {
  Vars v;
  const Poly c = v.p("c");
  auto a = a_c(v, c);
  const Poly k = v.p("k");
  // phi = id + t k id: phi(theta'(a, b)) = (1 + t k)^2 P(a, b), so theta' = (1 + t k) P
  auto th = formal_equiv_apply(a, {}, {rank_one_map(v.ring, k)}, 4);
  REQUIRE(th.size() == 4);
  CHECK(th[0].at(0, 0)[0] == k * (v.D + v.L + c));
  CHECK(th[1].is_zero());
  CHECK(th[2].is_zero());
  CHECK(th[3].is_zero());

  // series composition is associative and has id as unit
  Gen g(3);
  MapSeries f{ModuleMap::identity(v.ring, 1), random_map(g, v.ring, 1, 2), random_map(g, v.ring, 1, 1)};
  MapSeries h{ModuleMap::identity(v.ring, 1), random_map(g, v.ring, 1, 1)};
  MapSeries e{ModuleMap::identity(v.ring, 1), random_map(g, v.ring, 1, 2)};
  MapSeries unit{ModuleMap::identity(v.ring, 1)};
  CHECK(compose_series(f, unit, 3) == compose_series(unit, f, 3));
  CHECK(compose_series(compose_series(f, h, 3), e, 3) == compose_series(f, compose_series(h, e, 3), 3));

  // transporting twice = transporting by the composite
  auto once = formal_equiv_apply(a, {}, {f[1], f[2]}, 3);
  auto twice = formal_equiv_apply(a, once, {h[1]}, 3);
  auto comp = compose_series(f, h, 3);
  CHECK(twice == formal_equiv_apply(a, {}, {comp[1], comp[2], comp[3]}, 3));

  // transported families are formal deformations
  CHECK(formal_check(a, once, 3).pass());
}

TEST_CASE("normalizing planted trivial deformations") {
  Vars v;
  const Poly c = v.p("c");
  auto a = a_c(v, c);
  Gen g(17);
  for (int round = 0; round < 4; ++round) {
    std::vector<ModuleMap> planted{random_map(g, v.ring, 1, 2), random_map(g, v.ring, 1, 1)};
    auto thetas = formal_equiv_apply(a, {}, planted, 3);
    auto res = formal_normalize(a, thetas, 3, 3);
    REQUIRE(res.trivialized);
    CHECK(res.obstruction_order == 0);
    CHECK(all_zero(formal_equiv_apply(a, thetas, res.phi, 3)));
  }
  {
    const Poly k = v.p("k");
    auto thetas = formal_equiv_apply(a, {}, {rank_one_map(v.ring, k)}, 3);
    auto res = formal_normalize(a, thetas, 3, 1);
    REQUIRE(res.trivialized);
    CHECK(res.phi[0] == rank_one_map(v.ring, -k));
    CHECK(all_zero(formal_equiv_apply(a, thetas, res.phi, 3)));
  }
  {
    // rank two, non-scalar planted map on two orthogonal idempotents
    auto b = current_algebra(v.ring, FreeModule({"e1", "e2"}), lsa_seeds()[3]);
    ModuleMap n = map2(v.ring, {{v.k(1), v.k(0)}, {v.k(0), v.k(-1)}});
    auto thetas = formal_equiv_apply(b, {}, {n}, 3);
    auto res = formal_normalize(b, thetas, 3, 2);
    REQUIRE(res.trivialized);
    CHECK(all_zero(formal_equiv_apply(b, thetas, res.phi, 3)));
  }
}

TEST_CASE("normalization stops at a non-coboundary") {
  Vars v;
  auto a = a_c(v, v.p("c"));
  // theta_1 = L is not a cocycle of A_c, while 1 is (it shifts c)
  CHECK(check_linear_deformation(a, rank_one_table(v.ring, v.k(1))).pass());
  auto bad = rank_one_table(v.ring, v.L);
  CHECK_FALSE(check_linear_deformation(a, bad).find("cocycle")->pass);
  auto res = formal_normalize(a, {bad}, 2, 3);
  CHECK_FALSE(res.trivialized);
  CHECK(res.obstruction_order == 1);
  REQUIRE(res.obstruction);
  CHECK(*res.obstruction == bad);
}
