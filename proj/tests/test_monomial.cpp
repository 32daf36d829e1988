#include <gtest/gtest.h>

#include <random>

#include "gbe/monomial.hpp"
#include "oracles.hpp"

using namespace gbe;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

/// Ideal membership agreement on every monomial up to the given degree.
void expect_same_ideal_up_to(const MonomialIdeal& a, const std::vector<Monomial>& gens_b, int max_deg) {
  for (int d = 0; d <= max_deg; ++d)
    for (const auto& m : oracle::monomials_of_degree(a.nvars(), d))
      EXPECT_EQ(a.contains(m), oracle::in_ideal(gens_b, m)) << monomial_str(m);
}

MonomialIdeal random_squarefree_ideal(std::mt19937& rng, int nv, int gens) {
  std::uniform_int_distribution<int> pick(0, nv - 1);
  std::vector<Monomial> g;
  for (int k = 0; k < gens; ++k) {
    Monomial m = Monomial::var(nv, pick(rng));
    int other = pick(rng);
    if (m[other] == 0) m = m * Monomial::var(nv, other);
    g.push_back(m);
  }
  return MonomialIdeal(nv, g);
}

}  // namespace

TEST(Monomial, Arithmetic) {
  Monomial a = mono({2, 0, 1}), b = mono({1, 3, 0});
  EXPECT_EQ(a * b, mono({3, 3, 1}));
  EXPECT_EQ(lcm(a, b), mono({2, 3, 1}));
  EXPECT_EQ(gcd(a, b), mono({1, 0, 0}));
  EXPECT_TRUE(mono({1, 0, 1}).divides(a));
  EXPECT_FALSE(b.divides(a));
  EXPECT_THROW(a / b, Error);
  EXPECT_EQ(a.degree(), 3);
  // Lex with the first variable largest.
  EXPECT_GT(mono({1, 0, 0}), mono({0, 5, 5}));
  EXPECT_THROW(mono({-1}), Error);
}

TEST(MonomialIdeal, MinimalizesAndSorts) {
  MonomialIdeal i(2, {mono({1, 1}), mono({1, 0}), mono({0, 2}), mono({1, 0})});
  ASSERT_EQ(i.num_generators(), 2);
  EXPECT_EQ(i.generators()[0], mono({1, 0}));
  EXPECT_EQ(i.generators()[1], mono({0, 2}));
}

TEST(EdgeIdeal, Examples) {
  EXPECT_EQ(edge_ideal(Graph::path(2)).num_generators(), 1);
  GridParams p23(2, 3);
  MonomialIdeal i = edge_ideal_H(p23);
  ASSERT_EQ(i.num_generators(), 2);
  EXPECT_EQ(i.generators()[0], Monomial::var(6, p23.var(1, 1)) * Monomial::var(6, p23.var(2, 2)));
  EXPECT_EQ(i.generators()[1], Monomial::var(6, p23.var(1, 2)) * Monomial::var(6, p23.var(2, 3)));
  EXPECT_EQ(edge_ideal_H(GridParams(3, 3)).num_generators(), 6);
  MonomialIdeal h33 = edge_ideal_H(GridParams(3, 3));
  for (const auto& g : h33.generators()) EXPECT_EQ(g.degree(), 2);
}

TEST(Power, Examples) {
  MonomialIdeal x(1, {mono({1})});
  EXPECT_EQ(power(x, 3), MonomialIdeal(1, {mono({3})}));
  MonomialIdeal i = edge_ideal_H(GridParams(2, 3));
  EXPECT_EQ(power(i, 2).num_generators(), 3);
  EXPECT_EQ(power(i, 1), i);
  EXPECT_THROW(power(i, 0), Error);
}

TEST(Power, ProductOfPowers) {
  MonomialIdeal i = edge_ideal_H(GridParams(3, 3));
  for (int s = 1; s <= 2; ++s)
    for (int t = 1; t <= 2; ++t) EXPECT_EQ(product(power(i, s), power(i, t)), power(i, s + t));
}

TEST(IntersectColon, Examples) {
  MonomialIdeal x(2, {mono({1, 0})}), y(2, {mono({0, 1})});
  EXPECT_EQ(intersect(x, y), MonomialIdeal(2, {mono({1, 1})}));
  MonomialIdeal a(2, {mono({2, 0}), mono({1, 1})});
  EXPECT_EQ(colon(a, x), MonomialIdeal(2, {mono({1, 0}), mono({0, 1})}));
  MonomialIdeal h = edge_ideal_H(GridParams(3, 3));
  EXPECT_EQ(colon(power(h, 2), h), h);
}

TEST(IntersectColon, AgreeWithDefinitions) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    MonomialIdeal a = random_squarefree_ideal(rng, 4, 3);
    MonomialIdeal b = random_squarefree_ideal(rng, 4, 2);
    MonomialIdeal meet = intersect(a, b);
    MonomialIdeal quot = colon(a, b);
    for (int d = 0; d <= 4; ++d)
      for (const auto& m : oracle::monomials_of_degree(4, d)) {
        EXPECT_EQ(meet.contains(m), a.contains(m) && b.contains(m));
        bool in_colon = std::all_of(b.generators().begin(), b.generators().end(),
                                    [&](const Monomial& g) { return a.contains(m * g); });
        EXPECT_EQ(quot.contains(m), in_colon);
      }
  }
}

TEST(MinimalPrimes, Examples) {
  auto xy = minimal_primes(MonomialIdeal(2, {mono({1, 1})}));
  EXPECT_EQ(xy, (std::vector<PrimeSupport>{{{0}}, {{1}}}));
  auto p3 = minimal_primes(edge_ideal(Graph::path(3)));
  EXPECT_EQ(p3, (std::vector<PrimeSupport>{{{0, 2}}, {{1}}}));
  EXPECT_EQ(minimal_primes(edge_ideal_H(GridParams(2, 3))).size(), 4u);
  EXPECT_THROW(minimal_primes(MonomialIdeal(1, {mono({2})})), Error);
}

TEST(MinimalPrimes, AgreeWithBruteForceCovers) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    MonomialIdeal i = random_squarefree_ideal(rng, 7, 2 + trial % 6);
    std::vector<std::vector<int>> edges;
    for (const auto& g : i.generators()) edges.push_back(g.support());
    std::vector<std::vector<int>> got;
    for (const auto& p : minimal_primes(i)) got.push_back(p.variables);
    EXPECT_EQ(got, oracle::brute_force_min_covers(7, edges));
  }
}

TEST(SymbolicPower, Examples) {
  MonomialIdeal xy(2, {mono({1, 1})});
  EXPECT_EQ(symbolic_power(xy, 2), MonomialIdeal(2, {mono({2, 2})}));
  MonomialIdeal h = edge_ideal_H(GridParams(2, 3));
  EXPECT_EQ(symbolic_power(h, 2), power(h, 2));
  MonomialIdeal tri = edge_ideal(Graph::cycle(3));
  MonomialIdeal s2 = symbolic_power(tri, 2);
  EXPECT_TRUE(s2.contains(power(tri, 2)));
  EXPECT_TRUE(s2.contains(mono({1, 1, 1})));
  EXPECT_FALSE(power(tri, 2).contains(mono({1, 1, 1})));
  EXPECT_THROW(symbolic_power(MonomialIdeal(1, {mono({2})}), 2), Error);
}

TEST(SymbolicPower, EqualsOrdinaryForBipartiteGraphs) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 3}, {3, 4}, {4, 3}}) {
    MonomialIdeal h = edge_ideal_H(GridParams(m, n));
    for (int t = 1; t <= 3; ++t) {
      MonomialIdeal s = symbolic_power(h, t);
      EXPECT_TRUE(s.contains(power(h, t)));
      EXPECT_EQ(s, power(h, t)) << m << "x" << n << " t=" << t;
    }
  }
}

TEST(StrongPersistence, Examples) {
  MonomialIdeal principal(2, {mono({1, 2})});
  for (bool ok : strong_persistence_check(principal, 3)) EXPECT_TRUE(ok);
  for (bool ok : strong_persistence_check(edge_ideal_H(GridParams(3, 3)), 3)) EXPECT_TRUE(ok);
  for (bool ok : strong_persistence_check(edge_ideal_H(GridParams(2, 4)), 3)) EXPECT_TRUE(ok);
  EXPECT_THROW(strong_persistence_check(principal, 0), Error);
}

TEST(ComparabilityIdeal, Examples) {
  GridParams p(3, 3);
  EXPECT_EQ(comparability_initial_ideal(p, {1, 2}, {1, 2}),
            MonomialIdeal(9, {Monomial::var(9, p.var(1, 1)) * Monomial::var(9, p.var(2, 2))}));
  EXPECT_EQ(comparability_initial_ideal(p, {1, 2, 3}, {1, 2, 3}).num_generators(), 9);
  EXPECT_THROW(comparability_initial_ideal(p, {1}, {1, 2}), Error);
}

TEST(InitialPrimaryComponent, Examples) {
  GridParams p23(2, 3);
  EXPECT_EQ(initial_primary_component(p23, {2}),
            MonomialIdeal(6, {Monomial::var(6, p23.var(1, 2)), Monomial::var(6, p23.var(2, 2))}));
  GridParams p33(3, 3);
  EXPECT_EQ(initial_primary_component(p33, {}), comparability_initial_ideal(p33, {1, 2, 3}, {1, 2, 3}));
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {3, 4}, {2, 5}, {4, 4}}) {
    GridParams p(m, n);
    EXPECT_EQ(intersect_initial_components(p), edge_ideal_H(p)) << m << "x" << n;
  }
}
