#include <gtest/gtest.h>

#include <random>

#include "nlsa/algebra.hpp"
#include "nlsa/error.hpp"
#include "nlsa/fixtures.hpp"
#include "nlsa/io.hpp"
#include "oracles.hpp"

using namespace nlsa;

namespace {

GradedSubspace coords(const NLieSuperalgebra& g, std::vector<std::size_t> idx) {
  return GradedSubspace::coordinate(g.parities(), idx);
}

NLieSuperalgebra mutate(const NLieSuperalgebra& g, std::mt19937_64& rng) {
  WedgeBasis words(g.parities(), g.arity());
  auto c = g.constants();
  const Word& w = words.word(rng() % words.size());
  std::uniform_int_distribution<int> dv(1, 3);
  Vec& v = c[w];
  if (v.empty()) v = Vec(g.dim());
  v[rng() % g.dim()] += Rational(rng() % 2 ? dv(rng) : -dv(rng));
  return NLieSuperalgebra(g.name() + "~", g.arity(), g.space(), c);
}

}  // namespace

TEST(Axioms, ZooPasses) {
  for (const auto& g : fixtures::zoo()) {
    auto r = check_axioms(g);
    EXPECT_TRUE(r.ok()) << g.name();
    EXPECT_TRUE(oracle::filippov_holds(g)) << g.name();
  }
}

TEST(Axioms, SkewSignsOnFixtures) {
  for (const auto& g : fixtures::zoo()) {
    const auto& par = g.parities();
    oracle::for_tuples(g.dim(), g.arity(), [&](const std::vector<std::size_t>& t) {
      auto c = canonicalize(t, par);
      Vec b = g.bracket_basis(t);
      if (!c) {
        EXPECT_TRUE(is_zero(b));
        return;
      }
      Vec expect = g.bracket_basis(c->word);
      for (auto& x : expect) x *= Rational(oracle::inversion_sign(t, par));
      EXPECT_EQ(b, expect);
    });
  }
}

// Replacing the value of [e1,e2,e3] gives [e1,e2,e3] = e1, which is a genuine 3-Lie algebra.
TEST(Axioms, ReplacedConstantStillValid) {
  auto c = fixtures::l1().constants();
  c[{0, 1, 2}] = Vec{1, 0, 0, 0};
  NLieSuperalgebra alt("L1~", 3, fixtures::l1().space(), c);
  EXPECT_TRUE(check_axioms(alt).ok());
  EXPECT_TRUE(oracle::filippov_holds(alt));
}

TEST(Axioms, MutationCaught) {
  auto c = fixtures::l1().constants();
  c[{0, 1, 3}] = Vec{1, 0, 0, 0};
  NLieSuperalgebra bad("L1~", 3, fixtures::l1().space(), c);
  auto r = check_axioms(bad);
  ASSERT_FALSE(r.ok());
  ASSERT_TRUE(r.violation.has_value());
  EXPECT_EQ(r.violation->axiom, "filippov");
  EXPECT_FALSE(oracle::filippov_holds(bad));
}

// Every random single-constant mutation is judged against the brute-force oracle.
TEST(Axioms, RandomMutationsAgreeWithOracle) {
  std::mt19937_64 rng(2024);
  int failures = 0;
  for (const auto& base : {fixtures::l1(), fixtures::l2()}) {
    for (int i = 0; i < 20; ++i) {
      auto m = mutate(base, rng);
      auto r = check_axioms(m);
      bool graded = true;
      for (const auto& [w, v] : m.constants()) {
        Parity p = word_parity(w, m.parities());
        for (std::size_t j = 0; j < v.size(); ++j)
          if (!v[j].is_zero() && m.parities()[j] != p) graded = false;
      }
      EXPECT_EQ(r.ok(), graded && oracle::filippov_holds(m));
      if (!r.ok()) {
        ++failures;
        ASSERT_TRUE(r.violation.has_value());
        const auto& e = r.violation->axiom;
        EXPECT_TRUE(e == "grading" || e == "skew" || e == "filippov");
        EXPECT_FALSE(r.violation->args.empty());
      }
    }
  }
  EXPECT_GT(failures, 0);
}

TEST(Axioms, SkewDefectThroughLoading) {
  Json j = algebra_to_json(fixtures::l1());
  j["brackets"].push_back(Json{{"args", {"e1", "e1", "e2"}}, {"value", {{"e4", "1"}}}});
  auto loaded = parse_algebra(j);
  ASSERT_TRUE(loaded.skew_defect.has_value());
  EXPECT_EQ(loaded.skew_defect->axiom, "skew");
  Json k = algebra_to_json(fixtures::l1());
  k["brackets"].push_back(Json{{"args", {"e2", "e1", "e3"}}, {"value", {{"e4", "1"}}}});
  auto l2 = parse_algebra(k);
  ASSERT_TRUE(l2.skew_defect.has_value());
  EXPECT_EQ(l2.skew_defect->axiom, "skew");
  EXPECT_THROW((void)algebra_from_json(k), Error);
}

TEST(Axioms, GradingViolation) {
  auto c = fixtures::l2().constants();
  c[{0, 1, 2}] = Vec{0, 0, 0, 1};
  c[{0, 1, 3}] = Vec{1, 0, 0, 0};  // odd word onto an even vector
  auto r = check_axioms(NLieSuperalgebra("bad", 3, fixtures::l2().space(), c));
  EXPECT_FALSE(r.grading);
  EXPECT_EQ(r.violation->axiom, "grading");
}

TEST(Series, Examples) {
  auto ab = fixtures::abelian(2, 2, 3);
  auto s = series(ab);
  EXPECT_EQ(s.solvable_length, 1u);
  EXPECT_EQ(s.nilpotent_length, 1u);

  auto l1 = fixtures::l1();
  auto r = series(l1);
  ASSERT_GE(r.lower_central.size(), 3u);
  EXPECT_EQ(r.lower_central[1], coords(l1, {3}));
  EXPECT_TRUE(r.lower_central[2].is_zero());
  EXPECT_EQ(r.nilpotent_length, 2u);
  EXPECT_EQ(r.solvable_length, 2u);
  EXPECT_EQ(series(fixtures::l2()).nilpotent_length, 2u);

  for (const auto& g : fixtures::zoo()) {
    auto x = series(g);
    EXPECT_EQ(x.nilpotent_length, oracle::nilpotent_length(g)) << g.name();
    EXPECT_EQ(x.solvable_length, oracle::solvable_length(g)) << g.name();
    for (std::size_t i = 1; i < x.lower_central.size(); ++i)
      EXPECT_TRUE(x.lower_central[i - 1].contains(x.lower_central[i]));
    for (std::size_t i = 1; i < x.derived.size(); ++i) EXPECT_TRUE(x.derived[i - 1].contains(x.derived[i]));
    for (std::size_t i = 1; i < x.centralizer.size(); ++i)
      EXPECT_TRUE(x.centralizer[i].contains(x.centralizer[i - 1]));
  }
}

TEST(Series, S1) {
  auto s = series(fixtures::s1());
  EXPECT_EQ(s.nilpotent_length, 2u);
  EXPECT_EQ(s.solvable_length, 2u);
}

TEST(Ideals, Examples) {
  auto l1 = fixtures::l1();
  EXPECT_TRUE(is_graded_ideal(l1, nothing(l1)));
  EXPECT_TRUE(is_abelian_ideal(l1, nothing(l1)));
  EXPECT_TRUE(is_abelian_ideal(l1, coords(l1, {3})));
  EXPECT_FALSE(is_graded_ideal(l1, coords(l1, {0})));
  EXPECT_TRUE(is_graded_ideal(l1, whole(l1)));
  EXPECT_FALSE(is_abelian_ideal(l1, whole(l1)));
}

TEST(Quotient, Examples) {
  auto l1 = fixtures::l1();
  auto q0 = quotient(l1, nothing(l1));
  EXPECT_EQ(q0.algebra.constants(), l1.constants());
  auto q = quotient(l1, coords(l1, {3}));
  EXPECT_EQ(q.algebra.dim(), 3u);
  EXPECT_TRUE(q.algebra.is_abelian());
  auto l2 = fixtures::l2();
  auto q2 = quotient(l2, coords(l2, {3}));
  EXPECT_EQ(q2.algebra.space().dim_even(), 2u);
  EXPECT_EQ(q2.algebra.space().dim_odd(), 1u);
  EXPECT_TRUE(q2.algebra.is_abelian());
  EXPECT_FALSE(homomorphism_defect(l2, q2.algebra, q2.projection).has_value());
  try {
    (void)quotient(l1, coords(l1, {0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnIdeal);
  }
}

// Quotients by every ideal spanned by a set of basis vectors or a series term.
TEST(Quotient, AxiomsHoldForIdeals) {
  for (const auto& g : fixtures::zoo()) {
    std::vector<GradedSubspace> ideals;
    for (std::size_t mask = 0; mask < (1u << g.dim()); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < g.dim(); ++i)
        if (mask >> i & 1) idx.push_back(i);
      auto s = coords(g, idx);
      if (is_graded_ideal(g, s)) ideals.push_back(s);
    }
    auto sr = series(g);
    for (auto& t : sr.lower_central) ideals.push_back(t);
    for (auto& t : sr.centralizer) ideals.push_back(t);
    for (const auto& i : ideals) {
      auto q = quotient(g, i);
      EXPECT_TRUE(check_axioms(q.algebra).ok()) << g.name();
      EXPECT_FALSE(homomorphism_defect(g, q.algebra, q.projection).has_value());
    }
  }
}

TEST(DirectSum, Examples) {
  auto ab = direct_sum(fixtures::abelian(1, 1, 3), fixtures::abelian(2, 0, 3));
  EXPECT_TRUE(ab.is_abelian());
  auto l1 = fixtures::l1();
  auto s = direct_sum(l1, fixtures::abelian(1, 0, 3));
  EXPECT_EQ(series(s).nilpotent_length, 2u);
  EXPECT_TRUE(check_axioms(s).ok());
  EXPECT_TRUE(is_graded_ideal(s, coords(s, {0, 1, 2, 3})));
  EXPECT_TRUE(is_graded_ideal(s, coords(s, {4})));
  EXPECT_THROW((void)direct_sum(l1, fixtures::s1()), Error);
}

TEST(Centralizer, Examples) {
  auto ab = fixtures::abelian(2, 1, 3);
  EXPECT_TRUE(centralizer(ab, nothing(ab)).is_full());
  auto l1 = fixtures::l1();
  EXPECT_EQ(centralizer(l1, nothing(l1)), coords(l1, {3}));
  EXPECT_TRUE(centralizer(l1, coords(l1, {3})).is_full());
  EXPECT_EQ(center_of_ideal(l1, whole(l1)), coords(l1, {3}));
}

TEST(Permute, RoundTripAndInvariants) {
  for (const auto& g : fixtures::zoo()) {
    std::vector<std::size_t> perm(g.dim()), inv(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) perm[i] = (i * 3 + 1) % g.dim();
    if (g.dim() % 3 == 0)
      for (std::size_t i = 0; i < g.dim(); ++i) perm[i] = g.dim() - 1 - i;
    for (std::size_t i = 0; i < g.dim(); ++i) inv[perm[i]] = i;
    auto p = permute_basis(g, perm);
    EXPECT_TRUE(check_axioms(p).ok());
    EXPECT_EQ(series(p).nilpotent_length, series(g).nilpotent_length);
    EXPECT_EQ(permute_basis(p, inv), g) << g.name();
  }
}
