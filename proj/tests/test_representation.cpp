#include <gtest/gtest.h>

#include "nlsa/error.hpp"
#include "nlsa/fixtures.hpp"
#include "nlsa/metric.hpp"
#include "nlsa/representation.hpp"
#include "oracles.hpp"

using namespace nlsa;

namespace {

std::vector<NLieSuperalgebra> all_fixtures() {
  auto z = fixtures::zoo();
  z.push_back(build_tstar(fixtures::l1()).total.algebra);
  z.push_back(build_tstar(fixtures::l2()).total.algebra);
  return z;
}

std::size_t word_index(const Representation& r, Word w) { return *r.words().find(w); }

}  // namespace

TEST(Representation, BuiltinsPassEverywhere) {
  for (const auto& g : all_fixtures())
    for (const char* m : {"trivial", "adjoint", "coadjoint"}) {
      auto rep = module_by_name(g, m);
      auto r = check_representation(rep);
      EXPECT_TRUE(r.ok()) << g.name() << " " << m << " " << r.witness.value_or("");
    }
}

TEST(Representation, AbelianModulesVanish) {
  auto ab = fixtures::abelian(2, 2, 3);
  const auto ad = adjoint(ab), co = coadjoint(ab);
  for (const auto& m : ad.matrices()) EXPECT_TRUE(m.is_zero());
  for (const auto& m : co.matrices()) EXPECT_TRUE(m.is_zero());
  EXPECT_THROW((void)module_by_name(ab, "regular"), Error);
}

TEST(Representation, L1Examples) {
  auto l1 = fixtures::l1();
  auto ad = adjoint(l1);
  const Matrix& a = ad.matrix(word_index(ad, {0, 1}));
  Matrix expect(4, 4);
  expect(3, 2) = 1;
  EXPECT_EQ(a, expect);
  auto co = coadjoint(l1);
  const Matrix& c = co.matrix(word_index(co, {0, 1}));
  Matrix expect_c(4, 4);
  expect_c(2, 3) = -1;  // e4* -> -e3*
  EXPECT_EQ(c, expect_c);
}

// ad*(X) is minus the super-transpose of ad(X).
TEST(Representation, CoadjointIsMinusSuperTranspose) {
  for (const auto& g : all_fixtures()) {
    auto ad = adjoint(g), co = coadjoint(g);
    const auto& par = g.parities();
    for (std::size_t w = 0; w < ad.words().size(); ++w) {
      const Parity pw = ad.words().parity(w);
      for (std::size_t f = 0; f < g.dim(); ++f)
        for (std::size_t z = 0; z < g.dim(); ++z)
          EXPECT_EQ(co.matrix(w)(z, f), -Rational(koszul(pw, par[f])) * ad.matrix(w)(f, z)) << g.name();
    }
  }
}

TEST(Representation, PerturbedAdjointFails) {
  auto l1 = fixtures::l1();
  auto ad = adjoint(l1);
  auto ms = ad.matrices();
  ms[word_index(ad, {0, 2})](0, 1) += 1;
  Representation bad(l1, ad.target(), ms, "bad");
  auto r = check_representation(bad);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.witness.has_value());
}

TEST(Semidirect, Examples) {
  auto ab = fixtures::abelian(1, 1, 3);
  EXPECT_TRUE(semidirect(trivial(ab)).is_abelian());

  auto l1 = fixtures::l1();
  auto sd = semidirect(coadjoint(l1));
  auto m1 = build_tstar(l1).total.algebra;
  EXPECT_EQ(sd.constants(), m1.constants());
  EXPECT_EQ(sd.parities(), m1.parities());

  auto l2 = fixtures::l2();
  auto s2 = semidirect(adjoint(l2));
  auto v = GradedSubspace::coordinate(s2.parities(), {4, 5, 6, 7});
  EXPECT_TRUE(is_abelian_ideal(s2, v));
}

TEST(Semidirect, AxiomsOverZoo) {
  for (const auto& g : fixtures::zoo())
    for (const char* m : {"trivial", "adjoint", "coadjoint"}) {
      auto s = semidirect(module_by_name(g, m));
      EXPECT_TRUE(check_axioms(s).ok()) << g.name() << " " << m;
      EXPECT_TRUE(oracle::filippov_holds(s)) << g.name() << " " << m;
    }
}

TEST(Semidirect, RejectsInvalidAction) {
  auto l1 = fixtures::l1();
  auto ad = adjoint(l1);
  auto ms = ad.matrices();
  ms[0](0, 1) += 1;
  try {
    (void)semidirect(Representation(l1, ad.target(), ms));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidRepresentation);
  }
}
