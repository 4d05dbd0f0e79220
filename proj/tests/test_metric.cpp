#include <gtest/gtest.h>

#include "nlsa/error.hpp"
#include "nlsa/fixtures.hpp"
#include "nlsa/metric.hpp"
#include "oracles.hpp"

using namespace nlsa;

namespace {

GradedSubspace coords(const NLieSuperalgebra& g, std::vector<std::size_t> idx) {
  return GradedSubspace::coordinate(g.parities(), idx);
}

GradedSubspace dual_half(const NLieSuperalgebra& total) {
  std::vector<std::size_t> idx;
  for (std::size_t i = total.dim() / 2; i < total.dim(); ++i) idx.push_back(i);
  return coords(total, idx);
}

// Invariance, supersymmetry, consistency and rank straight from the definitions.
bool form_oracle(const NLieSuperalgebra& g, const Matrix& gram) {
  const std::size_t d = g.dim(), n = g.arity();
  const auto& par = g.parities();
  if (rank(gram) != d) return false;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      if (par[x] != par[y] && !gram(x, y).is_zero()) return false;
      if (gram(x, y) != Rational(koszul(par[x], par[y])) * gram(y, x)) return false;
    }
  bool ok = true;
  oracle::for_tuples(d, n + 1, [&](const std::vector<std::size_t>& t) {
    if (!ok) return;
    std::vector<std::size_t> xs(t.begin(), t.begin() + static_cast<long>(n - 1));
    const std::size_t y = t[n - 1], z = t[n];
    const Parity px = oracle::sum_parity(par, xs, 0, xs.size());
    auto a = xs, b = xs;
    a.push_back(y);
    b.push_back(z);
    Rational lhs = pair(gram, g.bracket_basis(a), unit_vec(d, z));
    Rational rhs = pair(gram, unit_vec(d, y), g.bracket_basis(b));
    if (lhs + Rational(koszul(px, par[y])) * rhs != Rational(0)) ok = false;
  });
  return ok;
}

// Even compatible cyclic 1-cochains of coadjoint(g), optionally also closed; as a kernel.
Matrix cyclic_oracle(const NLieSuperalgebra& g, bool closed) {
  auto rho = coadjoint(g);
  const CochainSpace s(rho, 1);
  const std::size_t dg = g.dim(), size = s.size();
  const auto& par = g.parities();
  auto wb = fundamental_basis(g);
  std::vector<Vec> rows;
  for (std::size_t c = 0; c < size; ++c)
    if (s.coord_parity(c) != Parity::even) rows.push_back(unit_vec(size, c));
  // (P - 1) theta = 0 for the compatibility projector P.
  Matrix pm(size, size);
  for (std::size_t c = 0; c < size; ++c) {
    Cochain f = Cochain::zero(s, s.coord_parity(c));
    f.coefficients[c] = 1;
    Vec col = project_wedge(rho, f).coefficients;
    col[c] -= 1;
    for (std::size_t r = 0; r < size; ++r) pm(r, c) = col[r];
  }
  for (std::size_t r = 0; r < size; ++r)
    if (!is_zero(pm.row(r))) rows.push_back(pm.row_vec(r));
  for (std::size_t w = 0; w < wb.size(); ++w)
    for (std::size_t y = 0; y < dg; ++y)
      for (std::size_t z = 0; z < dg; ++z) {
        Vec r(size);
        r[(w * dg + y) * dg + z] += 1;
        r[(w * dg + z) * dg + y] += Rational(koszul(par[y], par[z]));
        rows.push_back(r);
      }
  if (closed) {
    const CochainSpace t(rho, 2);
    Matrix dm(t.size(), size);
    for (std::size_t c = 0; c < size; ++c) {
      Cochain f = Cochain::zero(s, s.coord_parity(c));
      f.coefficients[c] = 1;
      Vec df = delta(rho, f).coefficients;
      for (std::size_t r = 0; r < t.size(); ++r) dm(r, c) = df[r];
    }
    for (std::size_t r = 0; r < t.size(); ++r)
      if (!is_zero(dm.row(r))) rows.push_back(dm.row_vec(r));
  }
  return kernel(Matrix::from_rows(size, rows));
}

Cochain theta_of(Vec v) {
  return Cochain{1, Parity::even, std::move(v)};
}

std::vector<NLieSuperalgebra> zoo() { return fixtures::zoo(); }

}  // namespace

TEST(Form, Examples) {
  auto m1 = build_tstar(fixtures::l1());
  EXPECT_TRUE(form_properties(m1.total.algebra, m1.total.gram).all());
  EXPECT_TRUE(form_oracle(m1.total.algebra, m1.total.gram));

  auto l1 = fixtures::l1();
  auto z = form_properties(l1, Matrix(4, 4));
  EXPECT_TRUE(z.supersymmetric && z.invariant && z.consistent);
  EXPECT_FALSE(z.nondegenerate);

  auto ab = fixtures::abelian(1, 1, 2);
  auto id = form_properties(ab, Matrix::identity(2));
  EXPECT_TRUE(id.consistent);
  EXPECT_FALSE(id.supersymmetric);  // odd block must be antisymmetric
  Matrix mixed = Matrix::identity(2);
  mixed(0, 1) = mixed(1, 0) = 1;
  EXPECT_FALSE(form_properties(ab, mixed).consistent);
}

TEST(Cyclic, Examples) {
  auto l1 = fixtures::l1();
  auto rho = coadjoint(l1);
  const CochainSpace s(rho, 1);
  EXPECT_TRUE(check_cyclic(l1, Cochain::zero(s, Parity::even)));
  Cochain bad = Cochain::zero(s, Parity::even);
  const std::size_t w = *fundamental_basis(l1).find(Word{0, 1});
  bad.coefficients[(w * 4 + 2) * 4 + 2] = 1;  // theta(e1^e2, e3) = e3*
  EXPECT_FALSE(check_cyclic(l1, bad));
  for (const auto& g : zoo())
    for (const auto& t : cyclic_cocycle_basis(g)) EXPECT_TRUE(check_cyclic(g, t));
}

TEST(Cyclic, BasisMatchesOracle) {
  for (const auto& g : zoo()) {
    auto basis = cyclic_cocycle_basis(g);
    Matrix k = cyclic_oracle(g, true);
    EXPECT_EQ(basis.size(), k.rows()) << g.name();
    std::vector<Vec> rows;
    for (const auto& b : basis) rows.push_back(b.coefficients);
    if (!rows.empty()) {
      EXPECT_EQ(row_reduce(Matrix::from_rows(k.cols(), rows)).rows, k);
    }
  }
}

// S1 has cyclic compatible candidates but none is closed, and none gives an algebra.
TEST(Cyclic, S1HasNoNonzeroCocycle) {
  auto s1 = fixtures::s1();
  EXPECT_TRUE(cyclic_cocycle_basis(s1).empty());
  Matrix cand = cyclic_oracle(s1, false);
  ASSERT_GT(cand.rows(), 0u);
  for (std::size_t r = 0; r < cand.rows(); ++r) {
    auto alg = twisted_semidirect(coadjoint(s1), theta_of(cand.row_vec(r)));
    EXPECT_FALSE(oracle::filippov_holds(alg));
  }
}

TEST(TStar, BuildExamples) {
  auto m1 = build_tstar(fixtures::l1());
  EXPECT_EQ(m1.total.algebra.dim(), 8u);
  EXPECT_EQ(series(m1.total.algebra).nilpotent_length, 2u);
  auto ab = build_tstar(fixtures::abelian(1, 2, 3));
  EXPECT_TRUE(ab.total.algebra.is_abelian());
  EXPECT_EQ(ab.total.gram, tstar_gram(fixtures::abelian(1, 2, 3)));
  auto m2 = build_tstar(fixtures::l2());
  EXPECT_EQ(m2.total.algebra.space().dim_even(), 4u);
  EXPECT_EQ(m2.total.algebra.space().dim_odd(), 4u);
  EXPECT_TRUE(check_axioms(m2.total.algebra).ok());
}

TEST(TStar, SampledFormsAreMetric) {
  for (const auto& g : zoo()) {
    auto zero = build_tstar(g);
    EXPECT_TRUE(form_properties(zero.total.algebra, zero.total.gram).all());
    for (const auto& th : sample_cyclic_cocycles(g, 3, 17)) {
      EXPECT_FALSE(is_zero(th.coefficients));
      auto t = build_tstar(g, th);
      EXPECT_TRUE(check_axioms(t.total.algebra).ok()) << g.name();
      EXPECT_TRUE(form_properties(t.total.algebra, t.total.gram).all()) << g.name();
      EXPECT_TRUE(form_oracle(t.total.algebra, t.total.gram)) << g.name();
    }
  }
}

TEST(TStar, Errors) {
  auto l1 = fixtures::l1();
  const CochainSpace s(coadjoint(fixtures::l2()), 1);
  try {
    (void)build_tstar(l1, Cochain::zero(s, Parity::even));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(Lengths, ZeroTheta) {
  for (const auto& g : {fixtures::l1(), fixtures::l2()}) {
    const CochainSpace s(coadjoint(g), 1);
    auto r = tstar_lengths_check(g, Cochain::zero(s, Parity::even));
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.total_nilpotent, 2u);
    ASSERT_TRUE(r.zero_theta_exact.has_value());
    EXPECT_TRUE(*r.zero_theta_exact);
  }
}

TEST(Lengths, SolvableBoundOnL1) {
  auto l1 = fixtures::l1();
  for (const auto& th : sample_cyclic_cocycles(l1, 5, 3)) {
    auto r = tstar_lengths_check(l1, th);
    EXPECT_TRUE(r.solvable_bound);
    ASSERT_TRUE(r.total_solvable.has_value());
    EXPECT_TRUE(*r.total_solvable == 2 || *r.total_solvable == 3);
    EXPECT_EQ(*r.total_solvable, oracle::solvable_length(build_tstar(l1, th).total.algebra));
  }
}

TEST(Lengths, Decomposition) {
  auto g = direct_sum(fixtures::l1(), fixtures::abelian(1, 0, 3));
  const CochainSpace s(coadjoint(g), 1);
  auto r = tstar_lengths_check(g, Cochain::zero(s, Parity::even),
                               std::pair{coords(g, {0, 1, 2, 3}), coords(g, {4})});
  ASSERT_TRUE(r.decomposition.has_value());
  EXPECT_TRUE(*r.decomposition);
}

// The stated upper bound 2k - 1 fails on these inputs; the report must say so.
TEST(Lengths, UpperBoundCounterexamples) {
  auto ab = fixtures::abelian(1, 1, 2);
  for (const auto& th : sample_cyclic_cocycles(ab, 2, 5)) {
    auto r = tstar_lengths_check(ab, th);
    EXPECT_EQ(r.total_nilpotent, oracle::nilpotent_length(build_tstar(ab, th).total.algebra));
    EXPECT_EQ(r.total_nilpotent, 2u);
    EXPECT_FALSE(r.nilpotent_bound);
  }
  auto l2 = fixtures::l2();
  auto th = sample_cyclic_cocycles(l2, 1, 7).front();
  auto r = tstar_lengths_check(l2, th);
  EXPECT_EQ(r.total_nilpotent, oracle::nilpotent_length(build_tstar(l2, th).total.algebra));
  EXPECT_GT(*r.total_nilpotent, 3u);
  EXPECT_FALSE(r.nilpotent_bound);
}

TEST(Equivalence, Trivial) {
  auto l2 = fixtures::l2();
  auto th = sample_cyclic_cocycles(l2, 1, 1).front();
  auto e = tstar_equivalence(l2, th, th);
  ASSERT_TRUE(e.theta_prime.has_value());
  EXPECT_TRUE(e.isometric);
}

TEST(Equivalence, ShiftedByCoboundary) {
  auto l2 = fixtures::l2();
  auto rho = coadjoint(l2);
  const CochainSpace s0(rho, 0);
  Cochain tp = Cochain::zero(s0, Parity::even);
  tp.coefficients[3 * 4 + 3] = 1;  // f2 -> f2*
  auto dt = delta(rho, tp);
  ASSERT_TRUE(check_cyclic(l2, dt));
  ASSERT_FALSE(is_zero(dt.coefficients));
  auto t1 = sample_cyclic_cocycles(l2, 1, 7).front();
  Cochain t2 = t1;
  for (std::size_t i = 0; i < t2.coefficients.size(); ++i) t2.coefficients[i] -= dt.coefficients[i];
  auto e = tstar_equivalence(l2, t1, t2);
  ASSERT_TRUE(e.theta_prime.has_value());
  EXPECT_EQ(delta(rho, *e.theta_prime).coefficients, dt.coefficients);
  auto a = build_tstar(l2, t1).total, b = build_tstar(l2, t2).total;
  Matrix phi = equivalence_map(l2, *e.theta_prime);
  EXPECT_TRUE(inverse(phi).has_value());
  EXPECT_FALSE(homomorphism_defect(a.algebra, b.algebra, phi).has_value());
  if (e.isometric) {
    Matrix iso = equivalence_map(l2, *e.isometric_theta_prime);
    EXPECT_EQ(iso.transpose() * b.gram * iso, a.gram);
  }
}

TEST(Equivalence, VolumeFormIsNotACoboundary) {
  auto l1 = fixtures::l1();
  auto basis = cyclic_cocycle_basis(l1);
  ASSERT_EQ(basis.size(), 1u);
  const CochainSpace s(coadjoint(l1), 1);
  auto e = tstar_equivalence(l1, basis.front(), Cochain::zero(s, Parity::even));
  EXPECT_FALSE(e.theta_prime.has_value());
}

TEST(IsotropicIdeal, Examples) {
  auto m1 = build_tstar(fixtures::l1()).total;
  auto r = isotropic_ideal_abelian_check(m1, dual_half(m1.algebra));
  EXPECT_TRUE(r.ideal && r.abelian && r.self_orthogonal);
  auto lag = coords(m1.algebra, {0, 1, 2, 3});
  auto q = isotropic_ideal_abelian_check(m1, lag);
  EXPECT_FALSE(q.ideal);
  EXPECT_FALSE(q.abelian);
  EXPECT_TRUE(q.ok());
  EXPECT_EQ(q.ideal, is_graded_ideal(m1.algebra, lag));
  auto h = hyperbolic_abelian(2, 0, 3);
  auto a = isotropic_ideal_abelian_check(h, coords(h.algebra, {0, 3}));
  EXPECT_TRUE(a.ideal && a.abelian);
  try {
    (void)isotropic_ideal_abelian_check(m1, coords(m1.algebra, {0, 4, 1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotIsotropic);
  }
}

TEST(IsotropicComplement, Examples) {
  auto m1 = build_tstar(fixtures::l1()).total;
  EXPECT_EQ(isotropic_complement(m1, dual_half(m1.algebra)), coords(m1.algebra, {0, 1, 2, 3}));
  MetricAlgebra plane{fixtures::abelian(2, 0, 2), Matrix(2, 2)};
  plane.gram(0, 1) = plane.gram(1, 0) = 3;
  plane.gram(1, 1) = 4;
  auto c = isotropic_complement(plane, coords(plane.algebra, {0}));
  // e2 - (<e2,e2> / 2<e2,e1>) e1
  EXPECT_EQ(c, GradedSubspace::span(plane.algebra.parities(), std::vector<Vec>{{Rational(-2, 3), 1}}));
  EXPECT_TRUE(is_isotropic(plane.gram, c));
  EXPECT_EQ(orth_complement(m1.gram, isotropic_complement(m1, dual_half(m1.algebra))),
            isotropic_complement(m1, dual_half(m1.algebra)));
}

TEST(Reconstruct, RoundTripOverSamples) {
  for (const auto& g : zoo()) {
    std::vector<Cochain> thetas{Cochain::zero(CochainSpace(coadjoint(g), 1), Parity::even)};
    for (auto& t : sample_cyclic_cocycles(g, 2, 23)) thetas.push_back(t);
    for (const auto& th : thetas) {
      auto t = build_tstar(g, th);
      auto r = reconstruct_tstar(t.total, dual_half(t.total.algebra));
      EXPECT_TRUE(r.ok()) << g.name();
      EXPECT_EQ(r.quotient.constants(), g.constants());
      EXPECT_EQ(r.tstar.theta, th);
      EXPECT_FALSE(homomorphism_defect(t.total.algebra, r.tstar.total.algebra, r.phi).has_value());
      EXPECT_EQ(r.phi.transpose() * r.tstar.total.gram * r.phi, t.total.gram);
    }
  }
}

TEST(Reconstruct, OtherIdealOnM1) {
  auto m1 = build_tstar(fixtures::l1()).total;
  auto i = coords(m1.algebra, {3, 4, 5, 6});
  auto r = reconstruct_tstar(m1, i);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.quotient.is_abelian());
  EXPECT_TRUE(inverse(r.phi).has_value());
  EXPECT_FALSE(homomorphism_defect(m1.algebra, r.tstar.total.algebra, r.phi).has_value());
  EXPECT_EQ(r.phi.transpose() * r.tstar.total.gram * r.phi, m1.gram);
  try {
    (void)reconstruct_tstar(m1, coords(m1.algebra, {0, 1, 2, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotIsotropicIdeal);
  }
}

TEST(MaximalIsotropic, Examples) {
  for (auto m : {build_tstar(fixtures::l1()).total, build_tstar(fixtures::l2()).total}) {
    auto w = maximal_isotropic_stable(m, nothing(m.algebra));
    EXPECT_TRUE(w.ok());
    EXPECT_EQ(w.subspace.dim(), m.algebra.dim() / 2);
    EXPECT_TRUE(is_isotropic(m.gram, w.subspace));
    EXPECT_TRUE(is_graded_ideal(m.algebra, w.subspace));
  }
  auto plane = hyperbolic_abelian(1, 0, 2);
  EXPECT_EQ(maximal_isotropic_stable(plane, nothing(plane.algebra)).subspace, coords(plane.algebra, {0}));
  auto m1 = build_tstar(fixtures::l1()).total;
  auto i = coords(m1.algebra, {3, 4, 5, 6});
  EXPECT_EQ(maximal_isotropic_stable(m1, i).subspace, i);
}

TEST(LineExtension, M1PlusNegativeLine) {
  auto m = metric_direct_sum(build_tstar(fixtures::l1()).total, metric_line(3, -1, "u"));
  ASSERT_EQ(m.algebra.dim(), 9u);
  auto w = maximal_isotropic_stable(m, nothing(m.algebra));
  EXPECT_TRUE(w.ok());
  EXPECT_EQ(w.subspace.dim(), 4u);
  ASSERT_TRUE(w.perp_into.has_value());
  EXPECT_TRUE(*w.perp_into);
  auto x = extend_by_line(m, w.subspace);
  EXPECT_TRUE(x.ok());
  EXPECT_EQ(x.ideal.dim(), 5u);
  EXPECT_EQ(pair(x.algebra.gram, x.beta, x.beta), Rational(0));
  EXPECT_EQ(pair(m.gram, x.z, x.z), Rational(-1));
  EXPECT_TRUE(is_abelian_ideal(x.algebra.algebra, x.ideal));
  auto r = reconstruct_tstar(x.algebra, x.ideal);
  EXPECT_TRUE(r.ok());
  try {
    (void)extend_by_line(build_tstar(fixtures::l1()).total, w.subspace);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EvenDimension);
  }
}

TEST(Duality, Examples) {
  for (auto m : {build_tstar(fixtures::l1()).total, build_tstar(fixtures::l2()).total}) {
    auto r = centralizer_duality(m);
    EXPECT_TRUE(r.ok()) << r.witness.value_or("");
    EXPECT_GT(r.samples, 0u);
    auto s = series(m.algebra);
    for (std::size_t i = 0; i < s.lower_central.size() && i < s.centralizer.size(); ++i)
      EXPECT_EQ(s.lower_central[i], orth_complement(m.gram, s.centralizer[i]));
  }
  auto m1 = build_tstar(fixtures::l1()).total;
  auto g = whole(m1.algebra);
  EXPECT_EQ(centralizer(m1.algebra, nothing(m1.algebra)),
            orth_complement(m1.gram, bracket_span(m1.algebra, {g, g, g})));
  auto s = series(m1.algebra);
  EXPECT_TRUE(s.centralizer[1].contains(s.lower_central[1]));
}

TEST(Pipeline, MetricFixtures) {
  for (auto m : {build_tstar(fixtures::l1()).total, build_tstar(fixtures::l2()).total}) {
    auto p = nilpotent_pipeline(m);
    EXPECT_TRUE(p.ok());
    EXPECT_EQ(p.nilpotent_length, 2u);
    EXPECT_EQ(p.bound, 1u);
    EXPECT_LE(p.quotient_length, 1u);
    EXPECT_TRUE(p.reconstruction.quotient.is_abelian());
    EXPECT_EQ(p.reconstruction.phi.transpose() * p.reconstruction.tstar.total.gram * p.reconstruction.phi, m.gram);
  }
  auto p2 = nilpotent_pipeline(build_tstar(fixtures::l2()).total);
  EXPECT_EQ(p2.reconstruction.quotient.space().dim_even(), 2u);
  EXPECT_EQ(p2.reconstruction.quotient.space().dim_odd(), 2u);
  auto h = nilpotent_pipeline(hyperbolic_abelian(1, 1, 3));
  EXPECT_TRUE(h.ok());
  EXPECT_EQ(h.nilpotent_length, 1u);
  EXPECT_TRUE(h.reconstruction.quotient.is_abelian());
}

TEST(Pipeline, OddDimension) {
  auto m = metric_direct_sum(build_tstar(fixtures::l1()).total, metric_line(3, -1, "u"));
  auto p = nilpotent_pipeline(m);
  EXPECT_TRUE(p.ok());
  ASSERT_TRUE(p.line.has_value());
  EXPECT_TRUE(p.line->ok());
}
