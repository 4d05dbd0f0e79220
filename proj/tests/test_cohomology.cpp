#include <gtest/gtest.h>

#include <random>

#include "nlsa/cohomology.hpp"
#include "nlsa/fixtures.hpp"
#include "oracles.hpp"

using namespace nlsa;

namespace {

const Parity kParities[] = {Parity::even, Parity::odd};
const char* kModules[] = {"trivial", "adjoint", "coadjoint"};

// Matrix of delta assembled column by column from delta on unit cochains.
Matrix delta_columns(const Representation& rho, std::size_t m, Parity p) {
  const CochainSpace s(rho, m), t(rho, m + 1);
  auto cols = s.coords_of_parity(p);
  auto rows = t.coords_of_parity(p);
  Matrix out(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Cochain f = Cochain::zero(s, p);
    f.coefficients[cols[j]] = 1;
    Cochain df = delta(rho, f);
    for (std::size_t i = 0; i < rows.size(); ++i) out(i, j) = df.coefficients[rows[i]];
  }
  return out;
}

}  // namespace

TEST(Delta, AbelianIsZero) {
  auto ab = fixtures::abelian(1, 1, 3);
  for (const char* mod : kModules)
    for (std::size_t m = 0; m <= 1; ++m)
      for (Parity p : kParities) EXPECT_TRUE(dense(delta_matrix(module_by_name(ab, mod), m, p)).is_zero());
}

TEST(Delta, L1TrivialDegreeZero) {
  auto l1 = fixtures::l1();
  auto rho = trivial(l1);
  const CochainSpace s0(rho, 0), s1(rho, 1);
  Cochain f = Cochain::zero(s0, Parity::even);
  f.coefficients[3] = 1;  // e4*
  Cochain df = delta(rho, f);
  const std::size_t w12 = *fundamental_basis(l1).find(Word{0, 1});
  EXPECT_EQ(df.coefficients[s1.encode(std::vector<std::size_t>{w12}, 2)], Rational(-1));
  std::size_t nonzero = 0;
  for (const auto& c : df.coefficients) nonzero += !c.is_zero();
  EXPECT_EQ(nonzero, 3u);  // the three orderings of e1, e2, e3 ending in a bracket slot
  EXPECT_EQ(dense(delta_matrix(rho, 0, Parity::even)), delta_columns(rho, 0, Parity::even));
}

TEST(Delta, MatrixMatchesPerBasisDelta) {
  for (const auto& g : fixtures::zoo())
    for (const char* mod : kModules)
      for (Parity p : kParities) {
        auto rho = module_by_name(g, mod);
        EXPECT_EQ(dense(delta_matrix(rho, 0, p)), delta_columns(rho, 0, p)) << g.name() << mod;
        EXPECT_EQ(dense(delta_matrix(rho, 1, p)), delta_columns(rho, 1, p)) << g.name() << mod;
      }
}

TEST(Delta, SquareIsZeroOnZoo) {
  for (const auto& g : fixtures::zoo())
    for (const char* mod : kModules)
      for (Parity p : kParities) {
        auto rho = module_by_name(g, mod);
        for (std::size_t m = 0; m <= 2; ++m) {
          auto r = delta_squared(rho, m, p);
          EXPECT_TRUE(r.zero) << g.name() << " " << mod << " m=" << m << " " << r.witness.value_or("");
        }
        Matrix d0 = dense(delta_matrix(rho, 0, p)), d1 = dense(delta_matrix(rho, 1, p));
        EXPECT_TRUE((d1 * d0).is_zero());
      }
}

TEST(Delta, PreservesParity) {
  std::mt19937_64 rng(1);
  for (const auto& g : fixtures::zoo())
    for (const char* mod : kModules)
      for (Parity p : kParities) {
        auto rho = module_by_name(g, mod);
        const CochainSpace s(rho, 1), t(rho, 2);
        Cochain f = Cochain::zero(s, p);
        for (auto c : s.coords_of_parity(p)) f.coefficients[c] = static_cast<int>(rng() % 5) - 2;
        Cochain df = delta(rho, f);
        EXPECT_EQ(df.parity, p);
        EXPECT_NO_THROW(check_cochain(t, df));
      }
}

TEST(Cohomology, Examples) {
  auto a01 = fixtures::abelian(0, 1, 2);
  auto d = cohomology_dims(trivial(a01), 1, Parity::even);
  EXPECT_EQ(d.cochains, 1u);
  EXPECT_EQ(d.cohomology, 1u);

  auto a10 = fixtures::abelian(1, 0, 2);
  auto full = cohomology_dims(trivial(a10), 1, Parity::even);
  EXPECT_EQ(full.cochains, 1u);
  EXPECT_EQ(full.cohomology, 1u);
  auto compat = cohomology_dims(trivial(a10), 1, Parity::even, Convention::wedge_compatible);
  EXPECT_EQ(compat.cochains, 0u);
}

// Rank/nullity of the assembled matrices against kernels of per-basis columns.
TEST(Cohomology, DoubleComputation) {
  for (const auto& g : {fixtures::l1(), fixtures::l2(), fixtures::s1()})
    for (const char* mod : kModules)
      for (Parity p : kParities) {
        auto rho = module_by_name(g, mod);
        for (std::size_t m = 0; m <= 1; ++m) {
          auto dims = cohomology_dims(rho, m, p);
          Matrix dm = delta_columns(rho, m, p);
          EXPECT_EQ(dims.cochains, dm.cols());
          EXPECT_EQ(dims.cocycles, kernel(dm).rows()) << g.name() << mod << m;
          std::size_t b = m == 0 ? 0 : rank(delta_columns(rho, m - 1, p));
          EXPECT_EQ(dims.coboundaries, b);
          EXPECT_EQ(dims.cohomology, dims.cocycles - dims.coboundaries);
        }
      }
}

TEST(Cohomology, L1CoadjointDegreeOne) {
  auto rho = coadjoint(fixtures::l1());
  auto d = cohomology_dims(rho, 1, Parity::even);
  Matrix d1 = delta_columns(rho, 1, Parity::even);
  Matrix d0 = delta_columns(rho, 0, Parity::even);
  EXPECT_EQ(d.cohomology, kernel(d1).rows() - rank(d0));
}

TEST(Cohomology, AbelianHEqualsC) {
  for (const auto& g : {fixtures::abelian(1, 1, 2), fixtures::abelian(2, 1, 3), fixtures::abelian(1, 0, 3)})
    for (Parity p : kParities)
      for (std::size_t m = 0; m <= 2; ++m) {
        auto d = cohomology_dims(trivial(g), m, p);
        EXPECT_EQ(d.cohomology, d.cochains) << g.name() << " m=" << m;
      }
}

TEST(Cohomology, BasisOrderIndependent) {
  for (const auto& g : {fixtures::l1(), fixtures::l2()}) {
    std::vector<std::size_t> perm(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) perm[i] = g.dim() - 1 - i;
    auto h = permute_basis(g, perm);
    for (const char* mod : kModules)
      for (Parity p : kParities)
        for (std::size_t m = 0; m <= 1; ++m) {
          auto a = cohomology_dims(module_by_name(g, mod), m, p);
          auto b = cohomology_dims(module_by_name(h, mod), m, p);
          EXPECT_EQ(a.cocycles, b.cocycles);
          EXPECT_EQ(a.cohomology, b.cohomology);
        }
  }
}

TEST(WedgeCompatible, ProjectorAndInvariance) {
  std::mt19937_64 rng(4);
  for (const auto& g : fixtures::zoo())
    for (const char* mod : kModules) {
      auto rho = module_by_name(g, mod);
      const CochainSpace s(rho, 1);
      for (Parity p : kParities) {
        Cochain f = Cochain::zero(s, p);
        for (auto c : s.coords_of_parity(p)) f.coefficients[c] = static_cast<int>(rng() % 7) - 3;
        Cochain pf = project_wedge(rho, f);
        EXPECT_TRUE(wedge_compatible(rho, pf));
        EXPECT_EQ(project_wedge(rho, pf), pf);
        EXPECT_TRUE(wedge_compatible(rho, delta(rho, pf))) << g.name() << " " << mod;
      }
      auto d = cohomology_dims(rho, 1, Parity::even, Convention::wedge_compatible);
      ASSERT_TRUE(d.subcomplex_invariant.has_value());
      EXPECT_TRUE(*d.subcomplex_invariant);
    }
}

TEST(WedgeCompatible, BasisVectorsAreCompatible) {
  auto rho = coadjoint(fixtures::l2());
  CompatibleBasis cb(rho, 1);
  for (std::size_t k = 0; k < cb.size(); ++k) {
    Cochain f{1, cb.parity(k), cb.vector(k)};
    EXPECT_TRUE(wedge_compatible(rho, f));
  }
}
