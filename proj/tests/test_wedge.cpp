#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "nlsa/fixtures.hpp"
#include "nlsa/wedge.hpp"
#include "oracles.hpp"

using namespace nlsa;

namespace {

// X o Y for basis words, straight from the defining sum.
Vec compose_oracle(const NLieSuperalgebra& g, const WedgeBasis& wb, const Word& x, const Word& y) {
  const auto& par = g.parities();
  const Parity px = word_parity(x, par);
  Vec out(wb.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    std::vector<std::size_t> inner = x;
    inner.push_back(y[i]);
    Vec xy = g.bracket_basis(inner);
    const int s = koszul(px, oracle::sum_parity(par, y, 0, i));
    for (std::size_t c = 0; c < g.dim(); ++c) {
      if (xy[c].is_zero()) continue;
      Word w = y;
      w[i] = c;
      out = oracle::add(out, wb.wedge_of(w), xy[c] * Rational(s));
    }
  }
  return out;
}

Vec word_vec(const WedgeBasis& wb, std::size_t i) { return unit_vec(wb.size(), i); }

}  // namespace

TEST(Canonicalize, Examples) {
  std::vector<Parity> par{Parity::even, Parity::even, Parity::odd, Parity::odd};
  auto a = canonicalize(std::vector<std::size_t>{1, 0}, par);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->sign, -1);
  EXPECT_EQ(a->word, (Word{0, 1}));
  auto b = canonicalize(std::vector<std::size_t>{2, 2}, par);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->sign, 1);
  EXPECT_FALSE(canonicalize(std::vector<std::size_t>{0, 0}, par));
  auto c = canonicalize(std::vector<std::size_t>{3, 2}, par);
  EXPECT_EQ(c->sign, 1);
}

// Sign must equal the product over inversions, whichever order the tuple arrives in.
TEST(Canonicalize, InversionOracleAndIdempotence) {
  std::vector<Parity> par{Parity::even, Parity::odd, Parity::even, Parity::odd, Parity::odd};
  oracle::for_tuples(par.size(), 4, [&](const std::vector<std::size_t>& t) {
    auto c = canonicalize(t, par);
    bool even_repeat = false;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j)
        if (t[i] == t[j] && par[t[i]] == Parity::even) even_repeat = true;
    ASSERT_EQ(!c.has_value(), even_repeat);
    if (!c) return;
    EXPECT_EQ(c->sign, oracle::inversion_sign(t, par));
    auto cc = canonicalize(c->word, par);
    EXPECT_EQ(cc->sign, 1);
    EXPECT_EQ(cc->word, c->word);
    // Reaching the sorted word through a different intermediate order gives the same sign.
    std::vector<std::size_t> rev(t.rbegin(), t.rend());
    auto r = canonicalize(rev, par);
    EXPECT_EQ(r->sign * oracle::inversion_sign(t, par) * oracle::inversion_sign(rev, par), c->sign);
  });
}

TEST(WedgeBasis, Sizes) {
  auto ev = [](std::size_t e, std::size_t o) {
    std::vector<Parity> p(e, Parity::even);
    p.insert(p.end(), o, Parity::odd);
    return p;
  };
  EXPECT_EQ(WedgeBasis(ev(4, 0), 2).size(), 6u);
  EXPECT_EQ(WedgeBasis(ev(2, 2), 2).size(), 8u);
  EXPECT_EQ(WedgeBasis(ev(1, 1), 2).size(), 2u);
  for (std::size_t e = 0; e <= 3; ++e)
    for (std::size_t o = 0; o <= 3; ++o)
      for (std::size_t k = 0; k <= 4; ++k) {
        WedgeBasis wb(ev(e, o), k);
        EXPECT_EQ(wb.size(), WedgeBasis::expected_size(e, o, k));
        EXPECT_TRUE(std::is_sorted(wb.words().begin(), wb.words().end()));
        for (const auto& w : wb.words()) EXPECT_TRUE(is_canonical(w, ev(e, o)));
      }
}

TEST(Act, Examples) {
  auto l1 = fixtures::l1();
  auto wb = fundamental_basis(l1);
  Vec x = wb.wedge_of(std::vector<std::size_t>{0, 1});
  EXPECT_EQ(act(l1, x, unit_vec(4, 2)), unit_vec(4, 3));
  EXPECT_EQ(act(l1, Vec(wb.size()), unit_vec(4, 2)), Vec(4));
  auto s1 = fixtures::s1();
  auto sb = fundamental_basis(s1);
  EXPECT_EQ(act(s1, sb.wedge_of(std::vector<std::size_t>{1}), unit_vec(2, 1)), unit_vec(2, 0));
}

TEST(Compose, Examples) {
  auto ab = fixtures::abelian(2, 1, 3);
  auto ab_b = fundamental_basis(ab);
  for (std::size_t i = 0; i < ab_b.size(); ++i)
    for (std::size_t j = 0; j < ab_b.size(); ++j)
      EXPECT_TRUE(is_zero(compose(ab, word_vec(ab_b, i), word_vec(ab_b, j))));

  auto l1 = fixtures::l1();
  auto wb = fundamental_basis(l1);
  Vec c = compose(l1, wb.wedge_of(std::vector<std::size_t>{0, 1}), wb.wedge_of(std::vector<std::size_t>{2, 0}));
  Vec expect = wb.wedge_of(std::vector<std::size_t>{0, 3});
  for (auto& v : expect) v = -v;
  EXPECT_EQ(c, expect);

  auto l2 = fixtures::l2();
  auto w2 = fundamental_basis(l2);
  EXPECT_EQ(compose(l2, w2.wedge_of(std::vector<std::size_t>{0, 1}), w2.wedge_of(std::vector<std::size_t>{0, 2})),
            w2.wedge_of(std::vector<std::size_t>{0, 3}));
}

TEST(Compose, MatchesDefinitionOracle) {
  for (const auto& g : fixtures::zoo()) {
    auto wb = fundamental_basis(g);
    for (std::size_t i = 0; i < wb.size(); ++i)
      for (std::size_t j = 0; j < wb.size(); ++j)
        EXPECT_EQ(compose(g, word_vec(wb, i), word_vec(wb, j)), compose_oracle(g, wb, wb.word(i), wb.word(j)));
  }
}

// Composition identities on every pair and triple of basis wedges.
TEST(Compose, FundamentalIdentities) {
  for (const auto& g : fixtures::zoo()) {
    auto wb = fundamental_basis(g);
    const std::size_t nw = wb.size(), d = g.dim();
    for (std::size_t a = 0; a < nw; ++a)
      for (std::size_t b = 0; b < nw; ++b) {
        Vec x = word_vec(wb, a), y = word_vec(wb, b);
        const int s = koszul(wb.parity(a), wb.parity(b));
        Vec xy = compose(g, x, y), yx = compose(g, y, x);
        for (std::size_t z = 0; z < d; ++z) {
          Vec ez = unit_vec(d, z);
          Vec lhs = act(g, x, act(g, y, ez));
          Vec rhs = oracle::add(act(g, xy, ez), act(g, y, act(g, x, ez)), s);
          EXPECT_EQ(lhs, rhs) << g.name() << " act-compose";
          EXPECT_EQ(act(g, xy, ez), oracle::add(Vec(d), act(g, yx, ez), -s)) << g.name() << " compose-skew";
        }
        for (std::size_t c = 0; c < nw; ++c) {
          Vec zz = word_vec(wb, c);
          Vec lhs = compose(g, x, compose(g, y, zz));
          Vec rhs = oracle::add(compose(g, xy, zz), compose(g, y, compose(g, x, zz)), s);
          EXPECT_EQ(lhs, rhs) << g.name() << " compose-derivation";
        }
      }
  }
}
