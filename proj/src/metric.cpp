#include "nlsa/metric.hpp"

#include <random>

#include "nlsa/error.hpp"
#include "nlsa/extensions.hpp"
#include "nlsa/representation.hpp"

namespace nlsa {

namespace {

std::vector<Matrix> ad_matrices(const NLieSuperalgebra& g) { return adjoint(g).matrices(); }

std::string names_of(const NLieSuperalgebra& g, std::initializer_list<std::size_t> idx) {
  std::string s;
  for (auto i : idx) {
    if (!s.empty()) s += ", ";
    s += g.space().name(i);
  }
  return s;
}

GradedSubspace span_of(const std::vector<Parity>& parities, const std::vector<Vec>& vs) {
  return GradedSubspace::span(parities, vs, true);
}

std::vector<Vec> rows_of(const GradedSubspace& w) {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < w.dim(); ++r) out.push_back(w.basis_vector(r));
  return out;
}

Vec extend(const Vec& v, std::size_t size) {
  Vec out = v;
  out.resize(size);
  return out;
}

// [g, .., g, a, b] with n - 2 copies of g
GradedSubspace bracket_with_pair(const NLieSuperalgebra& g, const GradedSubspace& a, const GradedSubspace& b) {
  std::vector<GradedSubspace> slots(g.arity() - 2, whole(g));
  slots.push_back(a);
  slots.push_back(b);
  return bracket_span(g, slots);
}

// isotropic partners e_c + phi(e_c) over the echelon complement of I
std::vector<Vec> complement_vectors(const MetricAlgebra& m, const GradedSubspace& i) {
  const Matrix& gram = m.gram;
  const std::vector<std::size_t> comp = i.complement_indices();
  const std::size_t h = i.dim(), c = comp.size();
  if (h != c) throw Error(ErrorCode::WrongDimension, "isotropic complement needs a half-dimensional subspace");
  // P(r, k) = <b_r, e_{c_k}>; solve sum_r a_r P(r, k') = -1/2 <e_c, e_{c_k'}>
  Matrix pt(c, h);
  for (std::size_t r = 0; r < h; ++r) {
    const Vec b = i.basis_vector(r);
    for (std::size_t k = 0; k < c; ++k) pt(k, r) = pair(gram, b, unit_vec(gram.rows(), comp[k]));
  }
  const auto inv = inverse(pt);
  if (!inv) throw Error(ErrorCode::NotIsotropic, "subspace pairs degenerately with its complement");
  std::vector<Vec> out;
  for (std::size_t k = 0; k < c; ++k) {
    Vec rhs(c);
    for (std::size_t k2 = 0; k2 < c; ++k2) rhs[k2] = Rational(-1, 2) * gram(comp[k], comp[k2]);
    const Vec a = *inv * rhs;
    Vec v = unit_vec(gram.rows(), comp[k]);
    for (std::size_t r = 0; r < h; ++r) axpy(v, a[r], i.basis_vector(r));
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t theta_index(std::size_t dg, std::size_t w, std::size_t y, std::size_t z) { return (w * dg + y) * dg + z; }

}  // namespace

Rational pair(const Matrix& gram, std::span<const Rational> a, std::span<const Rational> b) {
  Rational s;
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      if (!b[j].is_zero() && !gram(i, j).is_zero()) s += a[i] * gram(i, j) * b[j];
    }
  }
  return s;
}

FormProperties form_properties(const NLieSuperalgebra& g, const Matrix& gram) {
  const std::size_t d = g.dim();
  if (gram.rows() != d || gram.cols() != d) throw Error(ErrorCode::DimensionMismatch, "gram matrix size");
  const auto& par = g.parities();
  FormProperties p;
  auto note = [&](std::string s) {
    if (!p.witness) p.witness = std::move(s);
  };
  p.nondegenerate = rank(gram) == d;
  if (!p.nondegenerate) note("form is degenerate");
  p.consistent = true;
  p.supersymmetric = true;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (par[i] != par[j] && !gram(i, j).is_zero()) {
        p.consistent = false;
        note("<" + names_of(g, {i, j}) + "> pairs opposite parities");
      }
      if (gram(i, j) != Rational(koszul(par[i], par[j])) * gram(j, i)) {
        p.supersymmetric = false;
        note("supersymmetry fails at " + names_of(g, {i, j}));
      }
    }
  }
  p.invariant = true;
  const Representation ad = adjoint(g);
  for (std::size_t w = 0; w < ad.words().size() && p.invariant; ++w) {
    const Matrix& a = ad.matrix(w);
    const Matrix left = a.transpose() * gram;  // <X.y, z>
    const Matrix right = gram * a;             // <y, X.z>
    for (std::size_t y = 0; y < d && p.invariant; ++y) {
      const int s = -koszul(ad.words().parity(w), par[y]);
      for (std::size_t z = 0; z < d; ++z) {
        if (left(y, z) != Rational(s) * right(y, z)) {
          p.invariant = false;
          std::string x;
          for (auto k : ad.words().word(w)) x += g.space().name(k) + ", ";
          note("invariance fails at [" + x + g.space().name(y) + "], " + g.space().name(z));
          break;
        }
      }
    }
  }
  return p;
}

MetricAlgebra metric_direct_sum(const MetricAlgebra& a, const MetricAlgebra& b) {
  MetricAlgebra out{direct_sum(a.algebra, b.algebra), Matrix()};
  const std::size_t da = a.algebra.dim(), db = b.algebra.dim();
  out.gram = Matrix(da + db, da + db);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) out.gram(i, j) = a.gram(i, j);
  }
  for (std::size_t i = 0; i < db; ++i) {
    for (std::size_t j = 0; j < db; ++j) out.gram(da + i, da + j) = b.gram(i, j);
  }
  return out;
}

MetricAlgebra metric_line(std::size_t n, const Rational& value, const std::string& name) {
  NLieSuperalgebra line(name, n, GradedSpace({BasisElement{name, Parity::even}}), {});
  Matrix gram(1, 1);
  gram(0, 0) = value;
  return {std::move(line), std::move(gram)};
}

MetricAlgebra hyperbolic_abelian(std::size_t even, std::size_t odd, std::size_t n) {
  const TStarBundle t = build_tstar(NLieSuperalgebra("Ab", n, GradedSpace::standard(even, odd, "u", "v"), {}));
  MetricAlgebra m = t.total;
  m.algebra = m.algebra.renamed("T*Ab(" + std::to_string(even) + "|" + std::to_string(odd) + ";" +
                                std::to_string(n) + ")");
  return m;
}

bool is_isotropic(const Matrix& gram, const GradedSubspace& w) {
  for (std::size_t r = 0; r < w.dim(); ++r) {
    const Vec a = w.basis_vector(r);
    for (std::size_t s = 0; s < w.dim(); ++s) {
      if (!pair(gram, a, w.basis_vector(s)).is_zero()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

Matrix tstar_gram(const NLieSuperalgebra& g) {
  const std::size_t d = g.dim();
  Matrix gram(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    gram(d + i, i) = Rational(1);
    gram(i, d + i) = Rational(g.space().parity(i) == Parity::odd ? -1 : 1);
  }
  return gram;
}

bool check_cyclic(const NLieSuperalgebra& g, const Cochain& theta) {
  const std::size_t dg = g.dim();
  const WedgeBasis words = fundamental_basis(g);
  if (theta.degree != 1 || theta.coefficients.size() != words.size() * dg * dg) {
    throw Error(ErrorCode::DimensionMismatch, "cyclic check needs a degree-1 cochain with values in g*");
  }
  const auto& par = g.parities();
  const Vec& c = theta.coefficients;
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (std::size_t y = 0; y < dg; ++y) {
      for (std::size_t z = y; z < dg; ++z) {
        const Rational s = c[theta_index(dg, w, y, z)] + Rational(koszul(par[y], par[z])) * c[theta_index(dg, w, z, y)];
        if (!s.is_zero()) return false;
      }
    }
  }
  return true;
}

TStarBundle build_tstar(const NLieSuperalgebra& g, const Cochain& theta) {
  const Representation co = coadjoint(g);
  const CochainSpace s(co, 1);
  if (theta.degree != 1 || theta.coefficients.size() != s.size()) {
    throw Error(ErrorCode::DimensionMismatch, "theta must be a degree-1 cochain with values in g*");
  }
  if (theta.parity != Parity::even) throw Error(ErrorCode::WrongParity, "theta must be even");
  check_cochain(s, theta);
  if (!wedge_compatible(co, theta)) {
    throw Error(ErrorCode::NotWedgeCompatible, "theta is not super-antisymmetric in its n arguments");
  }
  if (!is_zero(delta(co, theta).coefficients)) throw Error(ErrorCode::NotACocycle, "delta theta != 0");
  if (!check_cyclic(g, theta)) {
    throw Error(ErrorCode::NotCyclic, "theta(X, y)(z) + (-1)^{|y||z|} theta(X, z)(y) != 0");
  }
  TStarBundle t{g, theta, {twisted_semidirect(co, theta, "T*" + g.name()), tstar_gram(g)}};
  return t;
}

TStarBundle build_tstar(const NLieSuperalgebra& g) {
  const CochainSpace s(coadjoint(g), 1);
  return build_tstar(g, Cochain::zero(s, Parity::even));
}

std::vector<Cochain> cyclic_cocycle_basis(const NLieSuperalgebra& g) {
  const Representation co = coadjoint(g);
  const std::vector<Cochain> z = compatible_cocycle_basis(co, Parity::even);
  if (z.empty()) return {};
  const std::size_t dg = g.dim(), nw = co.words().size();
  const auto& par = g.parities();
  std::vector<Vec> rows;
  for (std::size_t w = 0; w < nw; ++w) {
    for (std::size_t y = 0; y < dg; ++y) {
      for (std::size_t x = y; x < dg; ++x) {
        Vec r(z.size());
        bool any = false;
        for (std::size_t k = 0; k < z.size(); ++k) {
          const Vec& c = z[k].coefficients;
          r[k] = c[theta_index(dg, w, y, x)] + Rational(koszul(par[y], par[x])) * c[theta_index(dg, w, x, y)];
          any = any || !r[k].is_zero();
        }
        if (any) rows.push_back(std::move(r));
      }
    }
  }
  const Matrix ker = rows.empty() ? Matrix::identity(z.size()) : kernel(Matrix::from_rows(z.size(), rows));
  std::vector<Cochain> out;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Cochain f{1, Parity::even, Vec(z[0].coefficients.size())};
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (!ker(r, k).is_zero()) axpy(f.coefficients, ker(r, k), z[k].coefficients);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Cochain> sample_cyclic_cocycles(const NLieSuperalgebra& g, std::size_t count, std::uint64_t seed) {
  const std::vector<Cochain> basis = cyclic_cocycle_basis(g);
  if (basis.empty()) return {};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<Cochain> out;
  while (out.size() < count) {
    Cochain f{1, Parity::even, Vec(basis[0].coefficients.size())};
    for (const Cochain& b : basis) axpy(f.coefficients, Rational(coef(rng)), b.coefficients);
    if (!is_zero(f.coefficients)) out.push_back(std::move(f));
  }
  return out;
}

LengthsReport tstar_lengths_check(const NLieSuperalgebra& g, const Cochain& theta,
                                  const std::optional<std::pair<GradedSubspace, GradedSubspace>>& split) {
  const TStarBundle t = build_tstar(g, theta);
  const SeriesReport base = series(g), total = series(t.total.algebra);
  LengthsReport r;
  r.base_solvable = base.solvable_length;
  r.base_nilpotent = base.nilpotent_length;
  r.total_solvable = total.solvable_length;
  r.total_nilpotent = total.nilpotent_length;
  if (base.solvable_length) {
    const std::size_t k = *base.solvable_length;
    r.solvable_bound = total.solvable_length && (*total.solvable_length == k || *total.solvable_length == k + 1);
  }
  if (base.nilpotent_length) {
    const std::size_t k = *base.nilpotent_length;
    r.nilpotent_bound = total.nilpotent_length && *total.nilpotent_length >= k &&
                        *total.nilpotent_length + 1 <= std::max<std::size_t>(2 * k, 1);
    if (is_zero(theta.coefficients)) r.zero_theta_exact = total.nilpotent_length == base.nilpotent_length;
  }
  if (split) {
    const auto& [i, j] = *split;
    const std::size_t d = g.dim();
    const NLieSuperalgebra t0 = is_zero(theta.coefficients) ? t.total.algebra : build_tstar(g).total.algebra;
    std::vector<Parity> par = t0.parities();
    // T*_0 I = I (+) {f | f(J) = 0}
    auto lift = [&](const GradedSubspace& a, const GradedSubspace& b) {
      std::vector<Vec> gens;
      for (std::size_t r2 = 0; r2 < a.dim(); ++r2) gens.push_back(extend(a.basis_vector(r2), 2 * d));
      const Matrix ann = b.annihilator();
      for (std::size_t r2 = 0; r2 < ann.rows(); ++r2) {
        Vec v(2 * d);
        for (std::size_t k = 0; k < d; ++k) v[d + k] = ann(r2, k);
        gens.push_back(std::move(v));
      }
      return span_of(par, gens);
    };
    const GradedSubspace ti = lift(i, j), tj = lift(j, i);
    r.decomposition = is_graded_ideal(g, i) && is_graded_ideal(g, j) && is_graded_ideal(t0, ti) &&
                      is_graded_ideal(t0, tj) && intersect(ti, tj).is_zero() && sum(ti, tj).is_full() &&
                      !ti.is_zero() && !tj.is_zero();
  }
  return r;
}

Matrix induced_form(const NLieSuperalgebra& g, const Cochain& theta_prime) {
  const std::size_t d = g.dim();
  const auto& par = g.parities();
  Matrix b(d, d);
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      b(x, y) = Rational(1, 2) * (theta_prime.coefficients[x * d + y] +
                                  Rational(koszul(par[x], par[y])) * theta_prime.coefficients[y * d + x]);
    }
  }
  return b;
}

Matrix equivalence_map(const NLieSuperalgebra& g, const Cochain& theta_prime) {
  const std::size_t d = g.dim();
  Matrix phi = Matrix::identity(2 * d);
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t u = 0; u < d; ++u) phi(d + u, x) = theta_prime.coefficients[x * d + u];
  }
  return phi;
}

EquivalenceResult tstar_equivalence(const NLieSuperalgebra& g, const Cochain& theta1, const Cochain& theta2) {
  const Representation co = coadjoint(g);
  const CochainSpace s0(co, 0), s1(co, 1);
  const DeltaMatrix dm = delta_matrix(co, 0, Parity::even);
  const Matrix dd = dense(dm);
  const std::vector<std::size_t> rows = s1.coords_of_parity(Parity::even);
  const std::vector<std::size_t> cols = s0.coords_of_parity(Parity::even);
  Vec rhs(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) rhs[r] = theta1.coefficients[rows[r]] - theta2.coefficients[rows[r]];

  EquivalenceResult out;
  const auto sol = solve(dd, rhs);
  if (!sol) return out;
  auto to_cochain = [&](const Vec& compact) {
    Cochain f = Cochain::zero(s0, Parity::even);
    for (std::size_t c = 0; c < cols.size(); ++c) f.coefficients[cols[c]] = compact[c];
    return f;
  };
  out.theta_prime = to_cochain(*sol);
  out.induced_form = induced_form(g, *out.theta_prime);
  out.induced_properties = form_properties(g, out.induced_form);

  // theta' + sum c_j k_j with vanishing induced form
  const Matrix ker = kernel(dd);
  const std::size_t d = g.dim();
  const Matrix base = out.induced_form;
  std::vector<Matrix> forms;
  for (std::size_t j = 0; j < ker.rows(); ++j) forms.push_back(induced_form(g, to_cochain(ker.row_vec(j))));
  Matrix sys(d * d, ker.rows());
  Vec target(d * d);
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      target[x * d + y] = -base(x, y);
      for (std::size_t j = 0; j < ker.rows(); ++j) sys(x * d + y, j) = forms[j](x, y);
    }
  }
  if (const auto c = solve(sys, target)) {
    Vec v = *sol;
    for (std::size_t j = 0; j < ker.rows(); ++j) axpy(v, (*c)[j], ker.row_vec(j));
    out.isometric = true;
    out.isometric_theta_prime = to_cochain(v);
  }
  return out;
}

// ---------------------------------------------------------------------------

IsotropicIdealReport isotropic_ideal_abelian_check(const MetricAlgebra& m, const GradedSubspace& i) {
  const std::size_t d = m.algebra.dim();
  if (d % 2 != 0 || 2 * i.dim() != d) throw Error(ErrorCode::WrongDimension, "need an m/2-dimensional subspace");
  if (!is_isotropic(m.gram, i)) throw Error(ErrorCode::NotIsotropic, "subspace is not isotropic");
  IsotropicIdealReport r;
  r.ideal = is_graded_ideal(m.algebra, i);
  r.abelian = bracket_with_pair(m.algebra, i, i).is_zero();
  r.self_orthogonal = orth_complement(m.gram, i) == i;
  return r;
}

GradedSubspace isotropic_complement(const MetricAlgebra& m, const GradedSubspace& i) {
  return span_of(m.algebra.parities(), complement_vectors(m, i));
}

Reconstruction reconstruct_tstar(const MetricAlgebra& m, const GradedSubspace& i) {
  const NLieSuperalgebra& g = m.algebra;
  const std::size_t d = g.dim();
  if (d % 2 != 0) throw Error(ErrorCode::OddDimension, "reconstruction needs an even-dimensional algebra");
  if (2 * i.dim() != d) throw Error(ErrorCode::WrongDimension, "the ideal must have half the dimension");
  if (!is_isotropic(m.gram, i) || !is_graded_ideal(g, i)) {
    throw Error(ErrorCode::NotIsotropicIdeal, "need an isotropic graded ideal of half dimension");
  }
  const std::size_t h = d / 2;
  const std::vector<Vec> g0 = complement_vectors(m, i);
  Quotient q = quotient(g, i);
  const std::vector<std::size_t>& comp = q.lift_indices;

  // columns: g0 then I
  Matrix basis(d, d);
  for (std::size_t k = 0; k < h; ++k) {
    for (std::size_t r = 0; r < d; ++r) basis(r, k) = g0[k][r];
  }
  for (std::size_t k = 0; k < h; ++k) {
    const Vec b = i.basis_vector(k);
    for (std::size_t r = 0; r < d; ++r) basis(r, h + k) = b[r];
  }
  const Matrix inv = *inverse(basis);
  Matrix p1(d, d);  // projection onto I along g0
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t k = 0; k < h; ++k) {
      if (inv(h + k, c).is_zero()) continue;
      for (std::size_t r = 0; r < d; ++r) p1(r, c) += inv(h + k, c) * basis(r, h + k);
    }
  }
  Matrix f1(h, d);  // f1*(z)(q_k) = <z, e_{c_k}>
  for (std::size_t k = 0; k < h; ++k) {
    for (std::size_t j = 0; j < d; ++j) f1(k, j) = m.gram(j, comp[k]);
  }
  const Matrix fp = f1 * p1;

  const NLieSuperalgebra& g1 = q.algebra;
  const Representation co = coadjoint(g1);
  const CochainSpace s(co, 1);
  Cochain theta = Cochain::zero(s, Parity::even);
  const std::size_t n = g.arity();
  std::vector<Vec> args(n);
  for (std::size_t w = 0; w < co.words().size(); ++w) {
    const Word& x = co.words().word(w);
    for (std::size_t a = 0; a + 1 < n; ++a) args[a] = g0[x[a]];
    for (std::size_t z = 0; z < h; ++z) {
      args[n - 1] = g0[z];
      const Vec val = fp * g.bracket(args);
      const std::size_t dom = s.encode(std::vector<std::size_t>{w}, z);
      for (std::size_t u = 0; u < h; ++u) theta.coefficients[dom * h + u] = val[u];
    }
  }

  Reconstruction r{g1, span_of(g.parities(), g0), build_tstar(g1, theta), Matrix(d, d), false, false, false, std::nullopt};
  for (std::size_t k = 0; k < h; ++k) {
    for (std::size_t c = 0; c < d; ++c) {
      r.phi(k, c) = q.projection(k, c);
      r.phi(h + k, c) = fp(k, c);
    }
  }
  r.bijective = inverse(r.phi).has_value();
  r.defect = homomorphism_defect(g, r.tstar.total.algebra, r.phi);
  r.bracket_preserving = !r.defect;
  r.isometry = r.phi.transpose() * r.tstar.total.gram * r.phi == m.gram;
  return r;
}

MaximalIsotropic maximal_isotropic_stable(const MetricAlgebra& m, const GradedSubspace& w0) {
  const NLieSuperalgebra& g = m.algebra;
  const std::size_t d = g.dim();
  const auto& par = g.parities();
  if (!series(g).nilpotent_length) throw Error(ErrorCode::NotNilpotent, "algebra is not nilpotent");
  if (!is_isotropic(m.gram, w0)) throw Error(ErrorCode::NotIsotropic, "starting subspace is not isotropic");
  if (!is_graded_ideal(g, w0)) throw Error(ErrorCode::NotAnIdeal, "starting subspace is not ad-stable");
  const std::vector<Matrix> ads = ad_matrices(g);

  GradedSubspace w = w0;
  while (w.dim() < d / 2) {
    const GradedSubspace perp = orth_complement(m.gram, w);
    const Matrix ann = w.annihilator();
    // v = sum a_j p_j in W^perp with ad(X) v in W for every basis word X
    std::vector<Vec> conds;
    for (const Matrix& a : ads) {
      const Matrix ap = ann * a;
      for (std::size_t r = 0; r < ap.rows(); ++r) {
        Vec c(perp.dim());
        for (std::size_t j = 0; j < perp.dim(); ++j) {
          const Vec p = perp.basis_vector(j);
          for (std::size_t k = 0; k < d; ++k) c[j] += ap(r, k) * p[k];
        }
        if (!is_zero(c)) conds.push_back(std::move(c));
      }
    }
    const Matrix ker = conds.empty() ? Matrix::identity(perp.dim()) : kernel(Matrix::from_rows(perp.dim(), conds));
    std::vector<Vec> fresh;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
      Vec v(d);
      for (std::size_t j = 0; j < perp.dim(); ++j) axpy(v, ker(r, j), perp.basis_vector(j));
      v = w.reduce(v);
      if (!is_zero(v)) fresh.push_back(std::move(v));
    }
    const GradedSubspace stable = span_of(par, fresh);
    if (stable.is_zero()) throw Error(ErrorCode::NotNilpotent, "no stable vector beyond W (nilpotency inconsistency)");

    std::optional<Vec> pick;
    for (std::size_t r = 0; r < stable.dim() && !pick; ++r) {
      if (stable.basis_parity(r) == Parity::odd) pick = stable.basis_vector(r);
    }
    for (std::size_t r = 0; r < stable.dim() && !pick; ++r) {
      const Vec v = stable.basis_vector(r);
      if (pair(m.gram, v, v).is_zero()) pick = v;
    }
    if (!pick) {
      if (stable.dim() < 2) throw Error(ErrorCode::NotNilpotent, "single anisotropic stable vector");
      const Vec v = stable.basis_vector(0);
      Vec u = stable.basis_vector(1);
      const Rational a = pair(m.gram, v, v);
      axpy(u, -(pair(m.gram, v, u) / a), v);
      const Rational b = pair(m.gram, u, u);
      if (b.is_zero()) {
        pick = u;
      } else {
        const auto t = (-a / b).sqrt();
        if (!t) {
          throw Error(ErrorCode::NonSquareScalar, "isotropic stable vector needs sqrt(" + (-a / b).str() +
                                                      "); the construction assumes an algebraically closed field");
        }
        Vec x = v;
        axpy(x, *t, u);
        pick = std::move(x);
      }
    }
    std::vector<Vec> gens = rows_of(w);
    gens.push_back(*pick);
    w = span_of(par, gens);
  }

  MaximalIsotropic out;
  out.subspace = w;
  out.isotropic = is_isotropic(m.gram, w);
  out.stable = is_graded_ideal(g, w);
  out.dimension = w.dim() == d / 2;
  if (d % 2 == 1) {
    const GradedSubspace perp = orth_complement(m.gram, w);
    bool into = true;
    for (const Matrix& a : ads) {
      for (std::size_t r = 0; r < perp.dim() && into; ++r) into = w.contains(a * perp.basis_vector(r));
    }
    out.perp_into = into;
  }
  return out;
}

LineExtension extend_by_line(const MetricAlgebra& m, const GradedSubspace& i) {
  const NLieSuperalgebra& g = m.algebra;
  const std::size_t d = g.dim();
  if (d % 2 == 0) throw Error(ErrorCode::EvenDimension, "line extension needs an odd-dimensional algebra");
  if (!is_isotropic(m.gram, i)) throw Error(ErrorCode::NotIsotropic, "subspace is not isotropic");
  const GradedSubspace perp = orth_complement(m.gram, i);
  if (perp.dim() != i.dim() + 1) throw Error(ErrorCode::WrongDimension, "subspace is not maximal isotropic");
  Vec u;
  for (std::size_t r = 0; r < perp.dim() && u.empty(); ++r) {
    Vec v = i.reduce(perp.basis_vector(r));
    if (!is_zero(v)) u = std::move(v);
  }
  const Rational c = pair(m.gram, u, u);
  if (c.is_zero()) throw Error(ErrorCode::WrongDimension, "subspace is not maximal isotropic");
  const auto t = (Rational(-1) / c).sqrt();
  if (!t) {
    throw Error(ErrorCode::NonSquareScalar, "need z in I^perp with <z, z> = -1, i.e. sqrt(" +
                                                (Rational(-1) / c).str() +
                                                "); the construction assumes an algebraically closed field");
  }
  LineExtension out;
  out.z = u;
  for (auto& x : out.z) x *= *t;

  std::string alpha = "alpha";
  while (g.space().find(alpha)) alpha += "'";
  out.algebra = metric_direct_sum(m, metric_line(g.arity(), Rational(1), alpha));
  const NLieSuperalgebra& gp = out.algebra.algebra;
  const auto& par = gp.parities();
  out.beta = extend(out.z, d + 1);
  out.beta[d] = Rational(1);
  std::vector<Vec> gens;
  for (std::size_t r = 0; r < i.dim(); ++r) gens.push_back(extend(i.basis_vector(r), d + 1));
  gens.push_back(out.beta);
  out.ideal = span_of(par, gens);

  Quotient q = quotient(g, i);
  out.quotient = q.algebra;
  out.to_quotient = Matrix(q.algebra.dim(), d + 1);
  const Vec pz = q.projection * out.z;
  for (std::size_t k = 0; k < q.algebra.dim(); ++k) {
    for (std::size_t c2 = 0; c2 < d; ++c2) out.to_quotient(k, c2) = q.projection(k, c2);
    out.to_quotient(k, d) = -pz[k];
  }

  out.metric = form_properties(gp, out.algebra.gram).all();
  std::vector<std::size_t> base(d);
  for (std::size_t k = 0; k < d; ++k) base[k] = k;
  out.codim_one_ideal = is_graded_ideal(gp, GradedSubspace::coordinate(par, base)) && rank(m.gram) == d;
  out.isotropic_ideal = is_isotropic(out.algebra.gram, out.ideal) && is_graded_ideal(gp, out.ideal) &&
                        out.ideal.dim() == (d + 1) / 2;
  const Matrix ker = kernel(out.to_quotient);
  out.homomorphism = !homomorphism_defect(gp, q.algebra, out.to_quotient) &&
                     GradedSubspace::span(par, ker, true) == out.ideal;
  out.perp_abelian = bracket_with_pair(g, perp, perp).is_zero();
  return out;
}

DualityReport centralizer_duality(const MetricAlgebra& m) {
  const NLieSuperalgebra& g = m.algebra;
  const std::size_t d = g.dim();
  const auto& par = g.parities();
  DualityReport r;
  auto note = [&](std::string s) {
    if (!r.witness) r.witness = std::move(s);
  };

  std::vector<GradedSubspace> lower{whole(g)}, cent{nothing(g)};
  for (std::size_t k = 0; k <= d + 1; ++k) {
    std::vector<GradedSubspace> slots(g.arity(), whole(g));
    slots[0] = lower.back();
    lower.push_back(bracket_span(g, slots));
    cent.push_back(centralizer(g, cent.back()));
  }

  std::vector<GradedSubspace> samples{nothing(g), whole(g)};
  for (std::size_t k = 0; k < d; ++k) samples.push_back(GradedSubspace::coordinate(par, {k}));
  for (std::size_t k = 1; k < lower.size(); ++k) samples.push_back(lower[k]);
  for (std::size_t k = 1; k < cent.size(); ++k) samples.push_back(cent[k]);
  for (const GradedSubspace& v : samples) {
    std::vector<GradedSubspace> slots(g.arity() - 1, whole(g));
    slots.push_back(orth_complement(m.gram, v));
    if (!(centralizer(g, v) == orth_complement(m.gram, bracket_span(g, slots)))) {
      r.centralizers = false;
      note("C(V) != [g, .., g, V^perp]^perp for a sample of dimension " + std::to_string(v.dim()));
    }
    ++r.samples;
  }

  for (std::size_t k = 0; k < lower.size(); ++k) {
    if (!(lower[k] == orth_complement(m.gram, cent[k]))) {
      r.lower_central = false;
      note("g^" + std::to_string(k) + " != C_" + std::to_string(k) + "^perp");
    }
  }

  if (const auto len = series(g).nilpotent_length) {
    bool ok = true;
    for (std::size_t k = 0; k <= *len; ++k) {
      if (!cent[*len - k].contains(lower[k])) {
        ok = false;
        note("g^" + std::to_string(k) + " not inside C_" + std::to_string(*len - k));
      }
    }
    r.nested = ok;
  }
  return r;
}

PipelineRecord nilpotent_pipeline(const MetricAlgebra& m) {
  const NLieSuperalgebra& g = m.algebra;
  const SeriesReport sr = series(g);
  if (!sr.nilpotent_length) throw Error(ErrorCode::NotNilpotent, "pipeline needs a nilpotent algebra");
  PipelineRecord rec;
  rec.nilpotent_length = *sr.nilpotent_length;
  const std::size_t k = rec.nilpotent_length;
  rec.bound = (k + 1) / 2;

  std::vector<GradedSubspace> lower{whole(g)}, cent{nothing(g)};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<GradedSubspace> slots(g.arity(), whole(g));
    slots[0] = lower.back();
    lower.push_back(bracket_span(g, slots));
    cent.push_back(centralizer(g, cent.back()));
  }
  GradedSubspace seed = nothing(g);
  for (std::size_t i = 0; i <= k; ++i) seed = sum(seed, intersect(lower[i], cent[i]));
  rec.seed = seed;
  rec.seed_isotropic_ideal = is_isotropic(m.gram, seed) && is_graded_ideal(g, seed);
  rec.seed_contains_power = seed.contains(lower[rec.bound]);

  rec.maximal = maximal_isotropic_stable(m, seed);
  if (g.dim() % 2 == 0) {
    rec.reconstruction = reconstruct_tstar(m, rec.maximal.subspace);
  } else {
    rec.line = extend_by_line(m, rec.maximal.subspace);
    rec.reconstruction = reconstruct_tstar(rec.line->algebra, rec.line->ideal);
  }
  rec.quotient_length = series(rec.reconstruction.quotient).nilpotent_length.value_or(g.dim() + 1);
  return rec;
}

}  // namespace nlsa
