#include "nlsa/extensions.hpp"

#include <unordered_map>

#include "nlsa/error.hpp"

namespace nlsa {

std::vector<Cochain> compatible_cocycle_basis(const Representation& rho, Parity p) {
  const CompatibleBasis cb(rho, 1);
  const CochainSpace& s = cb.space();
  const std::vector<std::size_t> kept = cb.indices_of_parity(p);
  const std::vector<std::size_t> cols = s.coords_of_parity(p);
  std::unordered_map<std::size_t, std::size_t> compact;
  for (std::size_t i = 0; i < kept.size(); ++i) compact.emplace(kept[i], i);
  const DeltaMatrix dm = delta_matrix(rho, 1, p);
  std::vector<SparseRow> rows;
  for (const auto& row : dm.entries) {
    SparseRow r;
    for (const auto& [c, v] : row) {
      if (auto loc = cb.locate(cols[c])) r.emplace_back(compact.at(loc->first), Rational(loc->second) * v);
    }
    rows.push_back(std::move(r));
  }
  const Matrix ker = sparse_kernel(rows, kept.size());
  std::vector<Cochain> out;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Cochain f = Cochain::zero(s, p);
    for (std::size_t k = 0; k < kept.size(); ++k) {
      if (ker(r, k).is_zero()) continue;
      axpy(f.coefficients, ker(r, k), cb.vector(kept[k]));
    }
    out.push_back(std::move(f));
  }
  return out;
}

Extension build_extension(const ExtensionDatum& d) {
  if (!d.fiber.is_abelian()) throw Error(ErrorCode::NotAbelianIdeal, "fiber algebra is not abelian");
  if (!(d.action.algebra() == d.base) || !(d.action.target() == d.fiber.space())) {
    throw Error(ErrorCode::DimensionMismatch, "action must be a representation of the base on the fiber");
  }
  const RepresentationReport rr = check_representation(d.action);
  if (!rr.ok()) throw Error(ErrorCode::InvalidRepresentation, rr.witness.value_or("action fails the module axioms"));
  const CochainSpace s(d.action, 1);
  if (d.cocycle.degree != 1) throw Error(ErrorCode::DimensionMismatch, "extension cocycle must have degree 1");
  if (d.cocycle.parity != Parity::even) throw Error(ErrorCode::WrongParity, "extension cocycle must be even");
  check_cochain(s, d.cocycle);
  if (!wedge_compatible(d.action, d.cocycle)) {
    throw Error(ErrorCode::NotWedgeCompatible, "cocycle is not super-antisymmetric in its last n arguments");
  }
  if (!is_zero(delta(d.action, d.cocycle).coefficients)) throw Error(ErrorCode::NotACocycle, "delta f != 0");

  Extension e;
  e.algebra = twisted_semidirect(d.action, d.cocycle, d.base.name() + "~" + d.fiber.name());
  const std::size_t db = d.base.dim(), da = d.fiber.dim();
  e.inclusion = Matrix(db + da, da);
  for (std::size_t i = 0; i < da; ++i) e.inclusion(db + i, i) = Rational(1);
  e.projection = Matrix(db, db + da);
  for (std::size_t i = 0; i < db; ++i) e.projection(i, i) = Rational(1);
  return e;
}

ExtractedCocycle extract_cocycle(const NLieSuperalgebra& g, const GradedSubspace& a,
                                 const std::optional<Matrix>& section) {
  if (a.parities() != g.parities()) throw Error(ErrorCode::AmbientMismatch, "extract_cocycle");
  if (!is_abelian_ideal(g, a)) throw Error(ErrorCode::NotAbelianIdeal, "subspace is not an abelian graded ideal");
  Quotient q = quotient(g, a);
  const NLieSuperalgebra& b = q.algebra;
  const std::size_t dg = g.dim(), db = b.dim(), da = a.dim();

  Matrix tau(dg, db);
  if (section) {
    tau = *section;
    if (tau.rows() != dg || tau.cols() != db) throw Error(ErrorCode::NotASection, "section has the wrong shape");
    if (!(q.projection * tau == Matrix::identity(db))) throw Error(ErrorCode::NotASection, "projection o section != id");
    for (std::size_t k = 0; k < db; ++k) {
      const auto p = parity_of(tau.col_vec(k), g.parities());
      if (!p || *p != b.space().parity(k)) throw Error(ErrorCode::NotASection, "section is not even");
    }
  } else {
    for (std::size_t k = 0; k < db; ++k) tau(q.lift_indices[k], k) = Rational(1);
  }

  std::vector<BasisElement> fiber_basis;
  for (std::size_t r = 0; r < da; ++r) fiber_basis.push_back(g.space().basis()[a.pivots()[r]]);
  NLieSuperalgebra fiber(g.name() + "|a", g.arity(), GradedSpace(std::move(fiber_basis)), {});

  std::vector<Vec> lifts;
  for (std::size_t k = 0; k < db; ++k) lifts.push_back(tau.col_vec(k));

  const WedgeBasis words = fundamental_basis(b);
  const std::size_t n = g.arity();
  std::vector<Matrix> mats;
  std::vector<Vec> args(n);
  for (std::size_t w = 0; w < words.size(); ++w) {
    Matrix m(da, da);
    for (std::size_t i = 0; i + 1 < n; ++i) args[i] = lifts[words.word(w)[i]];
    for (std::size_t r = 0; r < da; ++r) {
      args[n - 1] = a.basis_vector(r);
      const Vec c = a.coordinates(g.bracket(args));
      for (std::size_t k = 0; k < da; ++k) m(k, r) = c[k];
    }
    mats.push_back(std::move(m));
  }
  Representation rho(b, fiber.space(), std::move(mats), "induced");

  const CochainSpace s(rho, 1);
  Cochain f = Cochain::zero(s, Parity::even);
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (std::size_t i = 0; i + 1 < n; ++i) args[i] = lifts[words.word(w)[i]];
    Word bw = words.word(w);
    bw.push_back(0);
    for (std::size_t z = 0; z < db; ++z) {
      args[n - 1] = lifts[z];
      bw.back() = z;
      Vec v = g.bracket(args);
      axpy(v, Rational(-1), tau * b.bracket_basis(bw));
      const Vec c = a.coordinates(v);
      const std::size_t d = s.encode(std::vector<std::size_t>{w}, z);
      for (std::size_t k = 0; k < da; ++k) f.coefficients[d * da + k] = c[k];
    }
  }

  ExtractedCocycle out{ExtensionDatum{b, fiber, rho, f}, tau, false, false};
  out.action_verified = check_representation(rho).ok();
  bool even = true;
  for (std::size_t c = 0; c < s.size(); ++c) {
    if (!f.coefficients[c].is_zero() && s.coord_parity(c) != Parity::even) even = false;
  }
  out.cocycle_verified = even && out.action_verified && is_zero(delta(rho, f).coefficients);
  return out;
}

}  // namespace nlsa
