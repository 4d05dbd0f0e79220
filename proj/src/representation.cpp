#include "nlsa/representation.hpp"

#include <functional>

#include "nlsa/error.hpp"

namespace nlsa {

Representation::Representation(NLieSuperalgebra algebra, GradedSpace target, std::vector<Matrix> matrices,
                               std::string label)
    : algebra_(std::move(algebra)),
      target_(std::move(target)),
      words_(fundamental_basis(algebra_)),
      matrices_(std::move(matrices)),
      label_(std::move(label)) {
  if (matrices_.size() != words_.size()) throw Error(ErrorCode::DimensionMismatch, "one matrix per wedge word");
  for (const auto& m : matrices_) {
    if (m.rows() != target_.dim() || m.cols() != target_.dim()) {
      throw Error(ErrorCode::DimensionMismatch, "representation matrix size");
    }
  }
}

Matrix Representation::of_indices(std::span<const std::size_t> xs) const {
  const auto c = canonicalize(xs, algebra_.parities());
  if (!c) return Matrix(target_.dim(), target_.dim());
  const Matrix& m = matrices_[*words_.find(c->word)];
  return c->sign > 0 ? m : Rational(-1) * m;
}

Matrix Representation::of_vectors(std::span<const Vec> xs) const {
  if (xs.size() != words_.degree()) throw Error(ErrorCode::ArityMismatch, "representation argument count");
  Matrix out(target_.dim(), target_.dim());
  Word idx(xs.size());
  std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t slot, const Rational& coef) {
    if (slot == xs.size()) {
      if (auto c = canonicalize(idx, algebra_.parities())) {
        out = out + (coef * Rational(c->sign)) * matrices_[*words_.find(c->word)];
      }
      return;
    }
    for (std::size_t k = 0; k < xs[slot].size(); ++k) {
      if (xs[slot][k].is_zero()) continue;
      idx[slot] = k;
      rec(slot + 1, coef * xs[slot][k]);
    }
  };
  rec(0, Rational(1));
  return out;
}

Matrix Representation::of_fundamental(std::span<const Rational> x) const {
  if (x.size() != words_.size()) throw Error(ErrorCode::DimensionMismatch, "fundamental object length");
  Matrix out(target_.dim(), target_.dim());
  for (std::size_t w = 0; w < x.size(); ++w) {
    if (!x[w].is_zero()) out = out + x[w] * matrices_[w];
  }
  return out;
}

namespace {

std::string tuple_names(const GradedSpace& s, std::span<const std::size_t> t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? ", " : "") + s.name(t[i]);
  return out + ")";
}

}  // namespace

RepresentationReport check_representation(const Representation& rho) {
  RepresentationReport rep;
  const NLieSuperalgebra& g = rho.algebra();
  const auto& gp = g.parities();
  const auto& vp = rho.target().parities();
  const WedgeBasis& wb = rho.words();
  const std::size_t dv = rho.target().dim();

  for (std::size_t w = 0; w < wb.size() && rep.grading; ++w) {
    const Matrix& m = rho.matrix(w);
    for (std::size_t r = 0; r < dv && rep.grading; ++r) {
      for (std::size_t c = 0; c < dv; ++c) {
        if (!m(r, c).is_zero() && vp[r] != vp[c] + wb.parity(w)) {
          rep.grading = false;
          rep.witness = "rho" + tuple_names(g.space(), wb.word(w)) + " maps " + rho.target().name(c) +
                        " out of its parity block";
          break;
        }
      }
    }
  }

  const FundamentalTables tables(g);
  for (std::size_t a = 0; a < wb.size() && rep.commutator; ++a) {
    for (std::size_t b = 0; b < wb.size(); ++b) {
      Matrix lhs = rho.matrix(a) * rho.matrix(b);
      Matrix rhs = Rational(koszul(wb.parity(a), wb.parity(b))) * (rho.matrix(b) * rho.matrix(a));
      for (const auto& [k, c] : tables.composition(a, b)) rhs = rhs + c * rho.matrix(k);
      if (lhs != rhs) {
        rep.commutator = false;
        if (!rep.witness) {
          rep.witness = "commutator identity fails for X=" + tuple_names(g.space(), wb.word(a)) +
                        ", Y=" + tuple_names(g.space(), wb.word(b));
        }
        break;
      }
    }
  }

  // Both sides are super-skew in the y's and in the x's, so canonical words suffice.
  const std::size_t n = g.arity();
  const WedgeBasis xs(gp, n - 2);
  const WedgeBasis ys(gp, n);
  for (std::size_t xi = 0; xi < xs.size() && rep.bracket; ++xi) {
    const Word& x = xs.word(xi);
    const Parity px = xs.parity(xi);
    Word xz(x);
    xz.push_back(0);
    for (std::size_t yi = 0; yi < ys.size(); ++yi) {
      const Word& y = ys.word(yi);
      const Vec br = g.bracket_basis(y);
      Matrix lhs(dv, dv);
      for (std::size_t k = 0; k < br.size(); ++k) {
        if (br[k].is_zero()) continue;
        xz.back() = k;
        lhs = lhs + br[k] * rho.of_indices(xz);
      }
      Matrix rhs(dv, dv);
      for (std::size_t i = 0; i < n; ++i) {
        Parity rest = Parity::even, after = Parity::even;
        Word omit;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i) continue;
          rest += gp[y[j]];
          if (j > i) after += gp[y[j]];
          omit.push_back(y[j]);
        }
        const int sign = ((n - 1 - i) % 2 ? -1 : 1) * koszul(px, rest) * koszul(gp[y[i]], after);
        xz.back() = y[i];
        const Matrix right = rho.of_indices(xz);
        if (right.is_zero()) continue;
        rhs = rhs + Rational(sign) * (rho.of_indices(omit) * right);
      }
      if (lhs != rhs) {
        rep.bracket = false;
        if (!rep.witness) {
          rep.witness = "bracket identity fails for x=" + tuple_names(g.space(), x) + ", y=" + tuple_names(g.space(), y);
        }
        break;
      }
    }
  }
  return rep;
}

Representation adjoint(const NLieSuperalgebra& g) {
  const FundamentalTables t(g);
  std::vector<Matrix> ms;
  for (std::size_t w = 0; w < t.basis().size(); ++w) {
    Matrix m(g.dim(), g.dim());
    for (std::size_t z = 0; z < g.dim(); ++z) {
      for (const auto& [k, c] : t.action(w, z)) m(k, z) = c;
    }
    ms.push_back(std::move(m));
  }
  std::vector<BasisElement> names;
  for (const auto& b : g.space().basis()) names.push_back({b.name + "'", b.parity});
  return Representation(g, GradedSpace(std::move(names)), std::move(ms), "adjoint");
}

Representation coadjoint(const NLieSuperalgebra& g) {
  const Representation ad = adjoint(g);
  std::vector<Matrix> ms;
  const auto& p = g.parities();
  for (std::size_t w = 0; w < ad.words().size(); ++w) {
    const Matrix& a = ad.matrix(w);
    Matrix m(g.dim(), g.dim());
    // ad*(X) e_j* = sum_k -(-1)^{|X||j|} ad(X)[j][k] e_k*
    for (std::size_t j = 0; j < g.dim(); ++j) {
      for (std::size_t k = 0; k < g.dim(); ++k) {
        if (!a(j, k).is_zero()) m(k, j) = Rational(-koszul(ad.words().parity(w), p[j])) * a(j, k);
      }
    }
    ms.push_back(std::move(m));
  }
  std::vector<BasisElement> names;
  for (const auto& b : g.space().basis()) names.push_back({b.name + "*", b.parity});
  return Representation(g, GradedSpace(std::move(names)), std::move(ms), "coadjoint");
}

Representation trivial(const NLieSuperalgebra& g) {
  const WedgeBasis wb = fundamental_basis(g);
  return Representation(g, GradedSpace({{"k", Parity::even}}), std::vector<Matrix>(wb.size(), Matrix(1, 1)),
                        "trivial");
}

Representation module_by_name(const NLieSuperalgebra& g, const std::string& name) {
  if (name == "adjoint") return adjoint(g);
  if (name == "coadjoint") return coadjoint(g);
  if (name == "trivial") return trivial(g);
  throw Error(ErrorCode::Parse, "unknown module '" + name + "' (expected adjoint, coadjoint or trivial)");
}

NLieSuperalgebra semidirect(const Representation& rho, const std::string& name) {
  const RepresentationReport r = check_representation(rho);
  if (!r.ok()) throw Error(ErrorCode::InvalidRepresentation, r.witness.value_or("representation axioms fail"));
  const NLieSuperalgebra& g = rho.algebra();
  const std::size_t dg = g.dim();
  const std::size_t d = dg + rho.target().dim();
  std::vector<BasisElement> basis = g.space().basis();
  for (const auto& b : rho.target().basis()) {
    if (g.space().find(b.name)) throw Error(ErrorCode::Parse, "module basis name '" + b.name + "' clashes with g");
    basis.push_back(b);
  }
  NLieSuperalgebra::Constants consts;
  for (const auto& [k, v] : g.constants()) {
    Vec w(d);
    std::copy(v.begin(), v.end(), w.begin());
    consts.emplace(k, std::move(w));
  }
  const WedgeBasis& wb = rho.words();
  for (std::size_t w = 0; w < wb.size(); ++w) {
    const Matrix& m = rho.matrix(w);
    for (std::size_t v = 0; v < m.cols(); ++v) {
      Vec val(d);
      bool any = false;
      for (std::size_t k = 0; k < m.rows(); ++k) {
        if (m(k, v).is_zero()) continue;
        val[dg + k] = m(k, v);
        any = true;
      }
      if (!any) continue;
      Word key = wb.word(w);
      key.push_back(dg + v);
      consts.emplace(std::move(key), std::move(val));
    }
  }
  return NLieSuperalgebra(name.empty() ? g.name() + "+V" : name, g.arity(), GradedSpace(std::move(basis)),
                          std::move(consts));
}

}  // namespace nlsa
