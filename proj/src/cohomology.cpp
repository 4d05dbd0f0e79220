#include "nlsa/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "nlsa/error.hpp"

namespace nlsa {

CochainSpace::CochainSpace(const Representation& rho, std::size_t m)
    : rho_(&rho),
      m_(m),
      nw_(rho.words().size()),
      dg_(rho.algebra().dim()),
      dv_(rho.target().dim()),
      domain_(dg_) {
  for (std::size_t i = 0; i < m_; ++i) {
    if (nw_ != 0 && domain_ > (std::size_t{1} << 40) / nw_) throw Error(ErrorCode::DimensionMismatch, "cochain space too large");
    domain_ *= nw_;
  }
}

std::size_t CochainSpace::encode(std::span<const std::size_t> ws, std::size_t z) const {
  if (ws.size() != m_) throw Error(ErrorCode::ArityMismatch, "cochain argument count");
  std::size_t d = 0;
  for (auto w : ws) d = d * nw_ + w;
  return d * dg_ + z;
}

void CochainSpace::decode(std::size_t d, std::vector<std::size_t>& ws, std::size_t& z) const {
  ws.resize(m_);
  z = d % dg_;
  d /= dg_;
  for (std::size_t i = m_; i > 0; --i) {
    ws[i - 1] = d % nw_;
    d /= nw_;
  }
}

Parity CochainSpace::domain_parity(std::size_t d) const {
  Parity p = rho_->algebra().space().parity(d % dg_);
  d /= dg_;
  for (std::size_t i = 0; i < m_; ++i) {
    p += rho_->words().parity(d % nw_);
    d /= nw_;
  }
  return p;
}

Parity CochainSpace::coord_parity(std::size_t coord) const {
  return rho_->target().parity(coord % dv_) + domain_parity(coord / dv_);
}

std::vector<std::size_t> CochainSpace::coords_of_parity(Parity p) const {
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d < domain_; ++d) {
    const Parity dp = domain_parity(d);
    for (std::size_t u = 0; u < dv_; ++u) {
      if (rho_->target().parity(u) + dp == p) out.push_back(d * dv_ + u);
    }
  }
  return out;
}

void check_cochain(const CochainSpace& s, const Cochain& f) {
  if (f.degree != s.degree() || f.coefficients.size() != s.size()) {
    throw Error(ErrorCode::DimensionMismatch, "cochain does not match its space");
  }
  for (std::size_t c = 0; c < s.size(); ++c) {
    if (!f.coefficients[c].is_zero() && s.coord_parity(c) != f.parity) {
      throw Error(ErrorCode::WrongParity, "cochain has a coefficient outside its parity");
    }
  }
}

namespace {

DeltaEngine::Eval basis_eval(const CochainSpace& s, Parity p) {
  return [&s, p](std::span<const std::size_t> ws, std::size_t z) {
    const std::size_t d = s.encode(ws, z);
    const Parity dp = s.domain_parity(d);
    const auto& vp = s.rep().target().parities();
    SymVec out;
    for (std::size_t u = 0; u < vp.size(); ++u) {
      if (vp[u] + dp == p) out.push_back({static_cast<std::uint32_t>(u), d * vp.size() + u, Rational(1)});
    }
    return out;
  };
}

std::string point_str(const CochainSpace& s, std::size_t d) {
  std::vector<std::size_t> ws;
  std::size_t z = 0;
  s.decode(d, ws, z);
  const auto& rep = s.rep();
  std::string out = "(";
  for (auto w : ws) {
    for (std::size_t i = 0; i < rep.words().word(w).size(); ++i) {
      out += (i ? "^" : "") + rep.algebra().space().name(rep.words().word(w)[i]);
    }
    out += ", ";
  }
  return out + rep.algebra().space().name(z) + ")";
}

}  // namespace

Cochain delta(const Representation& rho, const Cochain& f) {
  const CochainSpace from(rho, f.degree);
  check_cochain(from, f);
  const CochainSpace to(rho, f.degree + 1);
  const DeltaEngine eng(rho);
  const std::size_t dv = from.target_dim();
  DeltaEngine::Eval eval = [&](std::span<const std::size_t> ws, std::size_t z) {
    const std::size_t d = from.encode(ws, z);
    SymVec out;
    for (std::size_t u = 0; u < dv; ++u) {
      const Rational& c = f.coefficients[d * dv + u];
      if (!c.is_zero()) out.push_back({static_cast<std::uint32_t>(u), 0, c});
    }
    return out;
  };
  Cochain out = Cochain::zero(to, f.parity);
  std::vector<std::size_t> ws;
  std::size_t z = 0;
  for (std::size_t d = 0; d < to.domain_size(); ++d) {
    to.decode(d, ws, z);
    SymVec s = eng.apply(eval, f.parity, ws, z);
    normalize(s);
    for (auto& t : s) out.coefficients[d * dv + t.comp] = std::move(t.coef);
  }
  return out;
}

DeltaMatrix delta_matrix(const Representation& rho, std::size_t m, Parity p) {
  const CochainSpace from(rho, m);
  const CochainSpace to(rho, m + 1);
  const std::vector<std::size_t> cols = from.coords_of_parity(p);
  const std::vector<std::size_t> rows = to.coords_of_parity(p);
  std::vector<std::int64_t> col_index(from.size(), -1);
  for (std::size_t j = 0; j < cols.size(); ++j) col_index[cols[j]] = static_cast<std::int64_t>(j);

  DeltaMatrix out{m, p, rows.size(), cols.size(), std::vector<SparseRow>(rows.size())};
  const DeltaEngine eng(rho);
  const auto eval = basis_eval(from, p);
  const std::size_t dv = to.target_dim();
  std::vector<std::size_t> ws;
  std::size_t z = 0;
  std::size_t r = 0;  // cursor into rows
  for (std::size_t d = 0; d < to.domain_size(); ++d) {
    to.decode(d, ws, z);
    SymVec s = eng.apply(eval, p, ws, z);
    normalize(s);
    for (auto& t : s) {
      const std::size_t coord = d * dv + t.comp;
      while (r < rows.size() && rows[r] < coord) ++r;
      if (r == rows.size() || rows[r] != coord) {
        throw Error(ErrorCode::WrongParity, "coboundary left its parity block at " + point_str(to, d));
      }
      out.entries[r].emplace_back(static_cast<std::size_t>(col_index[t.key]), std::move(t.coef));
    }
  }
  return out;
}

Matrix dense(const DeltaMatrix& d) {
  Matrix m(d.rows, d.cols);
  for (std::size_t r = 0; r < d.rows; ++r) {
    for (const auto& [c, v] : d.entries[r]) m(r, c) = v;
  }
  return m;
}

namespace {

template <class Coef>
DeltaSquareReport delta_squared_in(const Representation& rho, std::size_t m, Parity p) {
  using Engine = BasicDeltaEngine<Coef>;
  using Sym = typename Engine::SymVec;
  const CochainSpace base(rho, m);
  const CochainSpace top(rho, m + 2);
  const Engine eng(rho);
  const std::size_t dv = base.target_dim();
  const auto& vp = rho.target().parities();
  typename Engine::Eval eval = [&](std::span<const std::size_t> ws, std::size_t z) {
    const std::size_t d = base.encode(ws, z);
    const Parity dp = base.domain_parity(d);
    Sym out;
    for (std::size_t u = 0; u < dv; ++u) {
      if (vp[u] + dp == p) out.push_back({static_cast<std::uint32_t>(u), d * dv + u, Coef(1)});
    }
    return out;
  };
  typename Engine::Eval once = [&](std::span<const std::size_t> ws, std::size_t z) {
    Sym s = eng.apply(eval, p, ws, z);
    normalize(s);
    return s;
  };
  DeltaSquareReport rep;
  std::vector<std::size_t> ws;
  std::size_t z = 0;
  for (std::size_t d = 0; d < top.domain_size(); ++d) {
    top.decode(d, ws, z);
    Sym s = eng.apply(once, p, ws, z);
    normalize(s);
    ++rep.rows_checked;
    if (!s.empty()) {
      rep.zero = false;
      rep.witness = "delta^2 nonzero at " + point_str(top, d);
      return rep;
    }
  }
  return rep;
}

bool integral(const Representation& rho) {
  for (const auto& [k, v] : rho.algebra().constants()) {
    for (const auto& x : v) {
      if (!CheckedInt::from(x)) return false;
    }
  }
  for (const auto& m : rho.matrices()) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (const auto& x : m.row(r)) {
        if (!CheckedInt::from(x)) return false;
      }
    }
  }
  return true;
}

}  // namespace

DeltaSquareReport delta_squared(const Representation& rho, std::size_t m, Parity p) {
  if (integral(rho)) {
    try {
      return delta_squared_in<CheckedInt>(rho, m, p);
    } catch (const CheckedInt::Overflow&) {
      // fall through to exact rationals
    }
  }
  return delta_squared_in<Rational>(rho, m, p);
}

// ---------------------------------------------------------------------------

CompatibleBasis::CompatibleBasis(const Representation& rho, std::size_t m)
    : space_(rho, m), top_(rho.algebra().parities(), rho.algebra().arity()) {
  if (m == 0) throw Error(ErrorCode::ArityMismatch, "compatible cochains need degree at least 1");
  for (std::size_t i = 1; i < m; ++i) prefix_count_ *= space_.words();
  count_ = prefix_count_ * top_.size() * space_.target_dim();
}

std::optional<std::pair<std::size_t, int>> CompatibleBasis::locate(std::size_t coord) const {
  const std::size_t dv = space_.target_dim();
  const std::size_t u = coord % dv;
  std::vector<std::size_t> ws;
  std::size_t z = 0;
  space_.decode(coord / dv, ws, z);
  Word t = space_.rep().words().word(ws.back());
  t.push_back(z);
  const auto c = canonicalize(t, space_.rep().algebra().parities());
  if (!c) return std::nullopt;
  std::size_t prefix = 0;
  for (std::size_t i = 0; i + 1 < ws.size(); ++i) prefix = prefix * space_.words() + ws[i];
  return std::make_pair((prefix * top_.size() + *top_.find(c->word)) * dv + u, c->sign);
}

namespace {

// Domain points (last word, z) whose combined tuple canonicalises to `top`, with their signs.
std::vector<std::tuple<std::size_t, std::size_t, int>> orbit(const Representation& rho, const Word& top) {
  std::vector<std::tuple<std::size_t, std::size_t, int>> out;
  const auto& gp = rho.algebra().parities();
  for (std::size_t j = 0; j < top.size(); ++j) {
    if (j > 0 && top[j] == top[j - 1]) continue;
    Word rest;
    for (std::size_t k = 0; k < top.size(); ++k) {
      if (k != j) rest.push_back(top[k]);
    }
    Word t = rest;
    t.push_back(top[j]);
    out.emplace_back(*rho.words().find(rest), top[j], canonicalize(t, gp)->sign);
  }
  return out;
}

}  // namespace

Vec CompatibleBasis::vector(std::size_t k) const {
  const std::size_t dv = space_.target_dim();
  const std::size_t u = k % dv;
  const std::size_t t = (k / dv) % top_.size();
  std::size_t prefix = k / dv / top_.size();
  std::vector<std::size_t> ws(space_.degree());
  for (std::size_t i = space_.degree() - 1; i > 0; --i) {
    ws[i - 1] = prefix % space_.words();
    prefix /= space_.words();
  }
  Vec v(space_.size());
  for (const auto& [w, z, sign] : orbit(space_.rep(), top_.word(t))) {
    ws.back() = w;
    v[space_.encode(ws, z) * dv + u] = Rational(sign);
  }
  return v;
}

std::size_t CompatibleBasis::orbit_size(std::size_t k) const {
  const std::size_t t = (k / space_.target_dim()) % top_.size();
  return orbit(space_.rep(), top_.word(t)).size();
}

Parity CompatibleBasis::parity(std::size_t k) const {
  const std::size_t dv = space_.target_dim();
  const std::size_t u = k % dv;
  const std::size_t t = (k / dv) % top_.size();
  std::size_t prefix = k / dv / top_.size();
  Parity p = space_.rep().target().parity(u) + top_.parity(t);
  for (std::size_t i = 1; i < space_.degree(); ++i) {
    p += space_.rep().words().parity(prefix % space_.words());
    prefix /= space_.words();
  }
  return p;
}

std::vector<std::size_t> CompatibleBasis::indices_of_parity(Parity p) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < count_; ++k) {
    if (parity(k) == p) out.push_back(k);
  }
  return out;
}

Cochain project_wedge(const Representation& rho, const Cochain& f) {
  if (f.degree == 0) throw Error(ErrorCode::ArityMismatch, "project_wedge needs degree at least 1");
  const CochainSpace s(rho, f.degree);
  if (f.coefficients.size() != s.size()) throw Error(ErrorCode::DimensionMismatch, "project_wedge");
  const auto& gp = rho.algebra().parities();
  const std::size_t n = rho.algebra().arity();
  const std::size_t dv = s.target_dim();
  Rational fact(1);
  for (std::size_t i = 2; i <= n; ++i) fact *= Rational(static_cast<long>(i));
  const Rational inv = Rational(1) / fact;

  Cochain out{f.degree, f.parity, Vec(s.size())};
  std::vector<std::size_t> ws;
  std::size_t z = 0;
  for (std::size_t d = 0; d < s.domain_size(); ++d) {
    s.decode(d, ws, z);
    Word t = rho.words().word(ws.back());
    t.push_back(z);
    const auto ct = canonicalize(t, gp);
    if (!ct) continue;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Vec acc(dv);
    do {
      Word st(n);
      for (std::size_t i = 0; i < n; ++i) st[i] = t[perm[i]];
      const int est = canonicalize(st, gp)->sign;
      const auto head = canonicalize(std::span<const std::size_t>(st).first(n - 1), gp);
      std::vector<std::size_t> ws2 = ws;
      ws2.back() = *rho.words().find(head->word);
      const std::size_t d2 = s.encode(ws2, st.back());
      const Rational sg(ct->sign * est * head->sign);
      for (std::size_t u = 0; u < dv; ++u) {
        if (!f.coefficients[d2 * dv + u].is_zero()) acc[u] += sg * f.coefficients[d2 * dv + u];
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::size_t u = 0; u < dv; ++u) out.coefficients[d * dv + u] = acc[u] * inv;
  }
  return out;
}

bool wedge_compatible(const Representation& rho, const Cochain& f) { return project_wedge(rho, f) == f; }

namespace {

std::size_t sparse_rank(const std::vector<SparseRow>& rows, std::size_t cols) {
  SparseEliminator el(cols);
  for (const auto& r : rows) el.add(r);
  return el.rank();
}

// Rows of delta_m restricted to compatible cochains of parity p (columns in compact compatible order).
std::vector<SparseRow> restrict_columns(const DeltaMatrix& dm, const CochainSpace& from, const CompatibleBasis& cb,
                                        Parity p, std::size_t& ncols) {
  const std::vector<std::size_t> cols = from.coords_of_parity(p);
  const std::vector<std::size_t> kept = cb.indices_of_parity(p);
  std::unordered_map<std::size_t, std::size_t> compact;
  for (std::size_t i = 0; i < kept.size(); ++i) compact.emplace(kept[i], i);
  ncols = kept.size();
  std::vector<SparseRow> out;
  for (const auto& row : dm.entries) {
    SparseRow r;
    for (const auto& [c, v] : row) {
      if (auto loc = cb.locate(cols[c])) r.emplace_back(compact.at(loc->first), Rational(loc->second) * v);
    }
    normalize(r);
    out.push_back(std::move(r));
  }
  return out;
}

// Whether every column of `rows` (rows indexed by parity-p coords of C^m) is a compatible cochain.
bool columns_compatible(const std::vector<SparseRow>& rows, std::size_t ncols, const CochainSpace& target,
                        const CompatibleBasis& cb, Parity p) {
  const std::vector<std::size_t> coords = target.coords_of_parity(p);
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns(ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, v] : rows[r]) columns[c].emplace_back(coords[r], v);
  }
  for (const auto& col : columns) {
    std::unordered_map<std::size_t, std::pair<Rational, std::size_t>> seen;
    for (const auto& [coord, v] : col) {
      const auto loc = cb.locate(coord);
      if (!loc) return false;
      const Rational val = Rational(loc->second) * v;
      auto [it, inserted] = seen.try_emplace(loc->first, val, 0);
      if (!inserted && it->second.first != val) return false;
      ++it->second.second;
    }
    for (const auto& [k, info] : seen) {
      if (info.second != cb.orbit_size(k)) return false;
    }
  }
  return true;
}

}  // namespace

CohomologyDims cohomology_dims(const Representation& rho, std::size_t m, Parity p, Convention conv) {
  CohomologyDims out;
  const CochainSpace cm(rho, m);
  if (conv == Convention::full) {
    const DeltaMatrix dm = delta_matrix(rho, m, p);
    out.cochains = dm.cols;
    out.cocycles = dm.cols - sparse_rank(dm.entries, dm.cols);
    if (m > 0) {
      const DeltaMatrix prev = delta_matrix(rho, m - 1, p);
      out.coboundaries = sparse_rank(prev.entries, prev.cols);
    }
  } else {
    if (m == 0) throw Error(ErrorCode::ArityMismatch, "the compatible convention starts in degree 1");
    const CompatibleBasis cb(rho, m);
    std::size_t ncols = 0;
    const std::vector<SparseRow> rows = restrict_columns(delta_matrix(rho, m, p), cm, cb, p, ncols);
    out.cochains = ncols;
    out.cocycles = ncols - sparse_rank(rows, ncols);
    const DeltaMatrix prev = delta_matrix(rho, m - 1, p);
    if (m == 1) {
      out.coboundaries = sparse_rank(prev.entries, prev.cols);
      out.subcomplex_invariant = columns_compatible(prev.entries, prev.cols, cm, cb, p);
    } else {
      const CochainSpace cprev(rho, m - 1);
      const CompatibleBasis pb(rho, m - 1);
      std::size_t pcols = 0;
      const std::vector<SparseRow> prows = restrict_columns(prev, cprev, pb, p, pcols);
      out.coboundaries = sparse_rank(prows, pcols);
      out.subcomplex_invariant = columns_compatible(prows, pcols, cm, cb, p);
    }
  }
  out.cohomology = out.cocycles >= out.coboundaries ? out.cocycles - out.coboundaries : 0;
  return out;
}

NLieSuperalgebra twisted_semidirect(const Representation& rho, const Cochain& theta, const std::string& name) {
  const NLieSuperalgebra plain = semidirect(rho, name);
  const CochainSpace s(rho, 1);
  if (theta.degree != 1 || theta.coefficients.size() != s.size()) {
    throw Error(ErrorCode::DimensionMismatch, "twisting cochain must have degree 1");
  }
  const NLieSuperalgebra& g = rho.algebra();
  const std::size_t dg = g.dim(), dv = s.target_dim();
  NLieSuperalgebra::Constants consts = plain.constants();
  const WedgeBasis top(g.parities(), g.arity());
  for (const Word& k : top.words()) {
    const std::size_t w = *rho.words().find(std::span<const std::size_t>(k).first(k.size() - 1));
    const std::size_t d = s.encode(std::vector<std::size_t>{w}, k.back());
    Vec add(dg + dv);
    bool any = false;
    for (std::size_t u = 0; u < dv; ++u) {
      const Rational& c = theta.coefficients[d * dv + u];
      if (!c.is_zero()) {
        add[dg + u] = c;
        any = true;
      }
    }
    if (!any) continue;
    auto [it, inserted] = consts.try_emplace(k, Vec(dg + dv));
    axpy(it->second, Rational(1), add);
  }
  return NLieSuperalgebra(plain.name(), g.arity(), plain.space(), std::move(consts));
}

}  // namespace nlsa
