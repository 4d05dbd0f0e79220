#include "nlsa/graded.hpp"

#include <algorithm>

#include "nlsa/error.hpp"

namespace nlsa {

const char* parity_name(Parity p) { return is_odd(p) ? "odd" : "even"; }

Parity parse_parity(std::string_view s) {
  if (s == "even" || s == "0") return Parity::even;
  if (s == "odd" || s == "1") return Parity::odd;
  throw Error(ErrorCode::Parse, "malformed parity '" + std::string(s) + "' (expected \"even\" or \"odd\")");
}

GradedSpace::GradedSpace(std::vector<BasisElement> basis) : basis_(std::move(basis)) {
  parities_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].name.empty()) throw Error(ErrorCode::Parse, "empty basis name");
    if (!index_.emplace(basis_[i].name, i).second) {
      throw Error(ErrorCode::Parse, "duplicate basis name '" + basis_[i].name + "'");
    }
    parities_.push_back(basis_[i].parity);
    if (!is_odd(basis_[i].parity)) ++dim_even_;
  }
}

GradedSpace GradedSpace::standard(std::size_t even, std::size_t odd, const std::string& even_prefix,
                                  const std::string& odd_prefix) {
  std::vector<BasisElement> b;
  for (std::size_t i = 1; i <= even; ++i) b.push_back({even_prefix + std::to_string(i), Parity::even});
  for (std::size_t i = 1; i <= odd; ++i) b.push_back({odd_prefix + std::to_string(i), Parity::odd});
  return GradedSpace(std::move(b));
}

std::optional<std::size_t> GradedSpace::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GradedSpace::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorCode::UnknownName, "unknown basis element '" + std::string(name) + "'");
}

std::optional<Parity> GradedSpace::parity_of(std::span<const Rational> v) const {
  return nlsa::parity_of(v, parities_);
}

std::optional<Parity> parity_of(std::span<const Rational> v, const std::vector<Parity>& parities) {
  if (v.size() != parities.size()) throw Error(ErrorCode::DimensionMismatch, "parity_of");
  bool has_even = false, has_odd = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    (is_odd(parities[i]) ? has_odd : has_even) = true;
  }
  if (has_even && has_odd) return std::nullopt;
  return has_odd ? Parity::odd : Parity::even;
}

GradedSubspace::GradedSubspace(std::vector<Parity> parities, Echelon e)
    : parities_(std::move(parities)), basis_(std::move(e.rows)), pivots_(std::move(e.pivots)) {
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    if (!nlsa::parity_of(basis_.row(r), parities_)) {
      throw Error(ErrorCode::NotHomogeneous, "echelon row is not homogeneous");
    }
  }
}

GradedSubspace GradedSubspace::zero(std::vector<Parity> parities) {
  const std::size_t n = parities.size();
  return GradedSubspace(std::move(parities), Echelon{Matrix(0, n), {}});
}

GradedSubspace GradedSubspace::full(std::vector<Parity> parities) {
  const std::size_t n = parities.size();
  std::vector<std::size_t> piv(n);
  for (std::size_t i = 0; i < n; ++i) piv[i] = i;
  return GradedSubspace(std::move(parities), Echelon{Matrix::identity(n), std::move(piv)});
}

GradedSubspace GradedSubspace::span(std::vector<Parity> parities, const std::vector<Vec>& generators,
                                    bool split_by_parity) {
  const std::size_t n = parities.size();
  Matrix m(0, n);
  for (const Vec& g : generators) {
    if (g.size() != n) throw Error(ErrorCode::DimensionMismatch, "generator length");
    if (nlsa::parity_of(g, parities)) {
      m.append_row(g);
      continue;
    }
    if (!split_by_parity) throw Error(ErrorCode::NotHomogeneous, "generator is not parity-homogeneous");
    Vec ev(n), od(n);
    for (std::size_t i = 0; i < n; ++i) (is_odd(parities[i]) ? od : ev)[i] = g[i];
    m.append_row(ev);
    m.append_row(od);
  }
  return GradedSubspace(std::move(parities), row_reduce(std::move(m)));
}

GradedSubspace GradedSubspace::span(std::vector<Parity> parities, const Matrix& generators, bool split_by_parity) {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < generators.rows(); ++r) rows.push_back(generators.row_vec(r));
  return span(std::move(parities), rows, split_by_parity);
}

GradedSubspace GradedSubspace::coordinate(std::vector<Parity> parities, const std::vector<std::size_t>& indices) {
  std::vector<Vec> gens;
  for (auto i : indices) gens.push_back(unit_vec(parities.size(), i));
  return span(std::move(parities), gens);
}

Parity GradedSubspace::basis_parity(std::size_t r) const { return parities_[pivots_[r]]; }

std::size_t GradedSubspace::dim_even() const {
  return static_cast<std::size_t>(
      std::count_if(pivots_.begin(), pivots_.end(), [&](std::size_t p) { return !is_odd(parities_[p]); }));
}

Vec GradedSubspace::reduce(std::span<const Rational> v) const {
  if (v.size() != ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "GradedSubspace::reduce");
  Vec out(v.begin(), v.end());
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Rational f = out[pivots_[r]];
    if (!f.is_zero()) axpy(out, -f, basis_.row(r));
  }
  return out;
}

bool GradedSubspace::contains(std::span<const Rational> v) const { return nlsa::is_zero(reduce(v)); }

bool GradedSubspace::contains(const GradedSubspace& other) const {
  if (other.parities_ != parities_) throw Error(ErrorCode::AmbientMismatch, "contains");
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Vec GradedSubspace::coordinates(std::span<const Rational> v) const {
  if (!contains(v)) throw Error(ErrorCode::DimensionMismatch, "vector is not in the subspace");
  Vec c(dim());
  for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
  return c;
}

std::vector<std::size_t> GradedSubspace::complement_indices() const {
  std::vector<bool> piv(ambient_dim(), false);
  for (auto p : pivots_) piv[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_dim(); ++i) {
    if (!piv[i]) out.push_back(i);
  }
  return out;
}

Matrix GradedSubspace::annihilator() const {
  if (dim() == 0) return Matrix::identity(ambient_dim());
  return kernel(basis_);
}

GradedSubspace sum(const GradedSubspace& a, const GradedSubspace& b) {
  if (a.parities() != b.parities()) throw Error(ErrorCode::AmbientMismatch, "sum of subspaces");
  Matrix m = a.basis();
  for (std::size_t r = 0; r < b.dim(); ++r) m.append_row(b.basis().row(r));
  if (m.cols() == 0) m = Matrix(0, a.ambient_dim());
  return GradedSubspace::span(a.parities(), m);
}

GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b) {
  if (a.parities() != b.parities()) throw Error(ErrorCode::AmbientMismatch, "intersection of subspaces");
  Matrix eqs = a.annihilator();
  const Matrix eb = b.annihilator();
  for (std::size_t r = 0; r < eb.rows(); ++r) eqs.append_row(eb.row(r));
  if (eqs.rows() == 0) return GradedSubspace::full(a.parities());
  return GradedSubspace::span(a.parities(), kernel(eqs));
}

GradedSubspace orth_complement(const Matrix& gram, const GradedSubspace& w) {
  const std::size_t n = w.ambient_dim();
  if (gram.rows() != n || gram.cols() != n) throw Error(ErrorCode::DimensionMismatch, "Gram matrix size");
  if (w.dim() == 0) return GradedSubspace::full(w.parities());
  // B(x, w) = x^T G w, so each w contributes the row (G w)^T.
  Matrix eqs(w.dim(), n);
  for (std::size_t r = 0; r < w.dim(); ++r) {
    const Vec gw = gram * w.basis().row(r);
    std::copy(gw.begin(), gw.end(), eqs.row(r).begin());
  }
  return GradedSubspace::span(w.parities(), kernel(eqs));
}

GradedSubspace image(const Matrix& map, const GradedSubspace& w, std::vector<Parity> target_parities) {
  if (map.cols() != w.ambient_dim() || map.rows() != target_parities.size()) {
    throw Error(ErrorCode::DimensionMismatch, "image");
  }
  std::vector<Vec> gens;
  for (std::size_t r = 0; r < w.dim(); ++r) gens.push_back(map * w.basis().row(r));
  return GradedSubspace::span(std::move(target_parities), gens);
}

}  // namespace nlsa
