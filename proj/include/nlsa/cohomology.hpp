#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlsa/delta_engine.hpp"
#include "nlsa/linalg.hpp"
#include "nlsa/representation.hpp"

namespace nlsa {

/// C^m(g, V) as the full tensor space W^{(x)m} (x) g -> V, W the (n-1)-wedge basis.
///
/// A domain point is (w_1, ..., w_m, z); its index is ((w_1 W + w_2) W + ...) dim(g) + z.
/// Coordinate (domain d, target u) has index d * dim(V) + u.
class CochainSpace {
 public:
  CochainSpace(const Representation& rho, std::size_t m);

  [[nodiscard]] const Representation& rep() const { return *rho_; }
  [[nodiscard]] std::size_t degree() const { return m_; }
  [[nodiscard]] std::size_t words() const { return nw_; }
  [[nodiscard]] std::size_t domain_size() const { return domain_; }
  [[nodiscard]] std::size_t target_dim() const { return dv_; }
  [[nodiscard]] std::size_t size() const { return domain_ * dv_; }

  [[nodiscard]] std::size_t encode(std::span<const std::size_t> ws, std::size_t z) const;
  void decode(std::size_t d, std::vector<std::size_t>& ws, std::size_t& z) const;
  [[nodiscard]] Parity domain_parity(std::size_t d) const;
  [[nodiscard]] Parity coord_parity(std::size_t coord) const;

  /// Coordinates of parity-p cochains, ascending.
  [[nodiscard]] std::vector<std::size_t> coords_of_parity(Parity p) const;

 private:
  const Representation* rho_;
  std::size_t m_, nw_, dg_, dv_, domain_;
};

struct Cochain {
  std::size_t degree = 0;
  Parity parity = Parity::even;
  Vec coefficients;  // over CochainSpace(rho, degree).size()

  static Cochain zero(const CochainSpace& s, Parity p) { return {s.degree(), p, Vec(s.size())}; }
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// Throws WrongParity if some nonzero coefficient has the wrong parity.
void check_cochain(const CochainSpace& s, const Cochain& f);

[[nodiscard]] Cochain delta(const Representation& rho, const Cochain& f);

/// Matrix of delta on parity-p cochains of degree m, in compact coordinates:
/// column j is coords_of_parity(p)[j] of C^m, row i is coords_of_parity(p)[i] of C^{m+1}.
struct DeltaMatrix {
  std::size_t degree = 0;
  Parity parity = Parity::even;
  std::size_t rows = 0, cols = 0;
  std::vector<SparseRow> entries;  // one sparse row per row index
};

[[nodiscard]] DeltaMatrix delta_matrix(const Representation& rho, std::size_t m, Parity p);
[[nodiscard]] Matrix dense(const DeltaMatrix& d);

struct DeltaSquareReport {
  bool zero = true;
  std::size_t rows_checked = 0;
  std::optional<std::string> witness;
};

/// delta_{m+1} o delta_m on parity-p cochains, evaluated row by row without
/// storing either factor.
[[nodiscard]] DeltaSquareReport delta_squared(const Representation& rho, std::size_t m, Parity p);

// ---------------------------------------------------------------------------
// Wedge-compatible cochains (m >= 1): super-antisymmetric in the entries of the last
// fundamental object together with z.

/// Basis of the compatible subspace: (prefix words, canonical n-word, u), ordered lexicographically.
class CompatibleBasis {
 public:
  CompatibleBasis(const Representation& rho, std::size_t m);

  [[nodiscard]] std::size_t size() const { return count_; }
  /// Compact index and sign of a full coordinate, or nullopt if that coordinate is forced to zero.
  [[nodiscard]] std::optional<std::pair<std::size_t, int>> locate(std::size_t coord) const;
  /// Full-space vector of basis element k.
  [[nodiscard]] Vec vector(std::size_t k) const;
  /// Number of nonzero coordinates of vector(k).
  [[nodiscard]] std::size_t orbit_size(std::size_t k) const;
  [[nodiscard]] Parity parity(std::size_t k) const;
  [[nodiscard]] std::vector<std::size_t> indices_of_parity(Parity p) const;
  [[nodiscard]] const CochainSpace& space() const { return space_; }

 private:
  CochainSpace space_;
  WedgeBasis top_;  // canonical n-words of g
  std::size_t prefix_count_ = 1, count_ = 0;
};

[[nodiscard]] bool wedge_compatible(const Representation& rho, const Cochain& f);
[[nodiscard]] Cochain project_wedge(const Representation& rho, const Cochain& f);

enum class Convention { full, wedge_compatible };

struct CohomologyDims {
  std::size_t cochains = 0, cocycles = 0, coboundaries = 0, cohomology = 0;
  /// Only for the compatible convention: whether delta_{m-1} maps compatible cochains to compatible ones.
  std::optional<bool> subcomplex_invariant;
};

[[nodiscard]] CohomologyDims cohomology_dims(const Representation& rho, std::size_t m, Parity p,
                                             Convention conv = Convention::full);

/// g (+) V with [X, v] = rho(X) v and [x_1..x_n] = [x_1..x_n]_g + theta(x_1..x_{n-1}, x_n)
/// for an even compatible 1-cocycle theta. No checks beyond sizes; callers validate.
[[nodiscard]] NLieSuperalgebra twisted_semidirect(const Representation& rho, const Cochain& theta,
                                                  const std::string& name = "");

}  // namespace nlsa
