#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlsa/algebra.hpp"
#include "nlsa/graded.hpp"
#include "nlsa/linalg.hpp"
#include "nlsa/wedge.hpp"

namespace nlsa {

/// Graded representation of g on V: one matrix on V per canonical (n-1)-wedge word of g.
class Representation {
 public:
  Representation() = default;
  /// `matrices[w]` acts on V for word w of fundamental_basis(algebra).
  Representation(NLieSuperalgebra algebra, GradedSpace target, std::vector<Matrix> matrices, std::string label = "");

  [[nodiscard]] const NLieSuperalgebra& algebra() const { return algebra_; }
  [[nodiscard]] const GradedSpace& target() const { return target_; }
  [[nodiscard]] const WedgeBasis& words() const { return words_; }
  [[nodiscard]] const Matrix& matrix(std::size_t word) const { return matrices_[word]; }
  [[nodiscard]] const std::vector<Matrix>& matrices() const { return matrices_; }
  [[nodiscard]] const std::string& label() const { return label_; }

  /// rho(x_1, ..., x_{n-1}) for basis indices in any order.
  [[nodiscard]] Matrix of_indices(std::span<const std::size_t> xs) const;
  /// rho(x_1, ..., x_{n-1}) for coordinate vectors, multilinearly.
  [[nodiscard]] Matrix of_vectors(std::span<const Vec> xs) const;
  /// rho(X) for X a vector over the wedge basis.
  [[nodiscard]] Matrix of_fundamental(std::span<const Rational> x) const;

 private:
  NLieSuperalgebra algebra_;
  GradedSpace target_;
  WedgeBasis words_;
  std::vector<Matrix> matrices_;
  std::string label_;
};

struct RepresentationReport {
  bool grading = true;
  bool commutator = true;  // rho(X)rho(Y) = rho(X o Y) + (-1)^{|X||Y|} rho(Y)rho(X)
  bool bracket = true;     // rho(x_1..x_{n-2}, [y_1..y_n]) expansion
  std::optional<std::string> witness;

  [[nodiscard]] bool ok() const { return grading && commutator && bracket; }
};

[[nodiscard]] RepresentationReport check_representation(const Representation& rho);

/// V = g, rho(X) = X . (-); target names carry a "'" suffix.
[[nodiscard]] Representation adjoint(const NLieSuperalgebra& g);
/// V = g*, ad*(X)(f)(z) = -(-1)^{|X||f|} f(X . z); target names carry a "*" suffix.
[[nodiscard]] Representation coadjoint(const NLieSuperalgebra& g);
/// V = K (one even vector named "k"), rho = 0.
[[nodiscard]] Representation trivial(const NLieSuperalgebra& g);

/// "adjoint", "coadjoint" or "trivial"; throws Parse otherwise.
[[nodiscard]] Representation module_by_name(const NLieSuperalgebra& g, const std::string& name);

/// g (+) V with [X, v] = rho(X) v and [.., v, w] = 0. Throws InvalidRepresentation.
[[nodiscard]] NLieSuperalgebra semidirect(const Representation& rho, const std::string& name = "");

}  // namespace nlsa
