#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nlsa/algebra.hpp"
#include "nlsa/cohomology.hpp"
#include "nlsa/linalg.hpp"

namespace nlsa {

struct FormProperties {
  bool nondegenerate = false;
  bool invariant = false;
  bool supersymmetric = false;
  bool consistent = false;
  std::optional<std::string> witness;  // first failing entry or tuple
  [[nodiscard]] bool all() const { return nondegenerate && invariant && supersymmetric && consistent; }
};

/// <a, b> = a^T gram b on coordinate vectors.
[[nodiscard]] Rational pair(const Matrix& gram, std::span<const Rational> a, std::span<const Rational> b);

/// Exact checks over basis vectors and canonical (n-1)-words.
[[nodiscard]] FormProperties form_properties(const NLieSuperalgebra& g, const Matrix& gram);

struct MetricAlgebra {
  NLieSuperalgebra algebra;
  Matrix gram;
};

/// Orthogonal direct sum.
[[nodiscard]] MetricAlgebra metric_direct_sum(const MetricAlgebra& a, const MetricAlgebra& b);
/// One even basis vector `name` with <x, x> = value and zero bracket of arity n.
[[nodiscard]] MetricAlgebra metric_line(std::size_t n, const Rational& value, const std::string& name = "a");
/// Ab(p|q;n) (+) its dual with the hyperbolic pairing.
[[nodiscard]] MetricAlgebra hyperbolic_abelian(std::size_t even, std::size_t odd, std::size_t n);

/// Whether W is isotropic for the given gram.
[[nodiscard]] bool is_isotropic(const Matrix& gram, const GradedSubspace& w);

// ---------------------------------------------------------------------------
// T*-extensions. A theta is a degree-1 even cochain of coadjoint(g): the
// coordinate of (X_w, z, u) is theta(X_w, z)(e_u).

/// <x + f, y + h> = f(y) + (-1)^{|x||y|} h(x) on g (+) g*, g first.
[[nodiscard]] Matrix tstar_gram(const NLieSuperalgebra& g);

/// theta(X, y)(z) + (-1)^{|y||z|} theta(X, z)(y) = 0 on all basis tuples.
[[nodiscard]] bool check_cyclic(const NLieSuperalgebra& g, const Cochain& theta);

struct TStarBundle {
  NLieSuperalgebra base;
  Cochain theta;
  MetricAlgebra total;
};

/// Throws DimensionMismatch, WrongParity, NotWedgeCompatible, NotACocycle, NotCyclic.
[[nodiscard]] TStarBundle build_tstar(const NLieSuperalgebra& g, const Cochain& theta);
[[nodiscard]] TStarBundle build_tstar(const NLieSuperalgebra& g);

/// Basis of the even, compatible, cyclic 1-cocycles of coadjoint(g).
[[nodiscard]] std::vector<Cochain> cyclic_cocycle_basis(const NLieSuperalgebra& g);
/// `count` nonzero random integer combinations of the basis (empty if the basis is).
[[nodiscard]] std::vector<Cochain> sample_cyclic_cocycles(const NLieSuperalgebra& g, std::size_t count,
                                                         std::uint64_t seed);

struct LengthsReport {
  std::optional<std::size_t> base_solvable, base_nilpotent, total_solvable, total_nilpotent;
  bool solvable_bound = true;   // total in {k, k+1}
  bool nilpotent_bound = true;  // k <= total <= 2k - 1
  std::optional<bool> zero_theta_exact;  // theta = 0: total == k
  std::optional<bool> decomposition;     // T*_0(I) and T*_0(J) are complementary graded ideals
  [[nodiscard]] bool ok() const {
    return solvable_bound && nilpotent_bound && zero_theta_exact.value_or(true) && decomposition.value_or(true);
  }
};

/// `split`, if given, is a pair of complementary graded ideals (I, J) of g.
[[nodiscard]] LengthsReport tstar_lengths_check(
    const NLieSuperalgebra& g, const Cochain& theta,
    const std::optional<std::pair<GradedSubspace, GradedSubspace>>& split = std::nullopt);

struct EquivalenceResult {
  std::optional<Cochain> theta_prime;  // degree 0, delta theta' = theta1 - theta2
  Matrix induced_form;                 // of theta_prime
  FormProperties induced_properties;   // nondegenerate is not expected
  bool isometric = false;
  std::optional<Cochain> isometric_theta_prime;  // a solution with vanishing induced form
};

[[nodiscard]] EquivalenceResult tstar_equivalence(const NLieSuperalgebra& g, const Cochain& theta1,
                                                  const Cochain& theta2);
/// phi(x + f) = x + theta'(x) + f on g (+) g*.
[[nodiscard]] Matrix equivalence_map(const NLieSuperalgebra& g, const Cochain& theta_prime);
/// 1/2 (theta'(x)(y) + (-1)^{|x||y|} theta'(y)(x))
[[nodiscard]] Matrix induced_form(const NLieSuperalgebra& g, const Cochain& theta_prime);

// ---------------------------------------------------------------------------
// Reconstruction

struct IsotropicIdealReport {
  bool ideal = false;
  bool abelian = false;  // [g, .., g, I, I] = 0
  bool self_orthogonal = false;
  [[nodiscard]] bool ok() const { return ideal == abelian && self_orthogonal; }
};

/// Throws WrongDimension, NotIsotropic.
[[nodiscard]] IsotropicIdealReport isotropic_ideal_abelian_check(const MetricAlgebra& m, const GradedSubspace& i);

/// Isotropic graded complement of a half-dimensional isotropic subspace I: the
/// vectors e_c + phi(e_c) over the echelon complement of I, with phi(e_c) in I.
[[nodiscard]] GradedSubspace isotropic_complement(const MetricAlgebra& m, const GradedSubspace& i);

struct Reconstruction {
  NLieSuperalgebra quotient;  // g / I
  GradedSubspace complement;  // isotropic complement of I
  TStarBundle tstar;
  Matrix phi;  // g -> T*_theta(g / I)
  bool bijective = false;
  bool bracket_preserving = false;
  bool isometry = false;
  std::optional<std::vector<std::string>> defect;
  [[nodiscard]] bool ok() const { return bijective && bracket_preserving && isometry; }
};

/// Throws OddDimension, WrongDimension, NotIsotropicIdeal.
[[nodiscard]] Reconstruction reconstruct_tstar(const MetricAlgebra& m, const GradedSubspace& i);

struct MaximalIsotropic {
  GradedSubspace subspace;
  bool isotropic = false;
  bool stable = false;
  bool dimension = false;            // floor(m / 2)
  std::optional<bool> perp_into;     // odd m: ad(W^perp) subset of W
  [[nodiscard]] bool ok() const { return isotropic && stable && dimension && perp_into.value_or(true); }
};

/// Throws NotNilpotent, NotIsotropic, NotAnIdeal, NonSquareScalar.
[[nodiscard]] MaximalIsotropic maximal_isotropic_stable(const MetricAlgebra& m, const GradedSubspace& w);

struct LineExtension {
  MetricAlgebra algebra;  // g (+) K alpha, alpha last
  GradedSubspace ideal;   // I + K beta
  Vec beta;
  Vec z;                  // in I^perp, <z, z> = -1
  Matrix to_quotient;     // x + t alpha -> x - t z + I
  NLieSuperalgebra quotient;  // g / I
  bool metric = false;
  bool codim_one_ideal = false;  // g nondegenerate graded ideal of codimension 1
  bool isotropic_ideal = false;  // I' isotropic graded ideal of dim (m + 1) / 2
  bool homomorphism = false;     // to_quotient is a homomorphism with kernel I'
  bool perp_abelian = false;     // [g, .., g, I^perp, I^perp] = 0
  [[nodiscard]] bool ok() const {
    return metric && codim_one_ideal && isotropic_ideal && homomorphism && perp_abelian;
  }
};

/// Throws EvenDimension, NotIsotropic, NonSquareScalar.
[[nodiscard]] LineExtension extend_by_line(const MetricAlgebra& m, const GradedSubspace& i);

struct DualityReport {
  bool centralizers = true;  // C(V) = [g, .., g, V^perp]^perp on the samples
  std::size_t samples = 0;
  bool lower_central = true;  // g^m = C_m^perp
  std::optional<bool> nested;  // g^i subset of C_{k-i}
  std::optional<std::string> witness;
  [[nodiscard]] bool ok() const { return centralizers && lower_central && nested.value_or(true); }
};

[[nodiscard]] DualityReport centralizer_duality(const MetricAlgebra& m);

struct PipelineRecord {
  std::size_t nilpotent_length = 0;  // k
  GradedSubspace seed;               // J = sum g^i cap C_i
  bool seed_isotropic_ideal = false;
  bool seed_contains_power = false;  // g^{[(k+1)/2]} subset of J
  MaximalIsotropic maximal;
  std::optional<LineExtension> line;
  Reconstruction reconstruction;
  std::size_t quotient_length = 0;
  std::size_t bound = 0;  // [(k+1)/2]
  [[nodiscard]] bool ok() const {
    return seed_isotropic_ideal && seed_contains_power && maximal.ok() && (!line || line->ok()) &&
           reconstruction.ok() && quotient_length <= bound;
  }
};

/// Throws NotNilpotent, NonSquareScalar.
[[nodiscard]] PipelineRecord nilpotent_pipeline(const MetricAlgebra& m);

}  // namespace nlsa
