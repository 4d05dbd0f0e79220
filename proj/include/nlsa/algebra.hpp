#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlsa/graded.hpp"
#include "nlsa/linalg.hpp"
#include "nlsa/wedge.hpp"

namespace nlsa {

/// First-class (parity 0) n-Lie superalgebra given by structure constants.
///
/// Only canonical argument words are stored (see canonicalize); the bracket on
/// any other basis tuple is derived from the super-skew sign rule, so the
/// storage cannot hold two inconsistent values for the same bracket. Stored
/// values are not required to respect the grading: check_axioms reports that.
class NLieSuperalgebra {
 public:
  using Constants = std::map<Word, Vec>;

  NLieSuperalgebra() = default;
  /// Keys must be canonical words of length n; zero values are dropped.
  NLieSuperalgebra(std::string name, std::size_t n, GradedSpace space, Constants constants);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::size_t arity() const { return n_; }
  [[nodiscard]] const GradedSpace& space() const { return space_; }
  [[nodiscard]] std::size_t dim() const { return space_.dim(); }
  [[nodiscard]] const std::vector<Parity>& parities() const { return space_.parities(); }
  [[nodiscard]] const Constants& constants() const { return constants_; }

  /// Bracket of basis vectors in the given order.
  [[nodiscard]] Vec bracket_basis(std::span<const std::size_t> args) const;
  /// Multilinear bracket of arbitrary coordinate vectors.
  [[nodiscard]] Vec bracket(std::span<const Vec> args) const;

  [[nodiscard]] bool is_abelian() const { return constants_.empty(); }
  [[nodiscard]] NLieSuperalgebra renamed(std::string name) const;

  friend bool operator==(const NLieSuperalgebra& a, const NLieSuperalgebra& b) {
    return a.n_ == b.n_ && a.space_ == b.space_ && a.constants_ == b.constants_;
  }

 private:
  std::string name_;
  std::size_t n_ = 2;
  GradedSpace space_;
  Constants constants_;
};

/// Builder that accepts brackets on arbitrary argument orders and stores them canonically.
class BracketTable {
 public:
  BracketTable(std::size_t n, std::vector<Parity> parities) : n_(n), parities_(std::move(parities)) {}

  /// Records [args] = value. Returns a description of the conflict when the entry
  /// contradicts the super-skew rule (an even argument repeated with a nonzero
  /// value, or a second value for the same canonical word that disagrees).
  std::optional<std::string> set(std::span<const std::size_t> args, const Vec& value);
  /// Adds value into [args].
  void add(std::span<const std::size_t> args, const Vec& value);

  [[nodiscard]] NLieSuperalgebra::Constants take() && { return std::move(constants_); }
  [[nodiscard]] const NLieSuperalgebra::Constants& constants() const { return constants_; }

 private:
  std::size_t n_;
  std::vector<Parity> parities_;
  NLieSuperalgebra::Constants constants_;
};

// ---------------------------------------------------------------------------
// Axioms

struct AxiomViolation {
  std::string axiom;          // "grading", "skew" or "filippov"
  std::vector<std::string> args;  // basis names of the offending tuple
  std::string detail;
};

struct AxiomReport {
  bool grading = true;
  bool skew = true;
  bool filippov = true;
  std::optional<AxiomViolation> violation;  // first failure found

  [[nodiscard]] bool ok() const { return grading && skew && filippov; }
};

/// Exhaustive check of the grading rule, super-skew symmetry and the graded
/// Filippov identity over all basis tuples.
[[nodiscard]] AxiomReport check_axioms(const NLieSuperalgebra& g);

// ---------------------------------------------------------------------------
// Subspaces, ideals, series

/// span{[a_1, ..., a_n] : a_i in slots[i]}, by brute force over basis vectors.
[[nodiscard]] GradedSubspace bracket_span(const NLieSuperalgebra& g, const std::vector<GradedSubspace>& slots);

[[nodiscard]] GradedSubspace whole(const NLieSuperalgebra& g);
[[nodiscard]] GradedSubspace nothing(const NLieSuperalgebra& g);

/// [I, g, ..., g] subset of I
[[nodiscard]] bool is_graded_ideal(const NLieSuperalgebra& g, const GradedSubspace& ideal);
/// Graded ideal with [I, I, g, ..., g] = 0.
[[nodiscard]] bool is_abelian_ideal(const NLieSuperalgebra& g, const GradedSubspace& ideal);

struct SeriesReport {
  std::vector<GradedSubspace> derived;         // g^(0) = g, g^(1), ...
  std::vector<GradedSubspace> lower_central;   // g^0 = g, g^1, ...
  std::vector<GradedSubspace> centralizer;     // C_0 = 0, C_1, ...
  std::optional<std::size_t> solvable_length;  // nullopt: not solvable
  std::optional<std::size_t> nilpotent_length;  // nullopt: not nilpotent
};

/// Both descending series stop at zero or once they stabilise, after at most dim(g) + 1 steps.
[[nodiscard]] SeriesReport series(const NLieSuperalgebra& g);

/// C(V) = {x | [x, g, ..., g] subset of V}
[[nodiscard]] GradedSubspace centralizer(const NLieSuperalgebra& g, const GradedSubspace& v);
/// Z(I) = {x | [x, I, g, ..., g] = 0}
[[nodiscard]] GradedSubspace center_of_ideal(const NLieSuperalgebra& g, const GradedSubspace& ideal);

/// g / I on the canonical complement of I (the coordinate vectors at the
/// non-pivot columns), together with the projection g -> g/I.
struct Quotient {
  NLieSuperalgebra algebra;
  Matrix projection;                      // dim(g/I) x dim(g)
  std::vector<std::size_t> lift_indices;  // basis vector k of g/I is the class of e_{lift_indices[k]}
};

/// Throws NotAnIdeal.
[[nodiscard]] Quotient quotient(const NLieSuperalgebra& g, const GradedSubspace& ideal);

/// g1 (+) g2 with mixed brackets zero. Clashing names of g2 get a "'" appended.
[[nodiscard]] NLieSuperalgebra direct_sum(const NLieSuperalgebra& g1, const NLieSuperalgebra& g2);

/// Reorders the basis: new basis vector i is old basis vector perm[i].
[[nodiscard]] NLieSuperalgebra permute_basis(const NLieSuperalgebra& g, std::span<const std::size_t> perm);

/// Checks phi([x_1..x_n]_g) = [phi x_1, ..., phi x_n]_h on all basis tuples and
/// that phi preserves parity. Returns the first offending tuple (as g names).
[[nodiscard]] std::optional<std::vector<std::string>> homomorphism_defect(const NLieSuperalgebra& g,
                                                                         const NLieSuperalgebra& h,
                                                                         const Matrix& phi);

}  // namespace nlsa
