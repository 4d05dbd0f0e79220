#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "nlsa/graded.hpp"
#include "nlsa/linalg.hpp"

namespace nlsa {

/// Ordered tuple of basis indices; a wedge word or the argument list of a bracket.
using Word = std::vector<std::size_t>;

struct SignedWord {
  int sign = 1;
  Word word;
  friend bool operator==(const SignedWord&, const SignedWord&) = default;
};

/// Sorts the indices ascending, multiplying -(-1)^{|a||b|} for every adjacent
/// transposition. Returns nullopt (the zero wedge) iff an even index repeats.
/// Repeated odd indices survive: for odd x, x^x != 0.
[[nodiscard]] std::optional<SignedWord> canonicalize(std::span<const std::size_t> indices,
                                                     const std::vector<Parity>& parities);

[[nodiscard]] Parity word_parity(std::span<const std::size_t> word, const std::vector<Parity>& parities);

[[nodiscard]] bool is_canonical(std::span<const std::size_t> word, const std::vector<Parity>& parities);

/// Canonical words of length k over a graded basis, lexicographically ordered:
/// the standard basis of the super exterior power, Lambda(V_0) (x) S(V_1) in degree k.
class WedgeBasis {
 public:
  WedgeBasis() = default;
  WedgeBasis(std::vector<Parity> parities, std::size_t k);

  /// sum_j C(dim_even, j) * C(dim_odd + (k - j) - 1, k - j)
  [[nodiscard]] static std::size_t expected_size(std::size_t dim_even, std::size_t dim_odd, std::size_t k);

  [[nodiscard]] std::size_t size() const { return words_.size(); }
  [[nodiscard]] std::size_t degree() const { return k_; }
  [[nodiscard]] const Word& word(std::size_t i) const { return words_[i]; }
  [[nodiscard]] Parity parity(std::size_t i) const { return word_parities_[i]; }
  [[nodiscard]] const std::vector<Word>& words() const { return words_; }
  [[nodiscard]] const std::vector<Parity>& space_parities() const { return parities_; }

  /// Index of a canonical word.
  [[nodiscard]] std::optional<std::size_t> find(std::span<const std::size_t> canonical) const;

  /// Coefficient vector of x_1 ^ ... ^ x_k for basis indices in any order (zero if it vanishes).
  [[nodiscard]] Vec wedge_of(std::span<const std::size_t> indices) const;

 private:
  std::vector<Parity> parities_;
  std::size_t k_ = 0;
  std::vector<Word> words_;
  std::vector<Parity> word_parities_;
  std::map<Word, std::size_t> index_;
};

class NLieSuperalgebra;

/// The (n-1)-wedge basis of g: the basis of fundamental objects.
[[nodiscard]] WedgeBasis fundamental_basis(const NLieSuperalgebra& g);

/// X . z = [x_1, ..., x_{n-1}, z], extended linearly in X (coefficients over fundamental_basis(g)).
[[nodiscard]] Vec act(const NLieSuperalgebra& g, std::span<const Rational> fundamental, std::span<const Rational> z);

/// X o Y = sum_i (-1)^{|X|(|y_1|+...+|y_{i-1}|)} y_1 ^ ... ^ X.y_i ^ ... ^ y_{n-1}, bilinear.
[[nodiscard]] Vec compose(const NLieSuperalgebra& g, std::span<const Rational> x, std::span<const Rational> y);

/// Precomputed action and composition of basis fundamental objects, shared by the
/// representation and cohomology code.
class FundamentalTables {
 public:
  explicit FundamentalTables(const NLieSuperalgebra& g);

  [[nodiscard]] const WedgeBasis& basis() const { return basis_; }
  /// Sparse g-vector of word(w) . e_z.
  [[nodiscard]] const SparseRow& action(std::size_t w, std::size_t z) const { return action_[w * dim_ + z]; }
  /// Sparse wedge vector of word(a) o word(b).
  [[nodiscard]] const SparseRow& composition(std::size_t a, std::size_t b) const {
    return compose_[a * basis_.size() + b];
  }

 private:
  WedgeBasis basis_;
  std::size_t dim_ = 0;
  std::vector<SparseRow> action_;
  std::vector<SparseRow> compose_;
};

}  // namespace nlsa
