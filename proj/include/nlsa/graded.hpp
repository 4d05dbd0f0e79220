#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nlsa/linalg.hpp"

namespace nlsa {

/// Z/2 degree of a homogeneous element.
enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr Parity& operator+=(Parity& a, Parity b) { return a = a + b; }
constexpr bool is_odd(Parity p) { return p == Parity::odd; }

/// (-1)^{|a||b|}
constexpr int koszul(Parity a, Parity b) { return (is_odd(a) && is_odd(b)) ? -1 : 1; }

/// Sign picked up by swapping adjacent homogeneous arguments: -(-1)^{|a||b|}.
constexpr int swap_sign(Parity a, Parity b) { return -koszul(a, b); }

[[nodiscard]] const char* parity_name(Parity p);
[[nodiscard]] Parity parse_parity(std::string_view s);

struct BasisElement {
  std::string name;
  Parity parity = Parity::even;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Z/2-graded space given by an ordered, named, homogeneous basis.
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::vector<BasisElement> basis);

  /// Convenience: `even` even vectors followed by `odd` odd ones, named by the prefixes.
  static GradedSpace standard(std::size_t even, std::size_t odd, const std::string& even_prefix = "e",
                              const std::string& odd_prefix = "f");

  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] std::size_t dim_even() const { return dim_even_; }
  [[nodiscard]] std::size_t dim_odd() const { return dim() - dim_even_; }
  [[nodiscard]] Parity parity(std::size_t i) const { return basis_[i].parity; }
  [[nodiscard]] const std::string& name(std::size_t i) const { return basis_[i].name; }
  [[nodiscard]] const std::vector<BasisElement>& basis() const { return basis_; }
  [[nodiscard]] const std::vector<Parity>& parities() const { return parities_; }

  [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownName.
  [[nodiscard]] std::size_t index_of(std::string_view name) const;

  /// Parity of v if it is homogeneous; the zero vector counts as even.
  [[nodiscard]] std::optional<Parity> parity_of(std::span<const Rational> v) const;

  friend bool operator==(const GradedSpace& a, const GradedSpace& b) { return a.basis_ == b.basis_; }

 private:
  std::vector<BasisElement> basis_;
  std::vector<Parity> parities_;
  std::size_t dim_even_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

[[nodiscard]] std::optional<Parity> parity_of(std::span<const Rational> v, const std::vector<Parity>& parities);

/// Graded subspace of a coordinate space, stored as its reduced row-echelon basis.
/// The echelon form of a graded subspace has parity-homogeneous rows, so the
/// stored basis is simultaneously canonical and homogeneous.
class GradedSubspace {
 public:
  GradedSubspace() = default;

  static GradedSubspace zero(std::vector<Parity> parities);
  static GradedSubspace full(std::vector<Parity> parities);

  /// Span of the generators. Non-homogeneous generators throw NotHomogeneous
  /// unless `split_by_parity` is set, in which case their parity components are used.
  static GradedSubspace span(std::vector<Parity> parities, const std::vector<Vec>& generators,
                             bool split_by_parity = false);
  static GradedSubspace span(std::vector<Parity> parities, const Matrix& generators, bool split_by_parity = false);

  /// Span of the coordinate vectors with the given indices.
  static GradedSubspace coordinate(std::vector<Parity> parities, const std::vector<std::size_t>& indices);

  [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
  [[nodiscard]] std::size_t ambient_dim() const { return parities_.size(); }
  [[nodiscard]] const std::vector<Parity>& parities() const { return parities_; }
  [[nodiscard]] const Matrix& basis() const { return basis_; }
  [[nodiscard]] Vec basis_vector(std::size_t r) const { return basis_.row_vec(r); }
  [[nodiscard]] Parity basis_parity(std::size_t r) const;
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
  [[nodiscard]] std::size_t dim_even() const;
  [[nodiscard]] std::size_t dim_odd() const { return dim() - dim_even(); }

  [[nodiscard]] bool is_zero() const { return dim() == 0; }
  [[nodiscard]] bool is_full() const { return dim() == ambient_dim(); }

  /// Remainder of v modulo the subspace: zero on every pivot column.
  [[nodiscard]] Vec reduce(std::span<const Rational> v) const;
  [[nodiscard]] bool contains(std::span<const Rational> v) const;
  [[nodiscard]] bool contains(const GradedSubspace& other) const;

  /// Coordinates of a member vector in the stored basis (its pivot entries).
  [[nodiscard]] Vec coordinates(std::span<const Rational> v) const;

  /// Non-pivot columns; the coordinate vectors there span a canonical homogeneous complement.
  [[nodiscard]] std::vector<std::size_t> complement_indices() const;

  /// Rows spanning {x | <x, w> = 0 for all w} under the standard dot product.
  [[nodiscard]] Matrix annihilator() const;

  friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
    return a.parities_ == b.parities_ && a.basis_ == b.basis_;
  }

 private:
  GradedSubspace(std::vector<Parity> parities, Echelon e);

  std::vector<Parity> parities_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

[[nodiscard]] GradedSubspace sum(const GradedSubspace& a, const GradedSubspace& b);
[[nodiscard]] GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b);

/// W^perp = {x | B(x, w) = 0 for all w in W} for the Gram matrix B.
[[nodiscard]] GradedSubspace orth_complement(const Matrix& gram, const GradedSubspace& w);

/// Image of a subspace under a parity-preserving linear map (columns are images of basis vectors).
[[nodiscard]] GradedSubspace image(const Matrix& map, const GradedSubspace& w, std::vector<Parity> target_parities);

}  // namespace nlsa
