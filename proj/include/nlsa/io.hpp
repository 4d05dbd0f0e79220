#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "nlsa/algebra.hpp"
#include "nlsa/cohomology.hpp"
#include "nlsa/representation.hpp"

namespace nlsa {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. A relative path that does not exist is also
/// looked up under $NLSA_FIXTURES. Throws Parse (with line and column) or UnknownName.
[[nodiscard]] Json read_json_file(const std::string& path);
[[nodiscard]] std::string resolve_path(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

struct LoadedAlgebra {
  NLieSuperalgebra algebra;
  /// A listed bracket that contradicts super-skew symmetry (an even argument
  /// repeated with a nonzero value, or two listings of one bracket that disagree).
  /// The offending listing is left out of `algebra`.
  std::optional<AxiomViolation> skew_defect;
};

/// AlgebraFile: {name, n, basis: [{name, parity}], brackets: [{args, value: {name: "p/q"}}]}.
[[nodiscard]] LoadedAlgebra parse_algebra(const Json& j);
/// Like parse_algebra but throws Parse on a skew defect.
[[nodiscard]] NLieSuperalgebra algebra_from_json(const Json& j);
[[nodiscard]] Json algebra_to_json(const NLieSuperalgebra& g);

/// FormFile: {form: [{x, y, value}]}; <y, x> = (-1)^{|x||y|} <x, y> is filled in.
/// Throws Parse on unknown names, opposite parities or conflicting entries.
[[nodiscard]] Matrix form_from_json(const GradedSpace& space, const Json& j);
[[nodiscard]] Json form_to_json(const GradedSpace& space, const Matrix& gram);

/// CochainFile: {degree, parity, complete?, entries: [{args: [[word], .., z], target, value}]}.
/// Words may be given in any order; `complete: true` extends each entry super-antisymmetrically
/// over the last word together with z. Throws Parse, NotHomogeneous.
[[nodiscard]] Cochain cochain_from_json(const Representation& rho, const Json& j);
/// Lists every nonzero coordinate on canonical words.
[[nodiscard]] Json cochain_to_json(const Representation& rho, const Cochain& f);

/// ActionFile: {action: [{args: [n-1 base names], source, target, value}]}, a
/// representation of `base` on `target`. Unlisted entries are zero.
[[nodiscard]] Representation representation_from_json(const NLieSuperalgebra& base, const GradedSpace& target,
                                                      const Json& j);

/// "e1 + 1/2 e2*"
[[nodiscard]] std::string format_vector(const GradedSpace& space, std::span<const Rational> v);

}  // namespace nlsa
