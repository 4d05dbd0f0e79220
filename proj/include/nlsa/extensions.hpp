#pragma once

#include <optional>

#include "nlsa/algebra.hpp"
#include "nlsa/cohomology.hpp"
#include "nlsa/representation.hpp"

namespace nlsa {

/// Abelian extension data: b acts on the abelian algebra a, f in Z^1(b, a) even.
struct ExtensionDatum {
  NLieSuperalgebra base;
  NLieSuperalgebra fiber;
  Representation action;  // of base on fiber.space()
  Cochain cocycle;        // degree 1, even, compatible
};

/// g = b (+) a as a vector space (b basis first), with inclusion of a and projection onto b.
struct Extension {
  NLieSuperalgebra algebra;
  Matrix inclusion;   // dim g x dim a
  Matrix projection;  // dim b x dim g
};

/// Throws InvalidRepresentation, NotAbelianIdeal (fiber not abelian), WrongParity,
/// NotWedgeCompatible or NotACocycle.
[[nodiscard]] Extension build_extension(const ExtensionDatum& d);

struct ExtractedCocycle {
  ExtensionDatum datum;  // base = g/a on the echelon complement, fiber basis = echelon basis of a
  Matrix section;        // dim g x dim b
  bool action_verified = false;
  bool cocycle_verified = false;  // f even and delta f = 0
};

/// f(B, b_n) = tau(B) . tau(b_n) - tau(B . b_n). Without a section the coordinate
/// section onto the echelon complement of a is used. Throws NotAbelianIdeal, NotASection.
[[nodiscard]] ExtractedCocycle extract_cocycle(const NLieSuperalgebra& g, const GradedSubspace& a,
                                               const std::optional<Matrix>& section = std::nullopt);

/// Basis of the even compatible 1-cocycles Z^1(b, V), each as a full cochain.
[[nodiscard]] std::vector<Cochain> compatible_cocycle_basis(const Representation& rho, Parity p = Parity::even);

}  // namespace nlsa
