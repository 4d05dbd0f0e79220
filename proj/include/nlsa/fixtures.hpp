#pragma once

#include <string>
#include <vector>

#include "nlsa/algebra.hpp"

namespace nlsa::fixtures {

/// Ab(p|q; n): zero bracket, even basis u1..up, odd basis v1..vq.
[[nodiscard]] NLieSuperalgebra abelian(std::size_t even, std::size_t odd, std::size_t n);
/// n = 3, even e1..e4, [e1,e2,e3] = e4.
[[nodiscard]] NLieSuperalgebra l1();
/// n = 2, e even, f odd, [f,f] = e.
[[nodiscard]] NLieSuperalgebra s1();
/// n = 3, e1,e2 even, f1,f2 odd, [e1,e2,f1] = f2.
[[nodiscard]] NLieSuperalgebra l2();

/// Looks up "L1", "S1", "L2" or "Ab(p|q;n)". Throws UnknownName.
[[nodiscard]] NLieSuperalgebra by_name(const std::string& name);

/// The non-metric zoo used by exhaustive tests.
[[nodiscard]] std::vector<NLieSuperalgebra> zoo();

}  // namespace nlsa::fixtures
