#include "nlsa/fixtures.hpp"

#include <regex>

#include "nlsa/error.hpp"

namespace nlsa::fixtures {

namespace {

NLieSuperalgebra single(std::string name, std::size_t n, GradedSpace space, const Word& args, std::size_t target) {
  BracketTable t(n, space.parities());
  (void)t.set(args, unit_vec(space.dim(), target));
  return NLieSuperalgebra(std::move(name), n, std::move(space), std::move(t).take());
}

}  // namespace

NLieSuperalgebra abelian(std::size_t even, std::size_t odd, std::size_t n) {
  return NLieSuperalgebra("Ab(" + std::to_string(even) + "|" + std::to_string(odd) + ";" + std::to_string(n) + ")",
                          n, GradedSpace::standard(even, odd, "u", "v"), {});
}

NLieSuperalgebra l1() { return single("L1", 3, GradedSpace::standard(4, 0), {0, 1, 2}, 3); }

NLieSuperalgebra s1() {
  return single("S1", 2, GradedSpace({{"e", Parity::even}, {"f", Parity::odd}}), {1, 1}, 0);
}

NLieSuperalgebra l2() { return single("L2", 3, GradedSpace::standard(2, 2), {0, 1, 2}, 3); }

NLieSuperalgebra by_name(const std::string& name) {
  if (name == "L1") return l1();
  if (name == "S1") return s1();
  if (name == "L2") return l2();
  static const std::regex ab(R"(Ab\((\d+)\|(\d+);\s*(\d+)\))");
  std::smatch m;
  if (std::regex_match(name, m, ab)) {
    return abelian(std::stoul(m[1]), std::stoul(m[2]), std::stoul(m[3]));
  }
  throw Error(ErrorCode::UnknownName, "unknown fixture '" + name + "'");
}

std::vector<NLieSuperalgebra> zoo() {
  return {abelian(2, 2, 3), abelian(1, 1, 2), l1(), s1(), l2()};
}

}  // namespace nlsa::fixtures
