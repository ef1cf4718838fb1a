#include "csep/examples.hpp"

#include "csep/error.hpp"

namespace csep {

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"swap", "rot4", "dihedral-line", "six-dim", "diag3", "h0h0"};
  return names;
}

IntRep abelian_rep(const std::vector<int>& orders, const std::vector<IntMat>& gens) {
  FiniteGroup g = FiniteGroup::abelian(orders);
  const std::size_t h = gens.at(0).rows();
  std::vector<IntMat> mats;
  for (int x = 0; x < g.order(); ++x) {
    std::vector<int> digits(orders.size());
    int y = x;
    for (int i = static_cast<int>(orders.size()) - 1; i >= 0; --i) {
      digits[i] = y % orders[i];
      y /= orders[i];
    }
    IntMat m = IntMat::identity(h);
    for (std::size_t i = 0; i < orders.size(); ++i)
      for (int k = 0; k < digits[i]; ++k) m = m * gens[i];
    mats.push_back(std::move(m));
  }
  return IntRep(std::move(g), std::move(mats));
}

namespace {

IntMat permutation(const std::vector<int>& src) {
  IntMat m(src.size(), src.size());
  for (std::size_t i = 0; i < src.size(); ++i) m(i, src[i]) = 1;
  return m;
}

}  // namespace

IntRep example_rep(const std::string& name) {
  if (name == "swap") return abelian_rep({2}, {IntMat{{0, 1}, {1, 0}}});
  if (name == "rot4") return abelian_rep({4}, {IntMat{{0, -1}, {1, 0}}});
  if (name == "dihedral-line") return abelian_rep({2}, {IntMat{{-1}}});
  if (name == "six-dim") {
    // coordinates m1..m6 of a 3x2 matrix, row-major
    IntMat g1 = permutation({4, 5, 0, 1, 2, 3});
    IntMat g2 = permutation({1, 0, 3, 2, 5, 4});
    IntMat g3 = Int(-1) * IntMat::identity(6);
    return abelian_rep({3, 2, 2}, {g1, g2, g3});
  }
  if (name == "diag3") return abelian_rep({2, 2}, {IntMat{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}, IntMat{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}});
  if (name == "h0h0") return abelian_rep({2, 2}, {IntMat{{-1, 0}, {0, 1}}, IntMat{{1, 0}, {0, -1}}});
  throw Error(ErrorKind::InvalidInput, "unknown example '" + name + "'");
}

std::string example_description(const std::string& name) {
  if (name == "swap") return "Z/2 swapping the coordinates of Z^2";
  if (name == "rot4") return "Z/4 acting on Z^2 by rotation over a quarter turn";
  if (name == "dihedral-line") return "Z/2 acting on Z by -1 (the infinite dihedral group)";
  if (name == "six-dim") return "Z/3 + Z/2 + Z/2 acting on 3x2 integer matrices by row shift, column swap and -1";
  if (name == "diag3") return "(Z/2)^2 acting diagonally on Z^3 by signs (a, b, a+b)";
  if (name == "h0h0") return "(Z/2)^2 acting on Z^2 by independent sign changes";
  throw Error(ErrorKind::InvalidInput, "unknown example '" + name + "'");
}

}  // namespace csep
