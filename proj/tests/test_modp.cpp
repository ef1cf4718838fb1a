#include "doctest.h"

#include "csep/error.hpp"
#include "csep/examples.hpp"
#include "csep/modp.hpp"

using namespace csep;

TEST_CASE("find_prime") {
  CHECK(find_prime(1, 4, 1, 2) == 5);
  CHECK(find_prime(1, 12, 1, 2) == 13);
  CHECK(find_prime(1, 12, 13, 2) == 37);
  // oracle: scan all integers
  for (long m : {3L, 4L, 6L, 10L})
    for (long min : {2L, 50L, 97L}) {
      long p = find_prime(1, m, 6, min);
      long q = min;
      while (!(q % m == 1 % m && is_prime(q) && 6 % q != 0)) ++q;
      CHECK(p == q);
    }
  CHECK_THROWS_AS(find_prime(1, 4, 1, 2, 4), Error);
  CHECK_THROWS_AS(find_prime(2, 4, 1, 2), Error);
}

TEST_CASE("reduce") {
  auto triv = IntRep::trivial(FiniteGroup::abelian({3}), 2);
  auto r = reduce(triv, 5);
  for (const auto& m : r.mats) CHECK(m == FpMat::identity(2, 5));
  auto sign = reduce(example_rep("dihedral-line"), 5);
  CHECK(sign.mats[0](0, 0) == 1);
  CHECK(sign.mats[1](0, 0) == 4);
  auto rot = reduce(example_rep("rot4"), 5);
  FpMat x = rot.mats[1];
  CHECK(!(x == FpMat::identity(2, 5)));
  CHECK(!(x * x == FpMat::identity(2, 5)));
  CHECK(x * x * x * x == FpMat::identity(2, 5));
  CHECK_THROWS_AS(reduce(example_rep("swap"), 2), Error);
}

TEST_CASE("split") {
  const auto swap = example_rep("swap");
  auto cs = split(reduce(swap, 5), swap.group());
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].dim == 1);
  CHECK(cs[0].chars == std::vector<long>{1, 1});
  CHECK(cs[1].chars == std::vector<long>{1, 4});
  auto triv = IntRep::trivial(FiniteGroup::abelian({2}), 3);
  auto ct = split(reduce(triv, 5), triv.group());
  REQUIRE(ct.size() == 1);
  CHECK(ct[0].dim == 1);
  CHECK(ct[0].multiplicity == 3);
  const auto rot = example_rep("rot4");
  auto cr = split(reduce(rot, 5), rot.group());
  REQUIRE(cr.size() == 2);
  CHECK(cr[0].chars[1] == 2);
  CHECK(cr[1].chars[1] == 3);
  // 3 is not 1 mod 4: the module is irreducible but not absolutely irreducible
  try {
    split(reduce(rot, 3), rot.group());
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SplittingPrimeFailure);
  }
}

TEST_CASE("split of a non-abelian group has a 2-dimensional constituent") {
  auto s3 = from_matrix_generators({IntMat{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, IntMat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}});
  auto cs = split(reduce(s3.group, s3.mats, 7), s3.group);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].dim == 1);
  CHECK(cs[1].dim == 2);
  // regular-like sum: two copies of the permutation module
  std::vector<IntMat> dbl;
  for (const auto& m : s3.mats) {
    IntMat d(6, 6);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) d(i, j) = d(i + 3, j + 3) = m(i, j);
    dbl.push_back(d);
  }
  auto cd = split(reduce(s3.group, dbl, 7), s3.group, 42);
  REQUIRE(cd.size() == 2);
  CHECK(cd[1].dim == 2);
  CHECK(cd[1].multiplicity == 2);
  CHECK(split(reduce(s3.group, dbl, 7), s3.group, 43) == cd);
}

TEST_CASE("galois_orbit_sums") {
  const auto rot = example_rep("rot4");
  auto cr = split(reduce(rot, 5), rot.group());
  auto o = galois_orbit_sums(cr, rot.group(), 5);
  REQUIRE(o.size() == 1);
  CHECK(o[0].values == std::vector<Int>{2, 0, -2, 0});
  const auto sign = example_rep("dihedral-line");
  auto os = galois_orbit_sums(split(reduce(sign, 5), sign.group()), sign.group(), 5);
  REQUIRE(os.size() == 1);
  CHECK(os[0].values == std::vector<Int>{1, -1});
  auto triv = IntRep::trivial(FiniteGroup::abelian({2}), 1);
  auto ot = galois_orbit_sums(split(reduce(triv, 5), triv.group()), triv.group(), 5);
  CHECK(ot[0].values == std::vector<Int>{1, 1});
  CHECK_THROWS_AS(galois_orbit_sums(cr, rot.group(), 3), Error);
}

TEST_CASE("property: orbit sums with multiplicities recover the character") {
  for (const auto& name : example_names()) {
    const auto rep = example_rep(name);
    const auto& g = rep.group();
    long p = find_prime(1, g.exponent(), g.order(), 2 * rep.dim() * g.order() + 1);
    auto cs = split(reduce(rep, p), g, 5);
    std::size_t total = 0;
    for (const auto& c : cs) total += c.dim * c.multiplicity;
    CHECK(total == rep.dim());
    auto orbits = galois_orbit_sums(cs, g, p);
    std::vector<Int> sum(g.order(), 0);
    for (const auto& o : orbits)
      for (int x = 0; x < g.order(); ++x) sum[x] += cs[o.members[0]].multiplicity * o.values[x];
    CHECK(sum == character(rep));
    // determinism and seed independence of the sorted output
    CHECK(split(reduce(rep, p), g, 5) == cs);
    CHECK(split(reduce(rep, p), g, 99) == cs);
  }
}
