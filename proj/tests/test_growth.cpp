#include "doctest.h"

#include "checks.hpp"
#include "csep/error.hpp"
#include "csep/examples.hpp"
#include "csep/growth.hpp"

using namespace csep;
using namespace checks;

namespace {

VirtAbGroup split(const std::string& name) { return VirtAbGroup::new_split(example_rep(name)); }

long brute_lcm(unsigned n) {
  for (long m = 1;; ++m) {
    bool ok = true;
    for (unsigned d = 1; d <= n; ++d) ok = ok && m % d == 0;
    if (ok) return m;
  }
}

Tuple diag3_tuple() { return Tuple{0, make_vec({1, 1, 1}), make_vec({-1, -1, -1}), zero_vec(3), zero_vec(3)}; }

}  // namespace

TEST_CASE("lcm points") {
  auto p = lcm_points(4);
  CHECK(p == std::vector<Int>{1, 2, 6, 12});
  CHECK(lcm_points(1) == std::vector<Int>{1});
  auto q = lcm_points(12);
  for (unsigned j = 1; j <= 12; ++j) CHECK(q[j - 1] == brute_lcm(j));
  for (unsigned j = 1; j < 12; ++j) CHECK(q[j] % q[j - 1] == 0);
  CHECK_THROWS_AS(lcm_points(0), Error);
}

TEST_CASE("witness sequence") {
  auto grp = split("diag3");
  auto t = diag3_tuple();
  auto [x1, y1] = witness_sequence(grp, t, 1);
  CHECK(x1 == Element{make_vec({256, 256, 256}), 0});
  CHECK(y1 == Element{make_vec({-256, -256, -256}), 0});
  auto [x3, y3] = witness_sequence(grp, t, 3);
  CHECK(x3.v == make_vec({1536, 1536, 1536}));
  CHECK(y3.v == make_vec({-1536, -1536, -1536}));
  CHECK_FALSE(grp.is_conjugate(x3, y3).conjugate);
  Tuple bad = t;
  bad.k1 = make_vec({1, 0, 0});
  CHECK_THROWS_AS(witness_sequence(grp, bad, 1), Error);
  bad = t;
  bad.v1 = make_vec({1});
  CHECK_THROWS_AS(witness_sequence(grp, bad, 1), Error);
}

TEST_CASE("empirical growth of the dihedral model") {
  auto grp = split("dihedral-line");
  auto rows = empirical_conj(grp, 4, 1000);
  REQUIRE(rows.size() == 4);
  auto sem = to_semi(grp);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].n == static_cast<int>(i + 1));
    CHECK_FALSE(rows[i].budget_hit);
    if (i) {
      CHECK(rows[i].max_min_index >= rows[i - 1].max_min_index);
      CHECK(rows[i].pairs_checked >= rows[i - 1].pairs_checked);
    }
    REQUIRE(rows[i].witness);
    auto [x, y] = *rows[i].witness;
    auto q = grp.min_separating_index(x, y, 1000);
    REQUIRE(q);
    CHECK(q->index == rows[i].max_min_index);
    CHECK_FALSE(grp.is_conjugate_mod(x, y, q->n));
    // cZ^h sits inside N, so the finite quotient by it separates as well
    long c = static_cast<long>(q->index.get_si());
    CHECK_FALSE(sem.conjugate_mod(oracle::Semi::El{to_long(x.v), x.g}, oracle::Semi::El{to_long(y.v), y.g}, c));
  }
  // pairs counted against an independent ball
  auto ob = sem.ball(2);
  std::size_t non_conj = 0;
  for (std::size_t i = 0; i < ob.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!grp.is_conjugate(from_oracle(ob[i].first), from_oracle(ob[j].first)).conjugate) ++non_conj;
  CHECK(rows[1].pairs_checked == non_conj);
  // deterministic, also across worker counts
  GrowthOptions par;
  par.jobs = 4;
  auto again = empirical_conj(grp, 4, 1000, par);
  CHECK(growth_csv(again) == growth_csv(rows));
}

TEST_CASE("empirical growth corner cases") {
  auto finite = VirtAbGroup::new_split(IntRep::trivial(FiniteGroup::abelian({1}), 1));
  auto r = empirical_conj(finite, 1, 100);
  CHECK(r[0].pairs_checked == 3);
  CHECK(r[0].max_min_index >= 2);
  // swap at n = 1: the pairs with distinct G-images contribute |G|
  auto sw = split("swap");
  auto rows = empirical_conj(sw, 1, 1000);
  for (const auto& e : sw.ball(1))
    for (const auto& f : sw.ball(1))
      if (e.e.g != f.e.g) CHECK(sw.min_separating_index(e.e, f.e, 1000)->index == 2);
  CHECK(rows[0].max_min_index >= 2);
  // budget too small for some pair: flagged, not fatal
  auto d = split("dihedral-line");
  auto tight = empirical_conj(d, 3, 4);
  CHECK(tight.back().budget_hit);
  GrowthOptions small;
  small.ball_cap = 3;
  auto capped = empirical_conj(d, 2, 100, small);
  CHECK(capped.size() == 2);
  CHECK(capped[0].budget_hit);
  CHECK_THROWS_AS(empirical_conj(d, 0, 100), Error);
}

TEST_CASE("csv export") {
  CHECK(growth_csv({}) == "n,pairs_checked,max_min_index,witness,budget_hit\n");
  GrowthRow r;
  r.n = 2;
  r.pairs_checked = 5;
  r.max_min_index = 8;
  r.witness = std::make_pair(Element{make_vec({0}), 0}, Element{make_vec({4}), 0});
  CHECK(growth_csv({r}) == "n,pairs_checked,max_min_index,witness,budget_hit\n2,5,8,\"((0), 0) ((4), 0)\",0\n");
}

TEST_CASE("probe on the dihedral model") {
  auto grp = split("dihedral-line");
  auto sem = to_semi(grp);
  auto c = k3_exponent(grp);
  REQUIRE(c.witness);
  auto rows = probe_lower_bound(grp, *c.witness, 5, 100000, c.k);
  REQUIRE(rows.size() == 5);
  for (const auto& r : rows) {
    CHECK(r.lcm == lcm_range(r.j));
    REQUIRE_FALSE(r.conjugate);
    REQUIRE(r.index);
    CHECK(*r.index <= 100000);
    // invariant sublattices of 2Z are 2cZ, of index 2c in H
    auto [x, y] = witness_sequence(grp, *c.witness, r.j);
    oracle::Semi::El ox{to_long(x.v), x.g}, oy{to_long(y.v), y.g};
    long want = 2;
    while (sem.conjugate_mod(ox, oy, want)) want += 2;
    CHECK(*r.index == want);
    // every c <= j divides the shift, so separation needs c > j
    CHECK(*r.index >= grp.order() * (r.j + 1));
    CHECK(r.model == rows[0].model * r.j);
  }
  CHECK(rows[0].model == *rows[0].index);
}
