#pragma once

// Property checks shared by the unit tests and the acceptance runner.

#include "csep/int_rep.hpp"
#include "csep/vab_group.hpp"
#include "oracles.hpp"

#include <iostream>
#include <string>

namespace checks {

using namespace csep;

struct Tally {
  long checked = 0;
  long failed = 0;
  std::string first_failure;
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first_failure = what;
  }
};

/// Lattice spanned by the components with the given flags, scaled by a common denominator D.
inline Lattice scaled_hull_sum(const SquareHull& hull, const std::vector<bool>& use, const Int& d) {
  Lattice acc(hull.components[0].lattice.num.ambient());
  for (std::size_t i = 0; i < hull.size(); ++i)
    if (use[i]) {
      const auto& m = hull.components[i].lattice;
      acc = sum(acc, m.num.scaled(d / m.den));
    }
  return acc;
}

inline void representation_properties(const IntRep& rep, const SquareHull& hull, Tally& t) {
  const auto& g = rep.group();
  const std::size_t h = rep.dim();
  const Int order = g.order();
  Int den = 1;
  std::size_t rank_sum = 0;
  for (const auto& c : hull.components) {
    den = lcm(den, c.lattice.den);
    rank_sum += c.rank();
    t.expect(order % Int(c.d) == 0, "d divides |G|");
  }
  t.expect(rank_sum == h, "ranks add up to h");
  // orthogonality and scalar action of the orbit character maps
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& ci = hull.components[i];
    const Int c = ci.orbit_char.scalar;
    t.expect(sgn(c) > 0 && (order * order) % c == 0, "scalar divides |G|^2");
    for (std::size_t j = 0; j < hull.size(); ++j) {
      const auto& b = hull.components[j].lattice.num.basis();
      for (std::size_t k = 0; k < b.rows(); ++k) {
        Vec img = ci.orbit_char.matrix.apply(b.row(k));
        if (i == j)
          t.expect(img == scale(c, b.row(k)), "varpi acts as a scalar on its own component");
        else
          t.expect(is_zero(img), "varpi annihilates other components");
      }
    }
    t.expect(ci.projector * ci.projector == ci.projector, "projector is idempotent");
    for (int x = 0; x < g.order(); ++x) {
      RatMat r(rep.mat(x));
      t.expect(r * ci.projector == ci.projector * r, "projector commutes with rho");
    }
  }
  // sandwich |G| M' in M in M', scaled by den
  std::vector<bool> all(hull.size(), true);
  Lattice mp = scaled_hull_sum(hull, all, den);
  Lattice m = Lattice::scaled_full(h, den);
  t.expect(mp.contains(m), "M contained in the square hull");
  t.expect(m.contains(mp.scaled(order)), "|G| times the square hull contained in M");
  for (int x = 0; x < g.order(); ++x) {
    Lattice w = w_lattice(rep, x);
    Lattice v = radical(w);
    // radicality of W_g inside |G|^2 M
    Lattice big = Lattice::scaled_full(h, order * order);
    t.expect(w.contains(intersect(v, big)), "W_g meet |G|^2 M is radical in |G|^2 M");
    for (std::size_t k = 0; k < v.rank(); ++k) {
      Vec y = scale(order * order, v.basis().row(k));
      for (long mult = 1; mult <= 6; ++mult)
        if (w.contains(scale(Int(mult), y))) t.expect(w.contains(y), "radicality spot check");
    }
    // V_g is invariant under the centralizer
    for (int y : g.centralizer(x))
      for (std::size_t k = 0; k < v.rank(); ++k)
        t.expect(v.contains(rep.act(y, v.basis().row(k))), "V_g invariant under C(g)");
    if (!g.is_central(x)) continue;
    std::vector<bool> moved(hull.size());
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const auto& c = hull.components[i];
      moved[i] = !(c.comp_rep.mat(x) == IntMat::identity(c.rank()));
      auto wv = component_w_v(hull, i, x);
      if (moved[i])
        t.expect(wv.w.contains(Lattice::scaled_full(c.rank(), order)), "|G| M_i in W_g(M_i)");
      else
        t.expect(wv.w.rank() == 0 && wv.v.rank() == 0, "trivial action gives zero W and V");
    }
    t.expect(v == radical(scaled_hull_sum(hull, moved, den)), "V_g equals M meet the moved components");
  }
}

inline std::vector<long> to_long(const Vec& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

inline Vec from_long(const std::vector<long>& v) {
  Vec out;
  for (long x : v) out.push_back(Int(x));
  return out;
}

/// Copies the defining data of H into the machine-integer model.
inline oracle::Semi to_semi(const VirtAbGroup& grp) {
  oracle::Semi s;
  s.h = static_cast<int>(grp.dim());
  s.n = grp.group().order();
  s.table = grp.group().table();
  for (int g = 0; g < grp.group().order(); ++g) {
    std::vector<std::vector<long>> m(s.h, std::vector<long>(s.h));
    for (int i = 0; i < s.h; ++i)
      for (int j = 0; j < s.h; ++j) m[i][j] = grp.rep().mat(g)(i, j).get_si();
    s.mats.push_back(m);
    s.cocycle.push_back(to_long(grp.v_of(g)));
  }
  return s;
}

inline Element from_oracle(const oracle::Semi::El& e) { return Element{from_long(e.v), e.g}; }

}  // namespace checks
