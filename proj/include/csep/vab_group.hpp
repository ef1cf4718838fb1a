#pragma once

#include "csep/int_rep.hpp"
#include "csep/lattice.hpp"

#include <optional>
#include <vector>

namespace csep {

/// (v, g) in M x| G. Membership in H is checked at the API boundary, not on construction.
struct Element {
  Vec v;
  int g = 0;
  friend bool operator==(const Element& a, const Element& b) { return a.g == b.g && a.v == b.v; }
  friend bool operator<(const Element& a, const Element& b) { return a.g != b.g ? a.g < b.g : a.v < b.v; }
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept { return VecHash{}(e.v) * 31 + e.g; }
};

std::string to_string(const Element& e);

struct BallEntry {
  Element e;
  int norm = 0;
};

struct ConjugacyAnswer {
  bool conjugate = false;
  std::optional<Element> witness;  // a with a x a^-1 = y
  int via = -1;                    // G-part h of the final conjugator step
};

struct SeparatingQuotient {
  Int index;    // [H : N]
  Lattice n;    // N, a rho-invariant sublattice of |G| Z^h
  bool complete = true;  // false when some p-local search was truncated
};

struct SeparationOptions {
  std::size_t node_cap = 20000;       // invariant sublattices visited per prime
  std::size_t projective_cap = 40000;  // projective points enumerated when searching simple submodules
};

/// Subgroup H of M x| G with H meet M = |G| M, given by cocycle representatives v_g.
class VirtAbGroup {
 public:
  VirtAbGroup() = default;
  /// Checks v_e = 0 and v_g + rho(g) v_h - v_gh in |G| Z^h.
  VirtAbGroup(IntRep rep, std::vector<Vec> cocycle, const HullOptions& hopt = {});
  static VirtAbGroup new_split(IntRep rep, const HullOptions& hopt = {});

  const IntRep& rep() const { return rep_; }
  const FiniteGroup& group() const { return rep_.group(); }
  std::size_t dim() const { return rep_.dim(); }
  const Int& order() const { return order_; }
  const Vec& v_of(int g) const { return cocycle_[g]; }
  const std::vector<Vec>& cocycle() const { return cocycle_; }
  const SquareHull& hull() const { return hull_; }

  const std::vector<Element>& gens() const { return gens_; }
  /// Replaces the generating set (all members of H).
  void set_generators(std::vector<Element> gens);

  const Lattice& w(int g) const { return w_[g]; }              // W_g(M)
  const Lattice& v_lat(int g) const { return v_[g]; }          // V_g(M)
  const Lattice& gw(int g) const { return gw_[g]; }            // |G| W_g(M)
  const Lattice& strong_lat(int g) const { return strong_[g]; }  // |G| W_g(M) + |G|^3 M
  const std::vector<ComponentWV>& component_wv(int g) const { return comp_wv_[g]; }

  bool contains(const Element& x) const;
  Element identity() const { return Element{zero_vec(dim()), 0}; }

  Element mul(const Element& x, const Element& y) const;
  Element inv(const Element& x) const;
  Element conj(const Element& a, const Element& x) const;  // a x a^-1
  // unchecked variants
  Element mul_raw(const Element& x, const Element& y) const;
  Element inv_raw(const Element& x) const;
  Element conj_raw(const Element& a, const Element& x) const;

  /// Elements of word norm at most n with respect to gens, in breadth-first order.
  std::vector<BallEntry> ball(int n, std::size_t cap = 2000000) const;

  ConjugacyAnswer is_conjugate(const Element& x, const Element& y) const;
  bool is_conjugate_mod(const Element& x, const Element& y, const Lattice& n) const;

  /// Least [H:N] over rho-invariant N in |G| Z^h with [H:N] <= budget separating the classes of x and y.
  std::optional<SeparatingQuotient> min_separating_index(const Element& x, const Element& y, const Int& budget,
                                                         const SeparationOptions& opt = {}) const;

  /// For x, y with conjugate G-parts: the shifted differences eps_h (h in C(g)) such that x and y
  /// are conjugate modulo |G| N_c iff some eps_h lies in N_c + W_g. Empty when the G-parts are not conjugate.
  struct Reduced {
    int g = -1;
    std::vector<int> hs;
    std::vector<Vec> eps;
  };
  Reduced reduce_pair(const Element& x, const Element& y) const;

 private:
  void require_member(const Element& x) const;
  void build_caches();

  IntRep rep_;
  Int order_;
  std::vector<Vec> cocycle_;
  std::vector<Element> gens_;
  SquareHull hull_;
  std::vector<IntMat> one_minus_;  // id - rho(g)
  std::vector<Lattice> w_, v_, gw_, strong_;
  std::vector<std::vector<ComponentWV>> comp_wv_;
};

/// Extension of M' by G with factor set f (f[g][h] in M'), realized inside M' x| G as in the
/// embedding of |G| M' by G: (m, g) -> (|G| m + c(g), g) with |G| f = coboundary of c.
struct EmbeddedExtension {
  VirtAbGroup group;
  std::vector<Vec> section;  // c(g)
  Element image(const Vec& m, int g) const;
};

EmbeddedExtension embed_extension(const IntRep& rep, const std::vector<std::vector<Vec>>& factor_set,
                                  const HullOptions& hopt = {});

/// Multiplication in the extension defined by a factor set: (m,g)(m',g') = (m + g m' + f(g,g'), gg').
Element extension_mul(const IntRep& rep, const std::vector<std::vector<Vec>>& f, const Element& x,
                      const Element& y);

}  // namespace csep
