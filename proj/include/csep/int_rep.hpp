#pragma once

#include "csep/finite_group.hpp"
#include "csep/lattice.hpp"
#include "csep/modp.hpp"

#include <memory>
#include <vector>

namespace csep {

/// rho: G -> GL(h, Z), one matrix per group element.
class IntRep {
 public:
  IntRep() = default;
  /// Validates the homomorphism property and unimodularity.
  IntRep(FiniteGroup g, std::vector<IntMat> mats);
  static IntRep trivial(FiniteGroup g, std::size_t dim);

  const FiniteGroup& group() const { return *group_; }
  std::size_t dim() const { return dim_; }
  const IntMat& mat(int g) const { return mats_[g]; }
  const std::vector<IntMat>& mats() const { return mats_; }
  Vec act(int g, std::span<const Int> v) const { return mats_[g].apply(v); }

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::size_t dim_ = 0;
  std::vector<IntMat> mats_;
};

void validate(const FiniteGroup& g, const std::vector<IntMat>& mats);

std::vector<Int> character(const IntRep& rep);

ModPRep reduce(const IntRep& rep, long p);

struct CharacterMap {
  std::vector<Int> values;  // per element
  IntMat matrix;            // sum_g values(g^-1) rho(g)
  Int scalar = 0;           // action on its own isotypic part, 0 when not known
};

CharacterMap varpi(const IntRep& rep, const std::vector<Int>& values);

struct IsotypicComponent {
  std::size_t index = 0;
  RatLattice lattice;       // M_i
  RatMat projector;         // pi_i
  IntMat coords;            // rank x h: column j holds the M_i-coordinates of pi_i(e_j)
  IntRep comp_rep;          // action in the basis of M_i
  std::size_t d = 0;        // dimension of a C-irreducible constituent
  std::size_t orbit_size = 0;
  int multiplicity = 0;     // multiplicity of each constituent in the orbit
  CharacterMap orbit_char;

  std::size_t rank() const { return lattice.rank(); }
  /// M_i-coordinates of pi_i(v).
  Vec project(std::span<const Int> v) const { return coords.apply(v); }
  /// The vector of Q^h with the given M_i-coordinates, times den.
  Vec embed_scaled(std::span<const Int> y) const;
};

struct SquareHull {
  long prime = 0;
  std::vector<IsotypicComponent> components;
  std::size_t size() const { return components.size(); }
};

struct HullOptions {
  std::uint64_t seed = 1;
  long min_prime = 0;  // 0: use 2 h |G| + 1
};

SquareHull square_hull(const IntRep& rep, const HullOptions& opt = {});

Lattice w_lattice(const IntRep& rep, int g);
Lattice v_lattice(const IntRep& rep, int g);
Lattice fixed_lattice(const IntRep& rep, int g);

bool is_irreducible(const IntRep& rep, const HullOptions& opt = {});
bool is_irreducible(const SquareHull& hull);

struct ComponentWV {
  Lattice w;
  Lattice v;
};

/// W_g(M_i) and V_g(M_i) in M_i coordinates.
ComponentWV component_w_v(const SquareHull& hull, std::size_t i, int g);

}  // namespace csep
