#pragma once

#include "csep/integer.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace csep {

/// Finite-rank subgroup of Z^n stored by its canonical row Hermite normal form:
/// upper echelon, positive pivots, entries above a pivot reduced into [0, pivot).
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Lattice full(std::size_t n);
  static Lattice scaled_full(std::size_t n, const Int& c);

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  bool is_full_rank() const { return rank() == ambient_; }
  const IntMat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Int> v) const;
  bool contains(const Lattice& other) const;
  /// Coordinates y with v = sum y_i basis_i, if v is a member.
  std::optional<Vec> coords(std::span<const Int> v) const;
  /// Canonical representative of v + L.
  Vec reduce(std::span<const Int> v) const;

  Lattice scaled(const Int& c) const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator<(const Lattice& a, const Lattice& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a.basis_ < b.basis_;
  }

 private:
  friend Lattice lattice_from_echelon(IntMat&& m, std::size_t ambient);
  std::size_t ambient_ = 0;
  IntMat basis_;
  std::vector<std::size_t> pivots_;
};

struct LatticeHash {
  std::size_t operator()(const Lattice& l) const noexcept;
};

/// Lattice scaled by 1/den, den positive and minimal.
struct RatLattice {
  Lattice num;
  Int den = 1;

  static RatLattice make(Lattice num, Int den);
  std::size_t rank() const { return num.rank(); }
  /// Basis vector i as exact rationals.
  std::vector<Rat> basis_vector(std::size_t i) const;
  friend bool operator==(const RatLattice& a, const RatLattice& b) { return a.num == b.num && a.den == b.den; }
};

/// Nonzero invariant factors d1 | d2 | ... | dr.
using InvariantFactors = std::vector<Int>;

/// Row-echelonize m in place using only the first pivot_cols columns for pivots.
/// Returns the number of rows whose leading part is nonzero; those come first.
std::size_t echelonize(IntMat& m, std::size_t pivot_cols);

Lattice hnf_basis(const std::vector<Vec>& generators, std::size_t ambient);
Lattice row_lattice(const IntMat& m);
/// Lattice spanned by the columns of m, i.e. the image of m acting on column vectors.
Lattice image(const IntMat& m);

InvariantFactors snf(const IntMat& m);

bool member(const Lattice& l, std::span<const Int> v);
Lattice sum(const Lattice& a, const Lattice& b);
Lattice intersect(const Lattice& a, const Lattice& b);

/// Rows x with x * m = 0, as a lattice in Z^{m.rows()}.
Lattice left_kernel(const IntMat& m);
/// Columns x with m * x = 0, as a lattice in Z^{m.cols()}.
Lattice kernel(const IntMat& m);

/// {x : a x in L}.
Lattice preimage(const IntMat& a, const Lattice& l);
/// (L tensor Q) intersected with Z^n.
Lattice radical(const Lattice& l);

/// [sup : sub]; nullopt means infinite.
std::optional<Int> index(const Lattice& sub, const Lattice& sup);

std::optional<Vec> solve_integer(const IntMat& a, std::span<const Int> b);

/// Canonical representatives of the image of offset + L in Z^n / modulus.
std::vector<Vec> coset_residues(const Lattice& l, std::span<const Int> offset, const Lattice& modulus,
                                std::size_t cap = 1u << 20);

struct SublatticeOptions {
  std::size_t cap = 100000;
};

/// All sublattices of L of index at most max_index accepted by filter, ordered by index
/// and then by Hermite shape.
std::vector<Lattice> enumerate_sublattices(const Lattice& l, const Int& max_index,
                                           const std::function<bool(const Lattice&)>& filter = {},
                                           const SublatticeOptions& opt = {});

/// Number of index-k sublattices of Z^n (product formula over Hermite shapes).
Int count_sublattices(std::size_t n, const Int& k);

}  // namespace csep
