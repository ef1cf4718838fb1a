#pragma once

#include "csep/finite_group.hpp"
#include "csep/integer.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace csep {

/// Dense matrix over Z/p, p < 2^31.
class FpMat {
 public:
  FpMat() = default;
  FpMat(std::size_t rows, std::size_t cols, long p) : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}
  static FpMat identity(std::size_t n, long p);
  static FpMat reduce(const IntMat& m, long p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  long prime() const { return p_; }
  long& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  long operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend FpMat operator*(const FpMat& a, const FpMat& b);
  friend FpMat operator+(const FpMat& a, const FpMat& b);
  friend FpMat operator-(const FpMat& a, const FpMat& b);
  friend bool operator==(const FpMat& a, const FpMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  FpMat scaled(long c) const;
  FpMat transpose() const;
  long trace() const;
  long det() const;
  std::size_t rank() const;
  bool is_scalar() const;
  /// Basis of {x : this * x = 0}, one column vector per entry.
  std::vector<std::vector<long>> nullspace() const;
  std::optional<FpMat> inverse() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  long p_ = 2;
  std::vector<long> data_;
};

long mod_pow(long b, long e, long p);
long mod_inv(long a, long p);
bool is_prime(long n);

/// Least prime p = a (mod m) with p >= min_size and p not dividing avoid.
long find_prime(long a, long m, const Int& avoid, long min_size, long search_cap = 100000000);

struct ModPRep {
  long p = 2;
  std::size_t dim = 0;
  std::vector<FpMat> mats;  // per group element
};

ModPRep reduce(const FiniteGroup& g, const std::vector<IntMat>& mats, long p);

struct Constituent {
  std::size_t dim = 0;
  int multiplicity = 0;
  std::vector<long> chars;  // trace per group element, in [0,p)
  friend bool operator==(const Constituent&, const Constituent&) = default;
};

/// Irreducible constituents with multiplicities, sorted by (dim, character).
std::vector<Constituent> split(const ModPRep& rep, const FiniteGroup& g, std::uint64_t seed = 1);

struct OrbitSum {
  std::vector<Int> values;   // lifted orbit-sum character per element
  std::vector<int> members;  // indices into the constituent list
  std::size_t dim = 0;       // common dimension of the members
};

/// Orbits of constituent characters under phi -> phi(g^k), k coprime to exponent(G).
std::vector<OrbitSum> galois_orbit_sums(const std::vector<Constituent>& cs, const FiniteGroup& g, long p);

}  // namespace csep
