#pragma once

#include "csep/integer.hpp"

#include <cstdint>
#include <vector>

namespace csep {

/// Finite group on dense indices 0..order-1 with identity 0.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Validates the group law; relabels so that the identity has index 0.
  /// relabel[i] is the new index of the input element i.
  static FiniteGroup from_cayley(const std::vector<std::vector<int>>& table, std::vector<int>* relabel = nullptr);
  /// Direct product of cyclic groups, element index in mixed radix with the first factor most significant.
  static FiniteGroup abelian(const std::vector<int>& orders);

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int a, int g) const { return mul(mul(a, g), inv(a)); }  // a g a^-1
  int power(int g, long k) const;
  int element_order(int g) const;
  int exponent() const;

  std::vector<int> centralizer(int g) const;
  bool is_central(int g) const;
  std::vector<std::vector<int>> conjugacy_classes() const;
  /// Greedy generating set: repeatedly add the least element outside the subgroup generated so far.
  std::vector<int> generators() const;
  /// Subgroup generated by the given elements.
  std::vector<int> closure(const std::vector<int>& gens) const;

  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
};

struct MatrixGroup {
  FiniteGroup group;
  std::vector<IntMat> mats;  // mats[i] is the matrix of element i
};

/// Closure of a set of unimodular matrices; the identity matrix becomes element 0 and the
/// generators follow in the order first reached by breadth-first multiplication.
MatrixGroup from_matrix_generators(const std::vector<IntMat>& gens, int cap = 64);

}  // namespace csep
