#pragma once

#include "csep/vab_group.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace csep {

enum class Classification { Vanishes, LocallyUnsolvable, GloballyUnsolvable };

const char* to_string(Classification c);

/// Subset of hull components, bit i for component i.
using ComponentSet = std::uint64_t;

struct Tuple {
  int g = 0;
  Vec v1, v2, k1, k2;
};

bool vanishes(const VirtAbGroup& grp, int g, std::size_t i, int h, const Vec& v1, const Vec& v2);
inline bool weakly_unsolvable(const VirtAbGroup& grp, int g, std::size_t i, int h, const Vec& v1, const Vec& v2) {
  return !vanishes(grp, g, i, h, v1, v2);
}
Classification classify(const VirtAbGroup& grp, int g, std::size_t i, int h, const Vec& v1, const Vec& v2, int m);
bool strongly_unsolvable(const VirtAbGroup& grp, int g, int h, const Vec& k1, const Vec& k2);

bool admits_m(const VirtAbGroup& grp, ComponentSet k, int g, const Vec& v1, const Vec& v2, int m);
bool admits(const VirtAbGroup& grp, ComponentSet k, const Tuple& t);

std::size_t dim_of(const VirtAbGroup& grp, ComponentSet k);
/// Least dim K over admitting K; 0 when no K admits.
std::size_t min_admitting_dim(const VirtAbGroup& grp, const Tuple& t);
std::size_t naive_upper_bound(const VirtAbGroup& grp);

/// Rows h of C(g) and components i: 'v' when (v1,v2) vanishes, 'u' otherwise.
std::vector<std::string> pattern_table(const VirtAbGroup& grp, int g, const Vec& v1, const Vec& v2);

struct SolutionSet {
  std::vector<int> members;  // elements of C(g)
  Lattice kernel;            // pairs (a, b) of M_i-coordinates, in Z^{2 rank}
  Vec a, b;                  // a pair realizing exactly this set
};

/// All solution sets of component i at g, with kernels and realizing pairs.
std::vector<SolutionSet> solution_sets(const VirtAbGroup& grp, int g, std::size_t i);

enum class ExponentMode { Exact, Witness, Naive };

const char* to_string(ExponentMode m);

struct ExponentOptions {
  ExponentMode mode = ExponentMode::Exact;
  std::vector<Tuple> tuples;         // witness mode
  std::size_t leaf_budget = 5000000;  // pattern combinations evaluated per g
  std::size_t coset_cap = 1u << 18;   // residues enumerated when testing a stabilizer for realizability
  int height_cap = 4;                 // multiplier on the number of curve points tried for realizing witnesses
};

struct ExponentCertificate {
  std::size_t k = 0;
  ExponentMode mode = ExponentMode::Exact;
  std::optional<Tuple> witness;
  std::size_t naive = 0;
  std::vector<long> per_g;  // -1 when not computed
  bool complete = true;
  std::size_t lower = 0, upper = 0;  // bracket, equal when complete
  std::size_t unreached = 0;         // cells without a realizing representative
};

ExponentCertificate k3_exponent(const VirtAbGroup& grp, const ExponentOptions& opt = {});

}  // namespace csep
