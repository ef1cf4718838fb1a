#pragma once

#include "csep/separability.hpp"
#include "csep/vab_group.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace csep {

struct GrowthRow {
  int n = 0;
  std::size_t pairs_checked = 0;  // non-conjugate pairs in ball(n)
  Int max_min_index = 1;
  std::optional<std::pair<Element, Element>> witness;
  bool budget_hit = false;
};

struct GrowthOptions {
  int jobs = 1;
  std::size_t ball_cap = 200000;
  SeparationOptions separation;
};

/// lcm(1..1), ..., lcm(1..j_max).
std::vector<Int> lcm_points(unsigned j_max);

/// ((k1 + |G|^4 lcm(1..n) v1, g), (k2 + |G|^4 lcm(1..n) v2, g)).
std::pair<Element, Element> witness_sequence(const VirtAbGroup& grp, const Tuple& t, unsigned n);

/// Max over non-conjugate pairs of ball(n) of the least separating invariant-quotient index, n = 1..n_max.
std::vector<GrowthRow> empirical_conj(const VirtAbGroup& grp, int n_max, const Int& budget,
                                      const GrowthOptions& opt = {});

struct ProbeRow {
  unsigned j = 0;
  Int lcm;
  bool conjugate = false;
  std::optional<Int> index;  // empty when skipped or over budget
  bool budget_hit = false;
  bool complete = true;
  Int model;  // C j^k, C the first recorded index
};

std::vector<ProbeRow> probe_lower_bound(const VirtAbGroup& grp, const Tuple& t, unsigned j_max, const Int& budget,
                                        std::size_t k, const SeparationOptions& opt = {});

std::string growth_csv(const std::vector<GrowthRow>& rows);

}  // namespace csep
