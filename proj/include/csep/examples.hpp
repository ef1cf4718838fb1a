#pragma once

#include "csep/int_rep.hpp"

#include <string>
#include <vector>

namespace csep {

/// Built-in holonomy representations: swap, rot4, dihedral-line, six-dim, diag3, h0h0.
const std::vector<std::string>& example_names();
IntRep example_rep(const std::string& name);
std::string example_description(const std::string& name);

/// Abelian group given by cyclic orders with one matrix per cyclic generator.
IntRep abelian_rep(const std::vector<int>& orders, const std::vector<IntMat>& gens);

}  // namespace csep
