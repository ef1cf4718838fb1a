#pragma once

#include "csep/growth.hpp"
#include "csep/separability.hpp"
#include "csep/vab_group.hpp"

#include <json.hpp>

#include <string>

namespace csep::report {

using nlohmann::json;

/// Schema violation at a JSON pointer location.
struct InputError : std::runtime_error {
  InputError(const std::string& where, const std::string& what) : std::runtime_error(where + ": " + what) {}
};

json to_json(const Int& x);
json to_json(const Vec& v);
json to_json(const IntMat& m);
json to_json(const Lattice& l);
json to_json(const Element& e);
json to_json(const Tuple& t);
json to_json(const ExponentCertificate& c);
json to_json(const GrowthRow& r);
json to_json(const ProbeRow& r);

Int int_from(const json& j, const std::string& where);
Vec vec_from(const json& j, const std::string& where, std::size_t len);
IntMat mat_from(const json& j, const std::string& where, std::size_t n);
Element element_from(const json& j, const std::string& where, std::size_t dim);
Tuple tuple_from(const json& j, const std::string& where, std::size_t dim);
GrowthRow growth_row_from(const json& j, const std::string& where, std::size_t dim);

struct Input {
  VirtAbGroup group;
  std::vector<Vec> section;  // set when a factor set was given
  bool from_factor_set = false;
};

/// Parses and validates an input document.
Input read_input(const json& doc, const HullOptions& hopt);

json analyze(const VirtAbGroup& grp);

}  // namespace csep::report
