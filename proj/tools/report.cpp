#include "report.hpp"

#include "csep/error.hpp"

namespace csep::report {

json to_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const IntMat& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

json to_json(const Lattice& l) { return to_json(l.basis()); }

json to_json(const Element& e) { return {{"v", to_json(e.v)}, {"g", e.g}}; }

json to_json(const Tuple& t) {
  return {{"g", t.g}, {"v1", to_json(t.v1)}, {"v2", to_json(t.v2)}, {"k1", to_json(t.k1)}, {"k2", to_json(t.k2)}};
}

json to_json(const ExponentCertificate& c) {
  json j = {{"k", c.k},          {"mode", to_string(c.mode)}, {"naive", c.naive},
            {"per_g", c.per_g},  {"complete", c.complete},    {"lower", c.lower},
            {"upper", c.upper},  {"unreached", c.unreached},  {"witness", nullptr}};
  if (c.witness) j["witness"] = to_json(*c.witness);
  return j;
}

json to_json(const GrowthRow& r) {
  json j = {{"n", r.n},
            {"pairs_checked", r.pairs_checked},
            {"max_min_index", to_json(r.max_min_index)},
            {"witness", nullptr},
            {"budget_hit", r.budget_hit}};
  if (r.witness) j["witness"] = json::array({to_json(r.witness->first), to_json(r.witness->second)});
  return j;
}

json to_json(const ProbeRow& r) {
  json j = {{"j", r.j},
            {"lcm", to_json(r.lcm)},
            {"conjugate", r.conjugate},
            {"index", nullptr},
            {"budget_hit", r.budget_hit},
            {"complete", r.complete},
            {"model", to_json(r.model)}};
  if (r.index) j["index"] = to_json(*r.index);
  return j;
}

Int int_from(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) == 0) return x;
  }
  throw InputError(where, "expected an integer");
}

Vec vec_from(const json& j, const std::string& where, std::size_t len) {
  if (!j.is_array()) throw InputError(where, "expected an array");
  if (j.size() != len) throw InputError(where, "expected " + std::to_string(len) + " entries, got " + std::to_string(j.size()));
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(int_from(j[i], where + "/" + std::to_string(i)));
  return v;
}

IntMat mat_from(const json& j, const std::string& where, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw InputError(where, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set_row(i, vec_from(j[i], where + "/" + std::to_string(i), n));
  return m;
}

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where, std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const json& j, const char* key, const std::string& where, int lo, int hi) {
  const json& x = field(j, key, where);
  std::string at = where + "/" + key;
  if (!x.is_number_integer()) throw InputError(at, "expected an integer");
  long v = x.get<long>();
  if (v < lo || v > hi) throw InputError(at, "out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

}  // namespace

Element element_from(const json& j, const std::string& where, std::size_t dim) {
  return Element{vec_from(field(j, "v", where), where + "/v", dim), int_field(j, "g", where, 0, 1 << 20)};
}

Tuple tuple_from(const json& j, const std::string& where, std::size_t dim) {
  Tuple t;
  t.g = int_field(j, "g", where, 0, 1 << 20);
  t.v1 = vec_from(field(j, "v1", where), where + "/v1", dim);
  t.v2 = vec_from(field(j, "v2", where), where + "/v2", dim);
  t.k1 = vec_from(field(j, "k1", where), where + "/k1", dim);
  t.k2 = vec_from(field(j, "k2", where), where + "/k2", dim);
  return t;
}

GrowthRow growth_row_from(const json& j, const std::string& where, std::size_t dim) {
  GrowthRow r;
  r.n = int_field(j, "n", where, 0, 1 << 30);
  const json& pc = field(j, "pairs_checked", where);
  if (!pc.is_number_unsigned()) throw InputError(where + "/pairs_checked", "expected a count");
  r.pairs_checked = pc.get<std::size_t>();
  r.max_min_index = int_from(field(j, "max_min_index", where), where + "/max_min_index");
  const json& w = field(j, "witness", where);
  if (!w.is_null()) {
    if (!w.is_array() || w.size() != 2) throw InputError(where + "/witness", "expected a pair");
    r.witness = std::make_pair(element_from(w[0], where + "/witness/0", dim), element_from(w[1], where + "/witness/1", dim));
  }
  const json& b = field(j, "budget_hit", where);
  if (!b.is_boolean()) throw InputError(where + "/budget_hit", "expected a boolean");
  r.budget_hit = b.get<bool>();
  return r;
}

Input read_input(const json& doc, const HullOptions& hopt) {
  if (!doc.is_object()) throw InputError("", "expected an object");
  const json& g = field(doc, "group", "");
  if (!g.is_object()) throw InputError("/group", "expected an object");
  const bool has_table = g.contains("cayley"), has_gens = g.contains("matrix_generators");
  if (has_table == has_gens) throw InputError("/group", "give exactly one of 'cayley' and 'matrix_generators'");
  const int dim = int_field(doc, "dim", "", 0, 64);
  const std::size_t h = static_cast<std::size_t>(dim);

  FiniteGroup group;
  std::vector<IntMat> mats;
  if (has_table) {
    const json& t = g["cayley"];
    if (!t.is_array() || t.empty()) throw InputError("/group/cayley", "expected a non-empty square table");
    std::vector<std::vector<int>> table;
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::string at = "/group/cayley/" + std::to_string(i);
      if (!t[i].is_array() || t[i].size() != t.size()) throw InputError(at, "row length differs from the number of rows");
      std::vector<int> row;
      for (std::size_t k = 0; k < t[i].size(); ++k) {
        if (!t[i][k].is_number_integer()) throw InputError(at + "/" + std::to_string(k), "expected an element index");
        row.push_back(t[i][k].get<int>());
      }
      table.push_back(std::move(row));
    }
    std::vector<int> relabel;
    try {
      group = FiniteGroup::from_cayley(table, &relabel);
    } catch (const Error& e) {
      throw InputError("/group/cayley", e.what());
    }
    for (std::size_t i = 0; i < relabel.size(); ++i)
      if (relabel[i] != static_cast<int>(i)) throw InputError("/group/cayley", "the identity must be element 0");
    const json& rho = field(doc, "rho", "");
    if (!rho.is_array() || rho.size() != table.size())
      throw InputError("/rho", "expected one matrix per group element (" + std::to_string(table.size()) + ")");
    for (std::size_t i = 0; i < rho.size(); ++i) mats.push_back(mat_from(rho[i], "/rho/" + std::to_string(i), h));
  } else {
    if (doc.contains("rho")) throw InputError("/rho", "not allowed with matrix_generators");
    const json& gs = g["matrix_generators"];
    if (!gs.is_array()) throw InputError("/group/matrix_generators", "expected an array of matrices");
    std::vector<IntMat> gens;
    for (std::size_t i = 0; i < gs.size(); ++i) gens.push_back(mat_from(gs[i], "/group/matrix_generators/" + std::to_string(i), h));
    try {
      auto mg = from_matrix_generators(gens);
      group = std::move(mg.group);
      mats = std::move(mg.mats);
    } catch (const Error& e) {
      throw InputError("/group/matrix_generators", e.what());
    }
  }
  IntRep rep;
  try {
    rep = IntRep(group, mats);
  } catch (const Error& e) {
    throw InputError("/rho", e.what());
  }
  const std::size_t n = static_cast<std::size_t>(rep.group().order());

  Input in;
  if (doc.contains("factor_set")) {
    if (doc.contains("cocycle")) throw InputError("/factor_set", "give either a cocycle or a factor set");
    const json& f = doc["factor_set"];
    if (!f.is_array() || f.size() != n) throw InputError("/factor_set", "expected " + std::to_string(n) + " rows");
    std::vector<std::vector<Vec>> fs(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::string at = "/factor_set/" + std::to_string(a);
      if (!f[a].is_array() || f[a].size() != n) throw InputError(at, "expected " + std::to_string(n) + " entries");
      for (std::size_t b = 0; b < n; ++b) fs[a].push_back(vec_from(f[a][b], at + "/" + std::to_string(b), h));
    }
    try {
      auto ext = embed_extension(rep, fs, hopt);
      in.group = std::move(ext.group);
      in.section = std::move(ext.section);
      in.from_factor_set = true;
    } catch (const Error& e) {
      throw InputError("/factor_set", e.what());
    }
  } else {
    std::vector<Vec> cocycle(n, zero_vec(h));
    if (doc.contains("cocycle")) {
      const json& c = doc["cocycle"];
      if (!c.is_array() || c.size() != n) throw InputError("/cocycle", "expected one vector per group element");
      for (std::size_t i = 0; i < n; ++i) cocycle[i] = vec_from(c[i], "/cocycle/" + std::to_string(i), h);
    }
    try {
      in.group = VirtAbGroup(rep, cocycle, hopt);
    } catch (const Error& e) {
      throw InputError("/cocycle", e.what());
    }
  }
  if (doc.contains("generators")) {
    const json& gs = doc["generators"];
    if (!gs.is_array() || gs.empty()) throw InputError("/generators", "expected a non-empty array");
    std::vector<Element> gens;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      std::string at = "/generators/" + std::to_string(i);
      gens.push_back(element_from(gs[i], at, h));
      if (gens.back().g >= static_cast<int>(n) || !in.group.contains(gens.back())) throw InputError(at, "not an element of H");
    }
    try {
      in.group.set_generators(gens);
    } catch (const Error& e) {
      throw InputError("/generators", e.what());
    }
  }
  return in;
}

json analyze(const VirtAbGroup& grp) {
  const auto& g = grp.group();
  json out;
  out["validation"] = {{"order", g.order()}, {"dim", grp.dim()}, {"rho", "ok"}, {"cocycle", "closed"}};
  json elems = json::array();
  for (int x = 0; x < g.order(); ++x)
    elems.push_back({{"index", x}, {"matrix", to_json(grp.rep().mat(x))}, {"v", to_json(grp.v_of(x))}, {"order", g.element_order(x)}});
  out["elements"] = elems;
  json comps = json::array();
  for (const auto& c : grp.hull().components) {
    comps.push_back({{"rank", c.rank()},
                     {"d", c.d},
                     {"orbit_size", c.orbit_size},
                     {"multiplicity", c.multiplicity},
                     {"den", to_json(c.lattice.den)},
                     {"basis", to_json(c.lattice.num)},
                     {"character", to_json(c.orbit_char.values)}});
  }
  out["hull"] = {{"prime", grp.hull().prime}, {"irreducible", is_irreducible(grp.hull())}, {"components", comps}};
  json per_g = json::array();
  for (int x = 0; x < g.order(); ++x) {
    auto idx = index(grp.w(x), Lattice::full(grp.dim()));
    json cw = json::array();
    for (const auto& c : grp.component_wv(x)) cw.push_back({{"w", to_json(c.w)}, {"v", to_json(c.v)}});
    per_g.push_back({{"g", x},
                     {"centralizer", g.centralizer(x)},
                     {"w", to_json(grp.w(x))},
                     {"w_index", idx ? to_json(*idx) : json(nullptr)},
                     {"v", to_json(grp.v_lat(x))},
                     {"components", cw}});
  }
  out["per_g"] = per_g;
  out["naive_bound"] = naive_upper_bound(grp);
  return out;
}

}  // namespace csep::report
