#include "csep/separability.hpp"

#include "csep/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace csep {

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Vanishes: return "vanishes";
    case Classification::LocallyUnsolvable: return "locally-unsolvable";
    case Classification::GloballyUnsolvable: return "globally-unsolvable";
  }
  return "?";
}

const char* to_string(ExponentMode m) {
  switch (m) {
    case ExponentMode::Exact: return "exact";
    case ExponentMode::Witness: return "witness-lower";
    case ExponentMode::Naive: return "naive-upper";
  }
  return "?";
}

namespace {

void require_centralizer(const VirtAbGroup& grp, int g, int h) {
  if (g < 0 || g >= grp.group().order() || h < 0 || h >= grp.group().order())
    throw Error(ErrorKind::InvalidInput, "group element out of range");
  if (grp.group().mul(g, h) != grp.group().mul(h, g))
    throw Error(ErrorKind::NotInCentralizer, "h=" + std::to_string(h) + " is not in C(g)");
}

void require_component(const VirtAbGroup& grp, std::size_t i) {
  if (i >= grp.hull().size()) throw Error(ErrorKind::InvalidInput, "component index out of range");
}

void require_dim(const VirtAbGroup& grp, const Vec& v) {
  if (v.size() != grp.dim()) throw Error(ErrorKind::DimensionMismatch, "vector length");
}

Vec difference(const VirtAbGroup& grp, int h, const Vec& v1, const Vec& v2) {
  require_dim(grp, v1);
  require_dim(grp, v2);
  return sub(v1, grp.rep().act(h, v2));
}

Int power(const Int& b, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

bool vanishes(const VirtAbGroup& grp, int g, std::size_t i, int h, const Vec& v1, const Vec& v2) {
  require_centralizer(grp, g, h);
  require_component(grp, i);
  Vec y = grp.hull().components[i].project(difference(grp, h, v1, v2));
  return grp.component_wv(g)[i].v.contains(y);
}

Classification classify(const VirtAbGroup& grp, int g, std::size_t i, int h, const Vec& v1, const Vec& v2, int m) {
  require_centralizer(grp, g, h);
  require_component(grp, i);
  if (m < 1) throw Error(ErrorKind::InvalidInput, "m must be positive");
  const auto& c = grp.hull().components[i];
  Vec y = c.project(difference(grp, h, v1, v2));
  const Lattice& v = grp.component_wv(g)[i].v;
  if (v.contains(y)) return Classification::Vanishes;
  Lattice wide = sum(v, Lattice::scaled_full(c.rank(), power(grp.order(), m)));
  return wide.contains(y) ? Classification::GloballyUnsolvable : Classification::LocallyUnsolvable;
}

bool strongly_unsolvable(const VirtAbGroup& grp, int g, int h, const Vec& k1, const Vec& k2) {
  require_centralizer(grp, g, h);
  const Vec& vh = grp.v_of(h);
  Vec d = sub(sub(difference(grp, h, k1, k2), vh), neg(grp.rep().act(g, vh)));
  return !grp.strong_lat(g).contains(d);
}

bool admits_m(const VirtAbGroup& grp, ComponentSet k, int g, const Vec& v1, const Vec& v2, int m) {
  const std::size_t l = grp.hull().size();
  for (int h : grp.group().centralizer(g)) {
    if (strongly_unsolvable(grp, g, h, v1, v2)) continue;
    bool ok = false;
    for (std::size_t i = 0; i < l && !ok; ++i) {
      auto c = classify(grp, g, i, h, v1, v2, m);
      ok = c == Classification::LocallyUnsolvable || (c == Classification::GloballyUnsolvable && (k >> i & 1));
    }
    if (!ok) return false;
  }
  return true;
}

namespace {

void require_tuple(const VirtAbGroup& grp, const Tuple& t) {
  if (t.g < 0 || t.g >= grp.group().order()) throw Error(ErrorKind::InvalidInput, "g out of range");
  for (const auto* v : {&t.v1, &t.v2, &t.k1, &t.k2}) require_dim(grp, *v);
  if (!grp.contains(Element{t.k1, t.g}) || !grp.contains(Element{t.k2, t.g}))
    throw Error(ErrorKind::NonMember, "(k1,g) and (k2,g) must lie in H");
}

struct TuplePattern {
  std::uint64_t uncovered = 0;               // h positions where (k1,k2) is neither strong nor weakly unsolvable
  std::vector<std::uint64_t> weak;           // per component: h positions where (v1,v2) is weakly unsolvable
};

TuplePattern tuple_pattern(const VirtAbGroup& grp, const Tuple& t) {
  require_tuple(grp, t);
  const auto cg = grp.group().centralizer(t.g);
  if (cg.size() > 64) throw Error(ErrorKind::Internal, "centralizer too large");
  const std::size_t l = grp.hull().size();
  TuplePattern p;
  p.weak.assign(l, 0);
  for (std::size_t pos = 0; pos < cg.size(); ++pos) {
    const int h = cg[pos];
    bool covered = strongly_unsolvable(grp, t.g, h, t.k1, t.k2);
    for (std::size_t i = 0; i < l && !covered; ++i) covered = weakly_unsolvable(grp, t.g, i, h, t.k1, t.k2);
    if (!covered) p.uncovered |= std::uint64_t(1) << pos;
    for (std::size_t i = 0; i < l; ++i)
      if (weakly_unsolvable(grp, t.g, i, h, t.v1, t.v2)) p.weak[i] |= std::uint64_t(1) << pos;
  }
  return p;
}

bool pattern_admits(const TuplePattern& p, ComponentSet k) {
  std::uint64_t need = p.uncovered;
  for (std::size_t i = 0; i < p.weak.size(); ++i)
    if (k >> i & 1) need &= ~p.weak[i];
  return need == 0;
}

std::size_t pattern_min_dim(const TuplePattern& p, const std::vector<std::size_t>& dims) {
  const std::size_t l = dims.size();
  if (l > 30) throw Error(ErrorKind::Internal, "too many components");
  const ComponentSet all = (ComponentSet(1) << l) - 1;
  if (!pattern_admits(p, all)) return 0;
  std::size_t best = 0;
  for (std::size_t i = 0; i < l; ++i) best += dims[i];
  for (ComponentSet k = 0; k < all; ++k) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < l; ++i)
      if (k >> i & 1) d += dims[i];
    if (d < best && pattern_admits(p, k)) best = d;
  }
  return best;
}

std::vector<std::size_t> component_dims(const VirtAbGroup& grp) {
  std::vector<std::size_t> d;
  for (const auto& c : grp.hull().components) d.push_back(c.d);
  return d;
}

}  // namespace

bool admits(const VirtAbGroup& grp, ComponentSet k, const Tuple& t) { return pattern_admits(tuple_pattern(grp, t), k); }

std::size_t dim_of(const VirtAbGroup& grp, ComponentSet k) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < grp.hull().size(); ++i)
    if (k >> i & 1) d += grp.hull().components[i].d;
  return d;
}

std::size_t min_admitting_dim(const VirtAbGroup& grp, const Tuple& t) {
  return pattern_min_dim(tuple_pattern(grp, t), component_dims(grp));
}

std::size_t naive_upper_bound(const VirtAbGroup& grp) { return dim_of(grp, (ComponentSet(1) << grp.hull().size()) - 1); }

std::vector<std::string> pattern_table(const VirtAbGroup& grp, int g, const Vec& v1, const Vec& v2) {
  std::vector<std::string> rows;
  for (int h : grp.group().centralizer(g)) {
    std::string r;
    for (std::size_t i = 0; i < grp.hull().size(); ++i) r += vanishes(grp, g, i, h, v1, v2) ? 'v' : 'u';
    rows.push_back(r);
  }
  return rows;
}

// ---------------------------------------------------------------------------

namespace {

/// a + l, l a sublattice.
struct Affine {
  Vec a;
  Lattice l;
};

std::optional<Affine> meet(const Affine& x, const Affine& y) {
  // a1 + B1^T s = a2 + B2^T t
  const std::size_t n = x.a.size();
  if (x.l.rank() == 0) {
    if (y.l.contains(sub(x.a, y.a))) return x;
    return std::nullopt;
  }
  if (y.l.rank() == 0) {
    if (x.l.contains(sub(y.a, x.a))) return y;
    return std::nullopt;
  }
  IntMat m = IntMat::hconcat(x.l.basis().transpose(), (Int(-1) * y.l.basis()).transpose());
  auto s = solve_integer(m, sub(y.a, x.a));
  if (!s) return std::nullopt;
  Vec p = x.a;
  for (std::size_t k = 0; k < x.l.rank(); ++k)
    for (std::size_t j = 0; j < n; ++j) p[j] += (*s)[k] * x.l.basis()(k, j);
  return Affine{p, intersect(x.l, y.l)};
}

/// Points p + sum_t c^t b_t along a moment curve in the lattice spanned by the rows of b.
Vec curve_point(const Vec& p, const IntMat& b, long c) {
  Vec out = p;
  Int pw = 1;
  for (std::size_t t = 0; t < b.rows(); ++t) {
    pw *= c;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += pw * b(t, j);
  }
  return out;
}

std::vector<std::vector<int>> subgroups_of(const FiniteGroup& grp, const std::vector<int>& within) {
  std::set<std::vector<int>> seen{{0}};
  std::vector<std::vector<int>> out{{0}};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int c : within) {
      if (std::binary_search(out[i].begin(), out[i].end(), c)) continue;
      auto gens = out[i];
      gens.push_back(c);
      auto s = grp.closure(gens);
      std::sort(s.begin(), s.end());
      if (seen.insert(s).second) out.push_back(s);
    }
  return out;
}

struct GSearch {
  const VirtAbGroup& grp;
  int g;
  const ExponentOptions& opt;
  std::vector<int> cg;
  std::map<int, std::size_t> pos;
  bool complete = true;

  GSearch(const VirtAbGroup& grp_, int g_, const ExponentOptions& o) : grp(grp_), g(g_), opt(o) {
    cg = grp.group().centralizer(g);
    for (std::size_t k = 0; k < cg.size(); ++k) pos[cg[k]] = k;
  }

  std::size_t n() const { return grp.dim(); }

  std::uint64_t mask_of(const std::vector<int>& hs) const {
    std::uint64_t m = 0;
    for (int h : hs) m |= std::uint64_t(1) << pos.at(h);
    return m;
  }

  Vec b_of(int h) const {
    const auto& rep = grp.rep();
    Vec num = sub(sub(grp.v_of(g), rep.act(h, grp.v_of(g))),
                  sub(grp.v_of(h), rep.act(g, grp.v_of(h))));
    for (auto& c : num) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), grp.order().get_mpz_t());
    return num;
  }

  /// {x : b_h + (1 - rho(h)) x in W_g}
  std::optional<Affine> t_of(int h) const {
    IntMat a = IntMat::identity(n()) - grp.rep().mat(h);
    const Lattice& w = grp.w(g);
    Vec rhs = neg(b_of(h));
    std::optional<Vec> x;
    if (w.rank() == 0) {
      x = solve_integer(a, rhs);
    } else {
      auto s = solve_integer(IntMat::hconcat(a, w.basis().transpose()), rhs);
      if (s) x = Vec(s->begin(), s->begin() + n());
    }
    if (!x) return std::nullopt;
    return Affine{*x, preimage(a, w)};
  }

  /// Uncovered set of (k1,k2), literally from the predicates.
  std::uint64_t uncovered(const Vec& k1, const Vec& k2) const {
    std::uint64_t m = 0;
    for (std::size_t p = 0; p < cg.size(); ++p) {
      const int h = cg[p];
      bool covered = strongly_unsolvable(grp, g, h, k1, k2);
      for (std::size_t i = 0; i < grp.hull().size() && !covered; ++i)
        covered = weakly_unsolvable(grp, g, i, h, k1, k2);
      if (!covered) m |= std::uint64_t(1) << p;
    }
    return m;
  }

  struct KSide {
    std::uint64_t u;
    Vec k1, k2;
  };

  Vec k_of(const Vec& x) const { return add(grp.v_of(g), scale(grp.order(), x)); }

  /// All realizable uncovered sets with realizing (k1, k2).
  std::vector<KSide> k_side() {
    std::vector<std::optional<Affine>> t;
    for (int h : cg) t.push_back(t_of(h));
    std::map<std::uint64_t, KSide> out;
    auto record = [&](const Vec& k1, const Vec& k2) {
      std::uint64_t u = uncovered(k1, k2);
      out.emplace(u, KSide{u, k1, k2});
    };
    // stabilizers S(x) = {h : x in T_h}; U ranges over the left cosets h0 S(x)
    for (const auto& s : subgroups_of(grp.group(), cg)) {
      std::optional<Affine> a = Affine{zero_vec(n()), Lattice::full(n())};
      for (int h : s) {
        if (!a) break;
        if (!t[pos[h]]) a.reset();
        else a = meet(*a, *t[pos[h]]);
      }
      if (!a) continue;
      auto x = realize_stabilizer(*a, s, t);
      if (!x) continue;
      const Vec k2 = k_of(*x);
      for (int h0 : cg) {
        Element c = grp.conj(Element{grp.v_of(h0), h0}, Element{k2, g});
        record(c.v, k2);
      }
    }
    // the empty uncovered set: y - rho(h) x + b_h outside W_g for every h
    if (auto e = realize_empty()) record(e->first, e->second);
    std::vector<KSide> res;
    for (auto& [u, k] : out) res.push_back(std::move(k));
    return res;
  }

  std::optional<Vec> realize_stabilizer(const Affine& a, const std::vector<int>& s,
                                        const std::vector<std::optional<Affine>>& t) {
    const std::size_t r = a.l.rank();
    std::vector<Affine> full_pieces;
    for (std::size_t p = 0; p < cg.size(); ++p) {
      if (std::binary_search(s.begin(), s.end(), cg[p]) || !t[p]) continue;
      auto m = meet(a, *t[p]);
      if (m && m->l.rank() == r) full_pieces.push_back(*m);
    }
    // coordinates relative to a.l
    auto coords_of = [&](const Lattice& l) {
      std::vector<Vec> rows;
      for (std::size_t k = 0; k < l.rank(); ++k) rows.push_back(*a.l.coords(l.basis().row(k)));
      return hnf_basis(rows, r);
    };
    Lattice common = Lattice::full(r);
    std::vector<std::pair<Vec, Lattice>> pieces;
    for (const auto& f : full_pieces) {
      Lattice lc = coords_of(f.l);
      pieces.push_back({*a.l.coords(sub(f.a, a.a)), lc});
      common = intersect(common, lc);
    }
    std::vector<Vec> reps;
    try {
      reps = coset_residues(Lattice::full(r), zero_vec(r), common, opt.coset_cap);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      complete = false;
      return std::nullopt;
    }
    IntMat common_amb(common.rank(), n());
    for (std::size_t k = 0; k < common.rank(); ++k) {
      Vec v = zero_vec(n());
      for (std::size_t j = 0; j < r; ++j) v = add(v, scale(common.basis()(k, j), a.l.basis().row(j)));
      common_amb.set_row(k, v);
    }
    const long tries = static_cast<long>((r + 1) * (cg.size() + 1)) * std::max(1, opt.height_cap);
    for (const auto& z : reps) {
      bool covered = false;
      for (const auto& [off, lc] : pieces)
        if (lc.contains(sub(z, off))) {
          covered = true;
          break;
        }
      if (covered) continue;
      Vec x0 = a.a;
      for (std::size_t j = 0; j < r; ++j) x0 = add(x0, scale(z[j], a.l.basis().row(j)));
      for (long c = 0; c <= tries; ++c) {
        Vec x = curve_point(x0, common_amb, c);
        bool exact = true;
        for (std::size_t p = 0; p < cg.size() && exact; ++p) {
          bool in = t[p] && t[p]->l.contains(sub(x, t[p]->a));
          exact = in == std::binary_search(s.begin(), s.end(), cg[p]);
        }
        if (exact) return x;
      }
      complete = false;
    }
    return std::nullopt;
  }

  std::optional<std::pair<Vec, Vec>> realize_empty() {
    const Lattice& w = grp.w(g);
    std::vector<Vec> b;
    for (int h : cg) b.push_back(b_of(h));
    auto empty_at = [&](const Vec& x, const Vec& y) {
      for (std::size_t p = 0; p < cg.size(); ++p)
        if (w.contains(add(sub(y, grp.rep().act(cg[p], x)), b[p]))) return false;
      return true;
    };
    if (!w.is_full_rank()) {
      IntMat id = IntMat::identity(n());
      const long tries = static_cast<long>((n() + 1) * (cg.size() + 1)) * std::max(1, opt.height_cap);
      for (long c = 0; c <= tries; ++c) {
        Vec y = curve_point(zero_vec(n()), id, c);
        if (empty_at(zero_vec(n()), y)) return std::make_pair(k_of(y), k_of(zero_vec(n())));
      }
      complete = false;
      return std::nullopt;
    }
    std::vector<Vec> reps;
    try {
      reps = coset_residues(Lattice::full(n()), zero_vec(n()), w, opt.coset_cap);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      complete = false;
      return std::nullopt;
    }
    for (const auto& x : reps)
      for (const auto& y : reps)
        if (empty_at(x, y)) return std::make_pair(k_of(y), k_of(x));
    return std::nullopt;
  }
};

/// Kernel of (a, b) -> a - rho_i(h) b modulo V_g(M_i), in Z^{2r}.
Lattice pair_kernel(const VirtAbGroup& grp, int g, std::size_t i, int h) {
  const auto& c = grp.hull().components[i];
  const std::size_t r = c.rank();
  IntMat m = IntMat::hconcat(IntMat::identity(r), Int(-1) * c.comp_rep.mat(h));
  return preimage(m, grp.component_wv(g)[i].v);
}

}  // namespace

std::vector<SolutionSet> solution_sets(const VirtAbGroup& grp, int g, std::size_t i) {
  require_component(grp, i);
  const auto cg = grp.group().centralizer(g);
  const std::size_t r = grp.hull().components[i].rank();
  std::vector<Lattice> ker;
  for (int h : cg) ker.push_back(pair_kernel(grp, g, i, h));
  auto closure = [&](const Lattice& k) {
    std::vector<int> s;
    for (std::size_t p = 0; p < cg.size(); ++p)
      if (ker[p].contains(k)) s.push_back(cg[p]);
    return s;
  };
  auto kernel_of = [&](const std::vector<int>& s) {
    Lattice k = Lattice::full(2 * r);
    for (std::size_t p = 0; p < cg.size(); ++p)
      if (std::binary_search(s.begin(), s.end(), cg[p])) k = intersect(k, ker[p]);
    return k;
  };
  std::vector<std::vector<int>> sets{closure(Lattice::full(2 * r))};
  std::set<std::vector<int>> seen{sets[0]};
  for (std::size_t q = 0; q < sets.size(); ++q)
    for (int h : cg) {
      if (std::binary_search(sets[q].begin(), sets[q].end(), h)) continue;
      auto s = sets[q];
      s.push_back(h);
      std::sort(s.begin(), s.end());
      auto c = closure(kernel_of(s));
      if (seen.insert(c).second) sets.push_back(c);
    }
  std::sort(sets.begin(), sets.end());
  std::vector<SolutionSet> out;
  for (const auto& s : sets) {
    Lattice k = kernel_of(s);
    // a point of k outside every excluded kernel; excluded kernels meet k in lower rank
    const long tries = static_cast<long>((k.rank() + 1) * (cg.size() + 1)) + 1;
    std::optional<Vec> pt;
    for (long c = 1; c <= tries && !pt; ++c) {
      Vec x = curve_point(zero_vec(2 * r), k.basis(), c);
      if (closure(hnf_basis({x}, 2 * r)) == s) pt = x;
    }
    if (k.rank() == 0 && closure(k) == s) pt = zero_vec(2 * r);
    if (!pt) throw Error(ErrorKind::Internal, "closed solution set without a realizing pair");
    out.push_back(SolutionSet{s, k, Vec(pt->begin(), pt->begin() + r), Vec(pt->begin() + r, pt->end())});
  }
  return out;
}

namespace {

/// Max over v-side patterns of the min admitting dimension for a fixed uncovered set.
struct Combiner {
  std::uint64_t u;
  const std::vector<std::vector<std::uint64_t>>& weak;  // per component, per option: weak mask
  const std::vector<std::size_t>& dims;
  std::size_t budget;
  std::size_t leaves = 0;
  bool complete = true;
  std::size_t best = 0;
  std::vector<std::size_t> best_pick, cur;
  std::size_t ceiling = 0;

  Combiner(std::uint64_t u_, const std::vector<std::vector<std::uint64_t>>& w, const std::vector<std::size_t>& d,
           std::size_t b)
      : u(u_), weak(w), dims(d), budget(b) {}

  void run() {
    for (auto d : dims) ceiling += d;
    cur.assign(dims.size(), 0);
    best_pick = cur;
    dfs(0);
  }

  void dfs(std::size_t i) {
    if (best == ceiling || !complete) return;
    if (i == dims.size()) {
      if (++leaves > budget) {
        complete = false;
        return;
      }
      TuplePattern p{u, {}};
      for (std::size_t c = 0; c < dims.size(); ++c) p.weak.push_back(weak[c][cur[c]]);
      std::size_t v = pattern_min_dim(p, dims);
      if (v > best) {
        best = v;
        best_pick = cur;
      }
      return;
    }
    // options differing only outside u are equivalent
    std::set<std::uint64_t> tried;
    for (std::size_t o = 0; o < weak[i].size(); ++o) {
      if (!tried.insert(weak[i][o] & u).second) continue;
      cur[i] = o;
      dfs(i + 1);
    }
  }
};

}  // namespace

ExponentCertificate k3_exponent(const VirtAbGroup& grp, const ExponentOptions& opt) {
  ExponentCertificate cert;
  cert.mode = opt.mode;
  cert.naive = naive_upper_bound(grp);
  const int order = grp.group().order();
  cert.per_g.assign(order, -1);
  if (opt.mode == ExponentMode::Naive) {
    cert.k = cert.lower = cert.upper = cert.naive;
    return cert;
  }
  if (opt.mode == ExponentMode::Witness) {
    for (const auto& t : opt.tuples) {
      std::size_t v = min_admitting_dim(grp, t);
      cert.per_g[t.g] = std::max<long>(cert.per_g[t.g], static_cast<long>(v));
      if (!cert.witness || v > cert.k) {
        cert.k = v;
        cert.witness = t;
      }
    }
    cert.lower = cert.k;
    cert.upper = cert.naive;
    cert.complete = false;
    return cert;
  }
  const auto dims = component_dims(grp);
  const std::size_t l = dims.size();
  std::size_t best = 0;
  for (int g = 0; g < order; ++g) {
    GSearch gs(grp, g, opt);
    if (gs.cg.size() > 64) throw Error(ErrorKind::Internal, "centralizer too large");
    auto ks = gs.k_side();
    std::vector<std::vector<SolutionSet>> sols;
    std::vector<std::vector<std::uint64_t>> weak(l);
    const std::uint64_t all = gs.cg.size() == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << gs.cg.size()) - 1;
    for (std::size_t i = 0; i < l; ++i) {
      sols.push_back(solution_sets(grp, g, i));
      for (const auto& s : sols.back()) weak[i].push_back(all & ~gs.mask_of(s.members));
    }
    std::size_t gbest = 0;
    for (const auto& k : ks) {
      Combiner c(k.u, weak, dims, opt.leaf_budget);
      c.run();
      if (!c.complete) gs.complete = false;
      gbest = std::max(gbest, c.best);
      if (cert.witness && c.best <= best) continue;
      // v = sum_i |G| * (embedding of the realizing pair of component i)
      Vec v1 = zero_vec(grp.dim()), v2 = zero_vec(grp.dim());
      for (std::size_t i = 0; i < l; ++i) {
        const auto& comp = grp.hull().components[i];
        const auto& s = sols[i][c.best_pick[i]];
        Vec a = comp.embed_scaled(s.a), b = comp.embed_scaled(s.b);
        for (std::size_t j = 0; j < grp.dim(); ++j) {
          v1[j] += grp.order() * a[j] / comp.lattice.den;
          v2[j] += grp.order() * b[j] / comp.lattice.den;
        }
      }
      best = c.best;
      cert.witness = Tuple{g, v1, v2, k.k1, k.k2};
    }
    if (!gs.complete) cert.complete = false;
    cert.per_g[g] = static_cast<long>(gbest);
  }
  cert.k = best;
  cert.lower = best;
  cert.upper = cert.complete ? best : cert.naive;
  if (cert.k > grp.dim() || cert.k > cert.naive) throw Error(ErrorKind::Internal, "exponent exceeds its bounds");
  if (cert.witness && min_admitting_dim(grp, *cert.witness) != cert.k)
    throw Error(ErrorKind::Internal, "witness tuple does not realize the exponent");
  return cert;
}

}  // namespace csep
