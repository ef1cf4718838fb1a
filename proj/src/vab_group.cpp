#include "csep/vab_group.hpp"

#include "csep/error.hpp"
#include "csep/modp.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace csep {

std::string to_string(const Element& e) { return "(" + to_string(std::span<const Int>(e.v)) + ", " + std::to_string(e.g) + ")"; }

VirtAbGroup::VirtAbGroup(IntRep rep, std::vector<Vec> cocycle, const HullOptions& hopt)
    : rep_(std::move(rep)), cocycle_(std::move(cocycle)) {
  const auto& g = rep_.group();
  const std::size_t h = rep_.dim();
  order_ = g.order();
  if (static_cast<int>(cocycle_.size()) != g.order()) throw Error(ErrorKind::InvalidInput, "one v_g per element");
  for (const auto& v : cocycle_)
    if (v.size() != h) throw Error(ErrorKind::DimensionMismatch, "cocycle vector length");
  if (!is_zero(cocycle_[0])) throw Error(ErrorKind::CocycleNotClosed, "v_e must be 0");
  Lattice gm = Lattice::scaled_full(h, order_);
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      Vec d = sub(add(cocycle_[a], rep_.act(a, cocycle_[b])), cocycle_[g.mul(a, b)]);
      if (!gm.contains(d))
        throw Error(ErrorKind::CocycleNotClosed,
                    "v_g + rho(g) v_h - v_gh not in |G| Z^h for g=" + std::to_string(a) + ", h=" + std::to_string(b));
    }
  hull_ = square_hull(rep_, hopt);
  build_caches();
  std::vector<Element> gens;
  for (int x = 1; x < g.order(); ++x) gens.push_back(Element{cocycle_[x], x});
  for (std::size_t j = 0; j < h; ++j)
    for (int s : {1, -1}) {
      Vec e = zero_vec(h);
      e[j] = order_ * s;
      gens.push_back(Element{e, 0});
    }
  gens_ = std::move(gens);
}

VirtAbGroup VirtAbGroup::new_split(IntRep rep, const HullOptions& hopt) {
  std::vector<Vec> c(rep.group().order(), zero_vec(rep.dim()));
  return VirtAbGroup(std::move(rep), std::move(c), hopt);
}

void VirtAbGroup::build_caches() {
  const auto& g = rep_.group();
  const std::size_t h = rep_.dim();
  Lattice cube = Lattice::scaled_full(h, order_ * order_ * order_);
  for (int x = 0; x < g.order(); ++x) {
    one_minus_.push_back(IntMat::identity(h) - rep_.mat(x));
    w_.push_back(image(one_minus_.back()));
    v_.push_back(radical(w_.back()));
    gw_.push_back(w_.back().scaled(order_));
    strong_.push_back(sum(gw_.back(), cube));
    std::vector<ComponentWV> cw;
    for (std::size_t i = 0; i < hull_.size(); ++i) cw.push_back(component_w_v(hull_, i, x));
    comp_wv_.push_back(std::move(cw));
  }
}

void VirtAbGroup::set_generators(std::vector<Element> gens) {
  for (const auto& s : gens) require_member(s);
  gens_ = std::move(gens);
}

bool VirtAbGroup::contains(const Element& x) const {
  if (x.g < 0 || x.g >= group().order() || x.v.size() != dim()) return false;
  for (std::size_t j = 0; j < dim(); ++j)
    if (!mpz_divisible_p(Int(x.v[j] - cocycle_[x.g][j]).get_mpz_t(), order_.get_mpz_t())) return false;
  return true;
}

void VirtAbGroup::require_member(const Element& x) const {
  if (!contains(x)) throw Error(ErrorKind::NonMember, to_string(x) + " is not in H");
}

Element VirtAbGroup::mul_raw(const Element& x, const Element& y) const {
  return Element{add(x.v, rep_.act(x.g, y.v)), group().mul(x.g, y.g)};
}

Element VirtAbGroup::inv_raw(const Element& x) const {
  int gi = group().inv(x.g);
  return Element{neg(rep_.act(gi, x.v)), gi};
}

Element VirtAbGroup::conj_raw(const Element& a, const Element& x) const { return mul_raw(mul_raw(a, x), inv_raw(a)); }

Element VirtAbGroup::mul(const Element& x, const Element& y) const {
  require_member(x);
  require_member(y);
  return mul_raw(x, y);
}

Element VirtAbGroup::inv(const Element& x) const {
  require_member(x);
  return inv_raw(x);
}

Element VirtAbGroup::conj(const Element& a, const Element& x) const {
  require_member(a);
  require_member(x);
  return conj_raw(a, x);
}

std::vector<BallEntry> VirtAbGroup::ball(int n, std::size_t cap) const {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "negative radius");
  std::vector<Element> steps;
  std::unordered_set<Element, ElementHash> seen_steps;
  for (const auto& s : gens_)
    for (const auto& t : {s, inv_raw(s)})
      if (seen_steps.insert(t).second) steps.push_back(t);
  std::vector<BallEntry> out{{identity(), 0}};
  std::unordered_set<Element, ElementHash> seen{identity()};
  std::size_t begin = 0;
  for (int r = 1; r <= n; ++r) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (const auto& s : steps) {
        Element y = mul_raw(out[i].e, s);
        if (!seen.insert(y).second) continue;
        if (out.size() >= cap) throw Error(ErrorKind::BudgetExceeded, "ball exceeds " + std::to_string(cap));
        out.push_back({std::move(y), r});
      }
    begin = end;
  }
  return out;
}

VirtAbGroup::Reduced VirtAbGroup::reduce_pair(const Element& x, const Element& y) const {
  const auto& grp = group();
  Reduced r;
  int g0 = -1;
  for (int a = 0; a < grp.order() && g0 < 0; ++a)
    if (grp.conj(a, x.g) == y.g) g0 = a;
  if (g0 < 0) return r;
  r.g = y.g;
  Element x1 = conj_raw(Element{cocycle_[g0], g0}, x);
  for (int h : grp.centralizer(r.g)) {
    Vec d = sub(sub(y.v, rep_.act(h, x1.v)), one_minus_[r.g].apply(cocycle_[h]));
    for (auto& c : d) {
      if (!mpz_divisible_p(c.get_mpz_t(), order_.get_mpz_t())) throw Error(ErrorKind::Internal, "shift not divisible");
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), order_.get_mpz_t());
    }
    r.hs.push_back(h);
    r.eps.push_back(std::move(d));
  }
  return r;
}

ConjugacyAnswer VirtAbGroup::is_conjugate(const Element& x, const Element& y) const {
  require_member(x);
  require_member(y);
  ConjugacyAnswer ans;
  Reduced r = reduce_pair(x, y);
  if (r.g < 0) return ans;
  int g0 = -1;
  for (int a = 0; a < group().order() && g0 < 0; ++a)
    if (group().conj(a, x.g) == y.g) g0 = a;
  const Element a0{cocycle_[g0], g0};
  for (std::size_t k = 0; k < r.hs.size(); ++k) {
    if (!w_[r.g].contains(r.eps[k])) continue;
    // (1 - rho(g)) z = eps_h, conjugator (v_h + |G| z, h) a0
    auto z = solve_integer(one_minus_[r.g], r.eps[k]);
    if (!z) throw Error(ErrorKind::Internal, "membership without solution");
    const int h = r.hs[k];
    Element a = mul_raw(Element{add(cocycle_[h], scale(order_, *z)), h}, a0);
    if (!(conj_raw(a, x) == y)) throw Error(ErrorKind::Internal, "witness does not conjugate");
    ans.conjugate = true;
    ans.witness = std::move(a);
    ans.via = h;
    return ans;
  }
  return ans;
}

namespace {

void check_quotient_lattice(const VirtAbGroup& grp, const Lattice& n) {
  if (n.ambient() != grp.dim()) throw Error(ErrorKind::DimensionMismatch, "N has the wrong ambient dimension");
  if (!Lattice::scaled_full(grp.dim(), grp.order()).contains(n))
    throw Error(ErrorKind::NotASublattice, "N is not contained in |G| Z^h");
  for (int s = 0; s < grp.group().order(); ++s)
    for (std::size_t k = 0; k < n.rank(); ++k)
      if (!n.contains(grp.rep().act(s, n.basis().row(k)))) throw Error(ErrorKind::NotInvariant, "N is not invariant");
}

}  // namespace

bool VirtAbGroup::is_conjugate_mod(const Element& x, const Element& y, const Lattice& n) const {
  require_member(x);
  require_member(y);
  check_quotient_lattice(*this, n);
  Reduced r = reduce_pair(x, y);
  if (r.g < 0) return false;
  // eps_h = delta_h / |G|, so delta_h in N + |G| W_g iff eps_h in N/|G| + W_g
  Lattice target = sum(n, gw_[r.g]);
  for (const auto& e : r.eps)
    if (target.contains(scale(order_, e))) return true;
  return false;
}

// ---------------------------------------------------------------------------
// p-local search for invariant sublattices separating the shifted differences

namespace {

using FpVec = std::vector<long>;

struct Subspace {
  long p;
  std::vector<FpVec> rows;  // reduced echelon, pivots normalized to 1
  std::vector<std::size_t> piv;

  FpVec reduce(FpVec v) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      long c = v[piv[i]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = ((v[j] - c * rows[i][j]) % p + p) % p;
    }
    return v;
  }
  bool add(FpVec v) {
    v = reduce(std::move(v));
    auto it = std::find_if(v.begin(), v.end(), [](long c) { return c != 0; });
    if (it == v.end()) return false;
    std::size_t k = it - v.begin();
    long inv = mod_inv(v[k], p);
    for (auto& c : v) c = c * inv % p;
    for (auto& r : rows) {
      long c = r[k];
      if (c == 0) continue;
      for (std::size_t j = 0; j < r.size(); ++j) r[j] = ((r[j] - c * v[j]) % p + p) % p;
    }
    rows.push_back(std::move(v));
    piv.push_back(k);
    return true;
  }
  bool contains(const FpVec& v) const {
    FpVec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](long c) { return c == 0; });
  }
  std::vector<FpVec> canonical() const {
    std::vector<std::pair<std::size_t, FpVec>> s;
    for (std::size_t i = 0; i < rows.size(); ++i) s.push_back({piv[i], rows[i]});
    std::sort(s.begin(), s.end());
    std::vector<FpVec> out;
    for (auto& e : s) out.push_back(e.second);
    return out;
  }
};

FpVec apply_right(const FpVec& phi, const FpMat& a) {  // phi * a
  const long p = a.prime();
  FpVec out(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (phi[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] = (out[j] + phi[i] * a(i, j)) % p;
  }
  return out;
}

Subspace spin(const FpVec& phi, const std::vector<FpMat>& acts, long p) {
  Subspace s{p, {}, {}};
  s.add(phi);
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    FpVec base = s.rows[i];
    for (const auto& a : acts) s.add(apply_right(base, a));
  }
  return s;
}

/// Simple submodules of the row module F_p^n with phi -> phi a, a in acts.
struct SimpleSearch {
  std::vector<Subspace> simples;
  bool complete = true;
};

SimpleSearch simple_submodules(const std::vector<FpMat>& acts, std::size_t n, long p, int exponent,
                               std::size_t projective_cap, bool need_higher) {
  SimpleSearch out;
  // number of projective points (p^n - 1)/(p - 1), saturating
  std::size_t count = 0;
  {
    unsigned long long c = 0, pw = 1;
    bool big = false;
    for (std::size_t i = 0; i < n && !big; ++i) {
      c += pw;
      if (c > projective_cap) big = true;
      if (pw > projective_cap) big = true;
      pw *= p;
    }
    count = big ? projective_cap + 1 : c;
  }
  std::map<std::vector<FpVec>, Subspace> found;
  if (count <= projective_cap) {
    for (std::size_t lead = 0; lead < n; ++lead) {
      std::size_t free = n - lead - 1;
      std::size_t total = 1;
      for (std::size_t i = 0; i < free; ++i) total *= p;
      for (std::size_t t = 0; t < total; ++t) {
        FpVec v(n, 0);
        v[lead] = 1;
        std::size_t r = t;
        for (std::size_t i = 0; i < free; ++i) {
          v[lead + 1 + i] = r % p;
          r /= p;
        }
        Subspace s = spin(v, acts, p);
        found.emplace(s.canonical(), std::move(s));
      }
    }
    for (const auto& [key, s] : found) {
      bool minimal = true;
      for (const auto& [k2, t] : found) {
        if (t.rows.size() >= s.rows.size()) continue;
        if (std::all_of(t.rows.begin(), t.rows.end(), [&](const FpVec& v) { return s.contains(v); })) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.simples.push_back(s);
    }
    return out;
  }
  // common eigenlines only; higher-dimensional simple submodules are missed
  if (need_higher) out.complete = false;
  std::vector<long> roots;
  for (long l = 1; l < p; ++l)
    if (mod_pow(l, exponent, p) == 1) roots.push_back(l);
  std::vector<std::vector<FpVec>> spaces;
  {
    std::vector<FpVec> id;
    for (std::size_t i = 0; i < n; ++i) {
      FpVec e(n, 0);
      e[i] = 1;
      id.push_back(e);
    }
    spaces.push_back(id);
  }
  for (const auto& a : acts) {
    std::vector<std::vector<FpVec>> next;
    FpMat at = a.transpose();
    for (const auto& u : spaces)
      for (long l : roots) {
        // columns u_k, find c with (a^T - l) U c = 0
        FpMat shifted = at - FpMat::identity(n, p).scaled(l);
        FpMat um(n, u.size(), p);
        for (std::size_t k = 0; k < u.size(); ++k)
          for (std::size_t i = 0; i < n; ++i) um(i, k) = u[k][i];
        auto ker = (shifted * um).nullspace();
        if (ker.empty()) continue;
        std::vector<FpVec> nu;
        for (const auto& c : ker) {
          FpVec v(n, 0);
          for (std::size_t k = 0; k < u.size(); ++k)
            for (std::size_t i = 0; i < n; ++i) v[i] = (v[i] + c[k] * u[k][i]) % p;
          nu.push_back(v);
        }
        next.push_back(std::move(nu));
      }
    spaces = std::move(next);
  }
  for (const auto& u : spaces) {
    const std::size_t m = u.size();
    if (m == 1) {
      Subspace s{p, {}, {}};
      s.add(u[0]);
      out.simples.push_back(s);
      continue;
    }
    unsigned long long lines = 0, pw = 1;
    for (std::size_t i = 0; i < m && lines <= projective_cap; ++i, pw *= p) lines += pw;
    if (lines > projective_cap) {
      out.complete = false;
      continue;
    }
    for (std::size_t lead = 0; lead < m; ++lead) {
      std::size_t free = m - lead - 1, total = 1;
      for (std::size_t i = 0; i < free; ++i) total *= p;
      for (std::size_t t = 0; t < total; ++t) {
        std::vector<long> c(m, 0);
        c[lead] = 1;
        std::size_t r = t;
        for (std::size_t i = 0; i < free; ++i) {
          c[lead + 1 + i] = r % p;
          r /= p;
        }
        FpVec v(n, 0);
        for (std::size_t k = 0; k < m; ++k)
          for (std::size_t i = 0; i < n; ++i) v[i] = (v[i] + c[k] * u[k][i]) % p;
        Subspace s{p, {}, {}};
        s.add(v);
        out.simples.push_back(s);
      }
    }
  }
  return out;
}

struct Entry {
  Int index;
  Lattice lat;
};

struct PrimeTable {
  std::map<std::uint64_t, Entry> best;  // mask -> least index
  bool complete = true;
};

class LocalSearch {
 public:
  LocalSearch(const VirtAbGroup& grp, const Lattice& w, const std::vector<Vec>& eps, const SeparationOptions& opt)
      : grp_(grp), w_(w), eps_(eps), opt_(opt), gens_(grp.group().generators()) {
    full_ = eps.size() >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << eps.size()) - 1;
  }

  std::uint64_t full() const { return full_; }

  std::uint64_t mask(const Lattice& n) const {
    Lattice nw = sum(n, w_);
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < eps_.size(); ++k)
      if (!nw.contains(eps_[k])) m |= std::uint64_t(1) << k;
    return m;
  }

  PrimeTable run(long p, const Int& limit) const {
    PrimeTable t;
    const std::size_t h = grp_.dim();
    using Item = std::pair<Int, Lattice>;
    auto cmp = [](const Item& a, const Item& b) {
      if (a.first != b.first) return a.first > b.first;
      return b.second < a.second;
    };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> queue(cmp);
    std::unordered_set<Lattice, LatticeHash> seen;
    queue.push({Int(1), Lattice::full(h)});
    seen.insert(Lattice::full(h));
    std::size_t visited = 0;
    while (!queue.empty()) {
      auto [idx, n] = queue.top();
      queue.pop();
      auto fb = t.best.find(full_);
      if (fb != t.best.end() && fb->second.index <= idx) break;
      if (++visited > opt_.node_cap) {
        t.complete = false;
        break;
      }
      std::uint64_t m = mask(n);
      auto it = t.best.find(m);
      if (m != 0 && (it == t.best.end() || idx < it->second.index)) t.best[m] = Entry{idx, n};
      if (m == full_) continue;
      if (idx * p > limit) continue;
      if (fb != t.best.end() && fb->second.index <= idx * p) continue;
      for (auto& child : children(n, p, idx, limit, t.complete)) {
        Int ci = idx;
        for (std::size_t k = 0; k < child.second; ++k) ci *= p;
        if (ci > limit) continue;
        if (seen.insert(child.first).second) queue.push({ci, std::move(child.first)});
      }
    }
    return t;
  }

 private:
  /// Maximal invariant sublattices of n containing p n, with log_p of their index.
  std::vector<std::pair<Lattice, std::size_t>> children(const Lattice& n, long p, const Int& idx, const Int& limit,
                                                       bool& complete) const {
    const std::size_t h = grp_.dim();
    const IntMat& b = n.basis();
    std::vector<FpMat> acts;
    for (int s : gens_) {
      // rows: coordinates of rho(s) b_k; the column action is the transpose, the dual row action phi -> phi C^T
      IntMat c(h, h);
      for (std::size_t k = 0; k < h; ++k) {
        auto y = n.coords(grp_.rep().act(s, b.row(k)));
        if (!y) throw Error(ErrorKind::Internal, "sublattice not invariant");
        for (std::size_t j = 0; j < h; ++j) c(k, j) = (*y)[j];
      }
      acts.push_back(FpMat::reduce(c.transpose(), p));
    }
    bool need_higher = idx * p * p <= limit;
    auto found = simple_submodules(acts, h, p, grp_.group().exponent(), opt_.projective_cap, need_higher);
    if (!found.complete) complete = false;
    std::vector<std::pair<Lattice, std::size_t>> out;
    for (const auto& s : found.simples) {
      const std::size_t k = s.rows.size();
      IntMat phi(k, h);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < h; ++j) phi(i, j) = s.rows[i][j];
      Lattice ys = preimage(phi, Lattice::scaled_full(k, p));
      out.push_back({row_lattice(ys.basis() * b), k});
    }
    return out;
  }

  const VirtAbGroup& grp_;
  const Lattice& w_;
  const std::vector<Vec>& eps_;
  SeparationOptions opt_;
  std::vector<int> gens_;
  std::uint64_t full_ = 0;
};

}  // namespace

std::optional<SeparatingQuotient> VirtAbGroup::min_separating_index(const Element& x, const Element& y,
                                                                    const Int& budget,
                                                                    const SeparationOptions& opt) const {
  require_member(x);
  require_member(y);
  if (budget < order_) throw Error(ErrorKind::InvalidInput, "budget below |G|");
  if (is_conjugate(x, y).conjugate) throw Error(ErrorKind::InputsConjugate, "inputs are conjugate in H");
  const std::size_t h = dim();
  Reduced r = reduce_pair(x, y);
  if (r.g < 0) return SeparatingQuotient{order_, Lattice::scaled_full(h, order_), true};
  if (r.eps.size() > 64) throw Error(ErrorKind::Internal, "centralizer too large for the mask search");
  const Int cap = budget / order_;  // bound on [Z^h : N_c]
  LocalSearch search(*this, w_[r.g], r.eps, opt);
  const std::uint64_t full = search.full();

  struct State {
    Int index;
    std::vector<Lattice> parts;
  };
  std::map<std::uint64_t, State> states{{0, State{1, {}}}};
  bool complete = true;
  auto best = [&]() -> std::optional<Int> {
    auto it = states.find(full);
    if (it == states.end()) return std::nullopt;
    return it->second.index;
  };
  for (long p = 2;; ++p) {
    if (!is_prime(p)) continue;
    Int limit = cap;
    if (auto b = best()) limit = std::min(limit, Int(*b - 1));
    if (Int(p) > limit) break;
    PrimeTable t = search.run(p, limit);
    if (!t.complete) complete = false;
    auto next = states;
    for (const auto& [m1, s] : states)
      for (const auto& [m2, e] : t.best) {
        Int idx = s.index * e.index;
        if (idx > limit) continue;
        std::uint64_t m = m1 | m2;
        auto it = next.find(m);
        if (it != next.end() && it->second.index <= idx) continue;
        State ns{idx, s.parts};
        ns.parts.push_back(e.lat);
        next[m] = std::move(ns);
      }
    states = std::move(next);
  }
  auto it = states.find(full);
  if (it == states.end()) {
    if (!complete) throw Error(ErrorKind::BudgetExceeded, "sublattice search truncated before a separating quotient");
    return std::nullopt;
  }
  Lattice nc = Lattice::full(h);
  for (const auto& l : it->second.parts) nc = intersect(nc, l);
  auto ix = index(nc, Lattice::full(h));
  if (!ix || *ix != it->second.index) throw Error(ErrorKind::Internal, "index of the combined sublattice");
  Lattice n = nc.scaled(order_);
  if (is_conjugate_mod(x, y, n)) throw Error(ErrorKind::Internal, "quotient does not separate");
  return SeparatingQuotient{order_ * it->second.index, n, complete};
}

// ---------------------------------------------------------------------------

Element EmbeddedExtension::image(const Vec& m, int g) const {
  return Element{add(scale(group.order(), m), section[g]), g};
}

Element extension_mul(const IntRep& rep, const std::vector<std::vector<Vec>>& f, const Element& x,
                      const Element& y) {
  return Element{add(add(x.v, rep.act(x.g, y.v)), f[x.g][y.g]), rep.group().mul(x.g, y.g)};
}

EmbeddedExtension embed_extension(const IntRep& rep, const std::vector<std::vector<Vec>>& f, const HullOptions& hopt) {
  const auto& g = rep.group();
  const int n = g.order();
  const std::size_t h = rep.dim();
  if (static_cast<int>(f.size()) != n) throw Error(ErrorKind::InvalidInput, "factor set needs |G| rows");
  for (const auto& row : f) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::InvalidInput, "factor set needs |G| columns");
    for (const auto& v : row)
      if (v.size() != h) throw Error(ErrorKind::DimensionMismatch, "factor set vector length");
  }
  for (int a = 0; a < n; ++a)
    if (!is_zero(f[0][a]) || !is_zero(f[a][0])) throw Error(ErrorKind::NotACocycle, "factor set is not normalized");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Vec lhs = add(f[a][b], f[g.mul(a, b)][c]);
        Vec rhs = add(rep.act(a, f[b][c]), f[a][g.mul(b, c)]);
        if (lhs != rhs)
          throw Error(ErrorKind::NotACocycle, "cocycle identity fails at (" + std::to_string(a) + "," +
                                                  std::to_string(b) + "," + std::to_string(c) + ")");
      }
  // unknowns c(1..n-1) stacked; equations c(a) + rho(a) c(b) - c(ab) = |G| f(a,b)
  const std::size_t unknowns = static_cast<std::size_t>(n - 1) * h;
  const std::size_t eqs = static_cast<std::size_t>(n) * n * h;
  IntMat a(eqs, unknowns);
  Vec rhs(eqs, Int(0));
  const Int order = n;
  auto put = [&](std::size_t row, int elem, const IntMat& m, int sign) {
    if (elem == 0) return;
    const std::size_t off = static_cast<std::size_t>(elem - 1) * h;
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < h; ++j) a(row + i, off + j) += sign * m(i, j);
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const std::size_t row = (static_cast<std::size_t>(x) * n + y) * h;
      put(row, x, IntMat::identity(h), 1);
      put(row, y, rep.mat(x), 1);
      put(row, g.mul(x, y), IntMat::identity(h), -1);
      for (std::size_t i = 0; i < h; ++i) rhs[row + i] = order * f[x][y][i];
    }
  auto sol = solve_integer(a, rhs);
  if (!sol) throw Error(ErrorKind::NoIntegerSolution, "no section change trivializes |G| f");
  std::vector<Vec> c(n, zero_vec(h));
  for (int x = 1; x < n; ++x)
    for (std::size_t i = 0; i < h; ++i) c[x][i] = (*sol)[(x - 1) * h + i];
  EmbeddedExtension out{VirtAbGroup(rep, c, hopt), c};
  // the map (m, g) -> (|G| m + c(g), g) is a homomorphism on generators of the extension
  std::vector<Element> ext_gens;
  for (int x = 0; x < n; ++x) ext_gens.push_back(Element{zero_vec(h), x});
  for (std::size_t j = 0; j < h; ++j) {
    Vec e = zero_vec(h);
    e[j] = 1;
    ext_gens.push_back(Element{e, 0});
  }
  for (const auto& s : ext_gens)
    for (const auto& t : ext_gens) {
      Element st = extension_mul(rep, f, s, t);
      if (!(out.group.mul(out.image(s.v, s.g), out.image(t.v, t.g)) == out.image(st.v, st.g)))
        throw Error(ErrorKind::Internal, "embedding is not multiplicative");
    }
  return out;
}

}  // namespace csep
