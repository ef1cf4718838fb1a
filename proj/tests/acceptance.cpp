// Acceptance runner: one PASS/FAIL line per criterion.

#include "checks.hpp"
#include "csep/error.hpp"
#include "csep/examples.hpp"
#include "csep/growth.hpp"
#include "csep/lattice.hpp"
#include "csep/separability.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

using namespace csep;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

VirtAbGroup split(const std::string& name) { return VirtAbGroup::new_split(example_rep(name)); }

Lattice span(std::initializer_list<std::initializer_list<long>> rows, std::size_t n) {
  std::vector<Vec> g;
  for (auto r : rows) g.push_back(make_vec(r));
  return hnf_basis(g, n);
}

std::size_t component_on_axis(const VirtAbGroup& grp, std::size_t j) {
  Vec e = zero_vec(grp.dim());
  e[j] = 1;
  Lattice want = hnf_basis({e}, grp.dim());
  for (std::size_t i = 0; i < grp.hull().size(); ++i) {
    const auto& c = grp.hull().components[i];
    if (c.lattice.den == 1 && c.lattice.num == want) return i;
  }
  return grp.hull().size();
}

Outcome c1() {
  auto hull = square_hull(example_rep("swap"));
  std::set<std::pair<Lattice, Int>> got, want{{span({{1, 1}}, 2), 2}, {span({{1, -1}}, 2), 2}};
  for (const auto& c : hull.components) got.insert({c.lattice.num, c.lattice.den});
  return {got == want, std::to_string(hull.size()) + " components, halves of (1,1) and (1,-1)"};
}

Outcome c2() {
  auto grp = split("diag3");
  std::set<Lattice> got, want{span({{1, 0, 0}}, 3), span({{0, 1, 0}}, 3), span({{0, 0, 1}}, 3)};
  bool ok = grp.hull().size() == 3;
  for (const auto& c : grp.hull().components) {
    ok = ok && c.lattice.den == 1 && c.d == 1;
    got.insert(c.lattice.num);
  }
  ok = ok && got == want && naive_upper_bound(grp) == 3;
  return {ok, "d=(1,1,1), naive " + std::to_string(naive_upper_bound(grp))};
}

Outcome c3() {
  auto grp = split("six-dim");
  const int g = 5, e = 0, g2g3 = 3;
  Vec k1 = scale(grp.order(), make_vec({1, 0, 0, 0, 0, 0})), k2 = scale(grp.order(), make_vec({0, 1, 0, 0, 0, 0}));
  auto idx = index(grp.w(g), Lattice::full(6));
  bool at_e = strongly_unsolvable(grp, g, e, k1, k2), at_h = strongly_unsolvable(grp, g, g2g3, k1, k2);
  bool ok = idx && *idx == 4 && grp.v_lat(g) == Lattice::full(6) && at_e && !at_h;
  std::ostringstream os;
  os << "[M:W_g]=" << (idx ? idx->get_str() : "inf") << ", V_g=M " << (grp.v_lat(g) == Lattice::full(6))
     << ", strong at e " << at_e << ", at g2g3 " << at_h;
  return {ok, os.str()};
}

Outcome c4() {
  auto grp = split("diag3");
  Vec v1 = make_vec({1, 1, 1}), v2 = make_vec({-1, -1, -1});
  // rows (0,0), (0,1), (1,0), (1,1); columns coordinates 1..3
  const char* want[4] = {"uuu", "uvv", "vuv", "vvu"};
  int good = 0;
  std::string table;
  for (int h = 0; h < 4; ++h) {
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t i = component_on_axis(grp, j);
      char c = i < grp.hull().size() && vanishes(grp, 0, i, h, v1, v2) ? 'v' : 'u';
      table += c;
      good += c == want[h][j];
    }
    table += h < 3 ? "/" : "";
  }
  return {good == 12, std::to_string(good) + "/12 cells: " + table};
}

Outcome c5() {
  struct Want {
    const char* name;
    std::size_t k;
    std::size_t naive;
  };
  bool ok = true;
  std::ostringstream os;
  for (auto w : {Want{"diag3", 3, 3}, Want{"h0h0", 1, 2}, Want{"dihedral-line", 1, 1}}) {
    auto grp = split(w.name);
    auto c = k3_exponent(grp);
    bool wit = c.witness && min_admitting_dim(grp, *c.witness) == c.k;
    ok = ok && c.k == w.k && c.naive == w.naive && c.complete && c.unreached == 0 && wit;
    os << w.name << " k=" << c.k << " naive=" << c.naive << " unreached=" << c.unreached << "; ";
  }
  return {ok, os.str()};
}

Outcome c6() {
  auto grp = split("diag3");
  Tuple t{0, make_vec({1, 1, 1}), make_vec({-1, -1, -1}), zero_vec(3), zero_vec(3)};
  std::size_t k = min_admitting_dim(grp, t);
  bool proper = true;
  for (ComponentSet s = 0; s < 7; ++s) proper = proper && !admits(grp, s, t);
  return {k == 3 && proper && admits(grp, 7, t), "min dim " + std::to_string(k) + ", proper subsets admit: " + (proper ? "none" : "some")};
}

Outcome c7() {
  long disagree = 0, pairs = 0;
  std::ostringstream os;
  for (const auto& name : example_names()) {
    auto grp = split(name);
    auto s = checks::to_semi(grp);
    std::vector<oracle::Semi::El> xs;
    for (const auto& [e, n] : s.ball(3)) xs.push_back(e);
    std::unordered_map<oracle::Semi::El, std::size_t, oracle::Semi::Hash> where;
    for (std::size_t i = 0; i < xs.size(); ++i) where[xs[i]] = i;
    std::vector<std::pair<oracle::Semi::El, oracle::Semi::El>> conjugators;
    for (const auto& [a, n] : s.ball(6)) conjugators.push_back({a, s.inv(a)});
    std::vector<std::vector<bool>> found(xs.size(), std::vector<bool>(xs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (const auto& [a, ai] : conjugators) {
        auto it = where.find(s.mul(s.mul(a, xs[i]), ai));
        if (it != where.end()) found[i][it->second] = true;
      }
    long bad = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < xs.size(); ++j) {
        auto x = checks::from_oracle(xs[i]), y = checks::from_oracle(xs[j]);
        auto ans = grp.is_conjugate(x, y);
        bool ok = ans.conjugate == found[i][j];
        if (ok && ans.conjugate) ok = grp.conj(*ans.witness, x) == y;
        bad += !ok;
        ++pairs;
      }
    disagree += bad;
    os << name << ":" << bad << " ";
  }
  return {disagree == 0, std::to_string(pairs) + " pairs, disagreements " + os.str()};
}

Outcome c8() {
  long failures = 0, checked = 0;
  auto expect = [&](bool ok) {
    ++checked;
    failures += !ok;
  };
  auto canon = [&](const Lattice& l, std::size_t n) {
    expect(hnf_basis(l.basis().row_list(), n) == l);
    Lattice r = radical(l);
    expect(radical(r) == r && r.rank() == l.rank() && r.contains(l));
  };
  for (long a = -3; a <= 3; ++a) {
    auto l = hnf_basis({make_vec({a})}, 1);
    canon(l, 1);
    for (long v = -3; v <= 3; ++v) expect(l.contains(make_vec({v})) == oracle::in_span_enum({{a}}, {v}, 3));
  }
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c)
        for (long d = -3; d <= 3; ++d) {
          auto l = hnf_basis({make_vec({a, b}), make_vec({c, d})}, 2);
          canon(l, 2);
          expect(hnf_basis({make_vec({a + c, b + d}), make_vec({c, d}), make_vec({2 * a, 2 * b})}, 2) == l);
          auto members = oracle::span_members_in_box({{{a, b}, {c, d}}}, 3, 20);
          for (long x = -3; x <= 3; ++x)
            for (long y = -3; y <= 3; ++y) expect(l.contains(make_vec({x, y})) == (members.count({x, y}) == 1));
        }
  // ambient 3: every pair of generators with entries in [-3,3], members of the box [-3,3]^3
  for (long a0 = -3; a0 <= 3; ++a0)
    for (long a1 = -3; a1 <= 3; ++a1)
      for (long a2 = -3; a2 <= 3; ++a2)
        for (long b0 = -3; b0 <= 3; ++b0)
          for (long b1 = -3; b1 <= 3; ++b1)
            for (long b2 = -3; b2 <= 3; ++b2) {
              auto l = hnf_basis({make_vec({a0, a1, a2}), make_vec({b0, b1, b2})}, 3);
              canon(l, 3);
              std::set<std::array<long, 3>> members;
              for (long s = -20; s <= 20; ++s)
                for (long t = -20; t <= 20; ++t) {
                  std::array<long, 3> v{s * a0 + t * b0, s * a1 + t * b1, s * a2 + t * b2};
                  if (std::labs(v[0]) <= 3 && std::labs(v[1]) <= 3 && std::labs(v[2]) <= 3) members.insert(v);
                }
              for (long x = -3; x <= 3; ++x)
                for (long y = -3; y <= 3; ++y)
                  for (long z = -3; z <= 3; ++z) expect(l.contains(make_vec({x, y, z})) == (members.count({x, y, z}) == 1));
            }
  // full-rank triples against the residue oracle
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> e(-3, 3);
  for (int tested = 0; tested < 400;) {
    std::array<std::array<long, 3>, 3> g;
    for (auto& r : g)
      for (auto& x : r) x = e(rng);
    auto res = oracle::residues_of_basis(g);
    if (!res) continue;
    ++tested;
    auto l = hnf_basis({make_vec({g[0][0], g[0][1], g[0][2]}), make_vec({g[1][0], g[1][1], g[1][2]}),
                        make_vec({g[2][0], g[2][1], g[2][2]})},
                       3);
    canon(l, 3);
    for (long x = -3; x <= 3; ++x)
      for (long y = -3; y <= 3; ++y)
        for (long z = -3; z <= 3; ++z) expect(l.contains(make_vec({x, y, z})) == res->contains({x, y, z}));
  }
  const long counts[] = {1, 3, 4, 7, 6, 12};
  auto all = enumerate_sublattices(Lattice::full(2), 6);
  for (long k = 1; k <= 6; ++k) {
    long got = 0;
    for (const auto& s : all) got += *index(s, Lattice::full(2)) == k;
    expect(got == counts[k - 1] && got == oracle::count_index_k_subgroups_z2(k) && count_sublattices(2, k) == got);
  }
  expect(all.size() == 33);
  return {failures == 0, std::to_string(checked) + " checks, " + std::to_string(failures) + " failures"};
}

Outcome c9() {
  checks::Tally t;
  for (const auto& name : example_names()) {
    auto rep = example_rep(name);
    checks::representation_properties(rep, square_hull(rep), t);
  }
  return {t.failed == 0 && t.checked > 0,
          std::to_string(t.checked) + " checks, " + std::to_string(t.failed) + " failures" +
              (t.failed ? " (first: " + t.first_failure + ")" : "")};
}

Outcome c10() {
  auto grp = split("diag3");
  Tuple t{0, make_vec({1, 1, 1}), make_vec({-1, -1, -1}), zero_vec(3), zero_vec(3)};
  auto rows = probe_lower_bound(grp, t, 3, 100000, 3);
  bool ok = true;
  std::ostringstream os;
  os << "indices";
  for (const auto& r : rows) {
    os << " " << (r.index ? r.index->get_str() : r.conjugate ? "conj" : "none");
    ok = ok && r.index && r.complete;
  }
  for (std::size_t a = 0; ok && a < rows.size(); ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      const Int &x = *rows[a].index, &y = *rows[b].index;
      Int ja = rows[a].j, jb = rows[b].j;
      // y/x >= (jb/ja)^3 / 2
      ok = ok && y > x && 2 * y * ja * ja * ja >= x * jb * jb * jb;
    }
  return {ok, os.str()};
}

Outcome c11() {
  auto triv = IntRep::trivial(FiniteGroup::abelian({2}), 1);
  std::vector<std::vector<Vec>> f(2, std::vector<Vec>(2, make_vec({0})));
  auto split_ext = embed_extension(triv, f);
  auto model = VirtAbGroup::new_split(triv);
  bool split_ok = split_ext.group.cocycle() == model.cocycle() && split_ext.group.gens() == model.gens();
  f[1][1] = make_vec({1});
  auto ext = embed_extension(triv, f);
  const auto& h = ext.group;
  std::vector<Element> gens{{make_vec({0}), 1}, {make_vec({1}), 0}, {make_vec({-1}), 0}};
  bool hom = true;
  for (const auto& a : gens) {
    hom = hom && h.contains(ext.image(a.v, a.g));
    for (const auto& b : gens) {
      Element ab = extension_mul(triv, f, a, b);
      hom = hom && h.mul(ext.image(a.v, a.g), ext.image(b.v, b.g)) == ext.image(ab.v, ab.g);
    }
  }
  // t^2 = (1, e): the image of t generates an infinite cyclic group containing the image of Z
  Element t = ext.image(make_vec({0}), 1);
  bool rel = h.mul(t, t) == ext.image(make_vec({1}), 0);
  // the image map is injective on a box of the extension
  std::set<Element> seen;
  for (long m = -10; m <= 10; ++m)
    for (int g = 0; g < 2; ++g) seen.insert(ext.image(make_vec({m}), g));
  bool inj = seen.size() == 42;
  return {split_ok && hom && rel && inj, std::string("split model ") + (split_ok ? "exact" : "differs") + ", relations " +
                                             (hom && rel ? "hold" : "fail") + ", injective " + (inj ? "yes" : "no")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit;  // seconds, 0 for none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {{1, 1, c1},   {2, 1, c2},   {3, 5, c3}, {4, 1, c4}, {5, 600, c5}, {6, 1, c6},
                                      {7, 0, c7},   {8, 0, c8},   {9, 0, c9}, {10, 1800, c10}, {11, 0, c11}};
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = c.limit == 0 || secs < c.limit;
    bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("%s %d %.3fs%s %s\n", pass ? "PASS" : "FAIL", c.id, secs,
                c.limit > 0 ? (" (limit " + std::to_string(static_cast<int>(c.limit)) + "s)").c_str() : "",
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
