#include "csep/finite_group.hpp"

#include "csep/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace csep {

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<int>>& table, std::vector<int>* relabel) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::InvalidInput, "empty Cayley table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::InvalidInput, "Cayley table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw Error(ErrorKind::InvalidInput, "Cayley table entry out of range");
  }
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = table[i][j] == j && table[j][i] == j;
    if (ok) e = i;
  }
  if (e < 0) throw Error(ErrorKind::NoIdentity, "no two-sided identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorKind::NotAssociative, "(ab)c != a(bc) at a=" + std::to_string(a) + " b=" +
                                                     std::to_string(b) + " c=" + std::to_string(c));
  // swap labels e <-> 0
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[0], p[e]);
  FiniteGroup g;
  g.table_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table_[p[a]][p[b]] = p[table[a][b]];
  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.table_[a][b] == 0 && g.table_[b][a] == 0) g.inv_[a] = b;
  for (int a = 0; a < n; ++a)
    if (g.inv_[a] < 0) throw Error(ErrorKind::MissingInverse, "element " + std::to_string(a) + " has no inverse");
  if (relabel) *relabel = p;
  return g;
}

FiniteGroup FiniteGroup::abelian(const std::vector<int>& orders) {
  int n = 1;
  for (int o : orders) n *= o;
  auto digits = [&](int x) {
    std::vector<int> d(orders.size());
    for (int i = static_cast<int>(orders.size()) - 1; i >= 0; --i) {
      d[i] = x % orders[i];
      x /= orders[i];
    }
    return d;
  };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto da = digits(a), db = digits(b);
      int x = 0;
      for (std::size_t i = 0; i < orders.size(); ++i) x = x * orders[i] + (da[i] + db[i]) % orders[i];
      t[a][b] = x;
    }
  return from_cayley(t);
}

int FiniteGroup::power(int g, long k) const {
  int o = element_order(g);
  long e = ((k % o) + o) % o;
  int r = 0;
  for (long i = 0; i < e; ++i) r = mul(r, g);
  return r;
}

int FiniteGroup::element_order(int g) const {
  int k = 1;
  for (int x = g; x != 0; x = mul(x, g)) ++k;
  return k;
}

int FiniteGroup::exponent() const {
  long e = 1;
  for (int g = 0; g < order(); ++g) e = std::lcm(e, static_cast<long>(element_order(g)));
  return static_cast<int>(e);
}

std::vector<int> FiniteGroup::centralizer(int g) const {
  std::vector<int> c;
  for (int h = 0; h < order(); ++h)
    if (mul(g, h) == mul(h, g)) c.push_back(h);
  return c;
}

bool FiniteGroup::is_central(int g) const { return static_cast<int>(centralizer(g).size()) == order(); }

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  std::vector<int> seen(order(), 0);
  std::vector<std::vector<int>> out;
  for (int g = 0; g < order(); ++g) {
    if (seen[g]) continue;
    std::vector<int> cls;
    for (int a = 0; a < order(); ++a) {
      int x = conj(a, g);
      if (!seen[x]) {
        seen[x] = 1;
        cls.push_back(x);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<int> FiniteGroup::closure(const std::vector<int>& gens) const {
  std::vector<char> in(order(), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int s : gens) {
      int x = mul(elems[i], s);
      if (!in[x]) {
        in[x] = 1;
        elems.push_back(x);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> FiniteGroup::generators() const {
  std::vector<int> gens;
  std::vector<int> sub{0};
  while (static_cast<int>(sub.size()) < order()) {
    int x = 0;
    while (std::binary_search(sub.begin(), sub.end(), x)) ++x;
    gens.push_back(x);
    sub = closure(gens);
  }
  return gens;
}

MatrixGroup from_matrix_generators(const std::vector<IntMat>& gens, int cap) {
  if (gens.empty()) throw Error(ErrorKind::InvalidInput, "no generators");
  const std::size_t n = gens[0].rows();
  for (const auto& g : gens) {
    if (g.rows() != n || g.cols() != n) throw Error(ErrorKind::DimensionMismatch, "generator size");
  }
  std::vector<IntMat> elems{IntMat::identity(n)};
  std::map<IntMat, int> index{{elems[0], 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& s : gens) {
      IntMat x = elems[i] * s;
      if (index.count(x)) continue;
      if (static_cast<int>(elems.size()) >= cap)
        throw Error(ErrorKind::CapExceeded, "matrix group closure exceeds cap " + std::to_string(cap));
      index.emplace(x, static_cast<int>(elems.size()));
      elems.push_back(std::move(x));
    }
  // checked after the closure so that an infinite-order generator reports the cap
  for (const auto& g : gens) {
    Int d = g.det();
    if (d != 1 && d != -1) throw Error(ErrorKind::NonUnimodular, "generator determinant is not +-1");
  }
  const int m = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      auto it = index.find(elems[a] * elems[b]);
      if (it == index.end()) throw Error(ErrorKind::Internal, "matrix closure not closed");
      t[a][b] = it->second;
    }
  return MatrixGroup{FiniteGroup::from_cayley(t), std::move(elems)};
}

}  // namespace csep
