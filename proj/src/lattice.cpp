#include "csep/lattice.hpp"

#include "csep/error.hpp"

#include <algorithm>

namespace csep {

namespace {

void swap_rows(IntMat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// row_dst -= q * row_src
void sub_row(IntMat& m, std::size_t dst, std::size_t src, const Int& q, std::size_t from = 0) {
  if (sgn(q) == 0) return;
  for (std::size_t j = from; j < m.cols(); ++j)
    if (sgn(m(src, j)) != 0) m(dst, j) -= q * m(src, j);
}

void check_ambient(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorKind::DimensionMismatch, "ambient dimensions differ");
}

}  // namespace

std::size_t echelonize(IntMat& m, std::size_t pivot_cols) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  std::vector<std::pair<std::size_t, std::size_t>> piv;
  Int g, s, t, a, b;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    // bring the smallest nonzero entry up, then clear the column below it
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (sgn(m(i, c)) != 0 && (best == rows || mpz_cmpabs(m(i, c).get_mpz_t(), m(best, c).get_mpz_t()) < 0)) best = i;
      if (best == rows) break;
      swap_rows(m, r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (sgn(m(i, c)) == 0) continue;
        if (mpz_divisible_p(m(i, c).get_mpz_t(), m(r, c).get_mpz_t())) {
          Int q = m(i, c) / m(r, c);
          sub_row(m, i, r, q, c);
          continue;
        }
        a = m(r, c);
        b = m(i, c);
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        Int ag = a / g, bg = b / g;
        for (std::size_t j = c; j < cols; ++j) {
          Int x = m(r, j), y = m(i, j);
          m(r, j) = s * x + t * y;
          m(i, j) = ag * y - bg * x;
        }
        done = false;
      }
      if (done) break;
    }
    if (r < rows && sgn(m(r, c)) != 0) {
      if (sgn(m(r, c)) < 0)
        for (std::size_t j = c; j < cols; ++j) m(r, j) = -m(r, j);
      piv.emplace_back(r, c);
      ++r;
    }
  }
  for (auto [k, c] : piv)
    for (std::size_t i = 0; i < k; ++i) {
      Int q = floor_div(m(i, c), m(k, c));
      sub_row(m, i, k, q, c);
    }
  return r;
}

Lattice lattice_from_echelon(IntMat&& m, std::size_t ambient) {
  std::size_t r = echelonize(m, m.cols());
  Lattice l(ambient);
  IntMat b(r, ambient);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < ambient; ++j) b(i, j) = std::move(m(i, j));
  l.basis_ = std::move(b);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t p = 0;
    while (sgn(l.basis_(i, p)) == 0) ++p;
    l.pivots_.push_back(p);
  }
  return l;
}

Lattice Lattice::full(std::size_t n) { return scaled_full(n, 1); }

Lattice Lattice::scaled_full(std::size_t n, const Int& c) {
  if (sgn(c) == 0) return Lattice(n);
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = abs(c);
  return row_lattice(m);
}

Vec Lattice::reduce(std::span<const Int> v) const {
  check_ambient(v.size(), ambient_);
  Vec r(v.begin(), v.end());
  for (std::size_t k = 0; k < rank(); ++k) {
    const std::size_t p = pivots_[k];
    Int q = floor_div(r[p], basis_(k, p));
    if (sgn(q) == 0) continue;
    for (std::size_t j = p; j < ambient_; ++j) r[j] -= q * basis_(k, j);
  }
  return r;
}

std::optional<Vec> Lattice::coords(std::span<const Int> v) const {
  check_ambient(v.size(), ambient_);
  Vec r(v.begin(), v.end());
  Vec y(rank());
  std::size_t k = 0;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (k < rank() && pivots_[k] == j) {
      if (!mpz_divisible_p(r[j].get_mpz_t(), basis_(k, j).get_mpz_t())) return std::nullopt;
      y[k] = r[j] / basis_(k, j);
      if (sgn(y[k]) != 0)
        for (std::size_t t = j; t < ambient_; ++t) r[t] -= y[k] * basis_(k, t);
      ++k;
    } else if (sgn(r[j]) != 0) {
      return std::nullopt;
    }
  }
  return y;
}

bool Lattice::contains(std::span<const Int> v) const { return coords(v).has_value(); }

bool Lattice::contains(const Lattice& other) const {
  check_ambient(other.ambient_, ambient_);
  for (std::size_t i = 0; i < other.rank(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Lattice Lattice::scaled(const Int& c) const {
  if (sgn(c) == 0) return Lattice(ambient_);
  return row_lattice(abs(c) * basis_);
}

std::size_t LatticeHash::operator()(const Lattice& l) const noexcept {
  return VecHash{}(l.basis().data()) ^ (l.ambient() * 0x9e3779b97f4a7c15ULL);
}

RatLattice RatLattice::make(Lattice num, Int den) {
  if (sgn(den) <= 0) throw Error(ErrorKind::InvalidInput, "denominator must be positive");
  Int g = gcd(gcd_of(num.basis().data()), den);
  if (g > 1) {
    IntMat b = num.basis();
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) /= g;
    num = row_lattice(b);
    den /= g;
  }
  return RatLattice{std::move(num), std::move(den)};
}

std::vector<Rat> RatLattice::basis_vector(std::size_t i) const {
  std::vector<Rat> v(num.ambient());
  for (std::size_t j = 0; j < v.size(); ++j) {
    v[j] = Rat(num.basis()(i, j), den);
    v[j].canonicalize();
  }
  return v;
}

Lattice hnf_basis(const std::vector<Vec>& generators, std::size_t ambient) {
  IntMat m(generators.size(), ambient);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != ambient) throw Error(ErrorKind::DimensionMismatch, "generator length");
    m.set_row(i, generators[i]);
  }
  return lattice_from_echelon(std::move(m), ambient);
}

Lattice row_lattice(const IntMat& m) {
  IntMat c = m;
  return lattice_from_echelon(std::move(c), m.cols());
}

Lattice image(const IntMat& m) { return row_lattice(m.transpose()); }

InvariantFactors snf(const IntMat& m) {
  IntMat a = m;
  for (;;) {
    std::size_t r = echelonize(a, a.cols());
    IntMat b(r, a.cols());
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) b(i, j) = a(i, j);
    a = b.transpose();
    bool diag = true;
    for (std::size_t i = 0; i < a.rows() && diag; ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (i != j && sgn(a(i, j)) != 0) {
          diag = false;
          break;
        }
    if (diag) break;
  }
  InvariantFactors d;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
    if (sgn(a(i, i)) != 0) d.push_back(abs(a(i, i)));
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Int g = gcd(d[i], d[j]);
      Int l = lcm(d[i], d[j]);
      d[i] = g;
      d[j] = l;
    }
  return d;
}

bool member(const Lattice& l, std::span<const Int> v) { return l.contains(v); }

Lattice sum(const Lattice& a, const Lattice& b) {
  check_ambient(a.ambient(), b.ambient());
  return row_lattice(IntMat::vconcat(a.basis(), b.basis()));
}

Lattice left_kernel(const IntMat& m) {
  const std::size_t n = m.rows();
  IntMat aug = IntMat::hconcat(m, IntMat::identity(n));
  std::size_t r = echelonize(aug, m.cols());
  IntMat k(n - r, n);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k(i - r, j) = aug(i, m.cols() + j);
  return row_lattice(k);
}

Lattice kernel(const IntMat& m) { return left_kernel(m.transpose()); }

Lattice intersect(const Lattice& a, const Lattice& b) {
  check_ambient(a.ambient(), b.ambient());
  if (a.rank() == 0 || b.rank() == 0) return Lattice(a.ambient());
  Lattice k = left_kernel(IntMat::vconcat(a.basis(), b.basis()));
  IntMat y(k.rank(), a.rank());
  for (std::size_t i = 0; i < k.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) y(i, j) = k.basis()(i, j);
  return row_lattice(y * a.basis());
}

Lattice preimage(const IntMat& a, const Lattice& l) {
  check_ambient(a.rows(), l.ambient());
  const std::size_t n = a.cols();
  if (l.rank() == 0) return kernel(a);
  IntMat bt = l.basis().transpose();
  IntMat sys = IntMat::hconcat(a, Int(-1) * bt);
  Lattice k = kernel(sys);
  IntMat x(k.rank(), n);
  for (std::size_t i = 0; i < k.rank(); ++i)
    for (std::size_t j = 0; j < n; ++j) x(i, j) = k.basis()(i, j);
  return row_lattice(x);
}

Lattice radical(const Lattice& l) {
  if (l.rank() == 0) return l;
  if (l.is_full_rank()) return Lattice::full(l.ambient());
  Lattice k = kernel(l.basis());
  if (k.rank() == 0) return Lattice::full(l.ambient());
  return kernel(k.basis());
}

std::optional<Int> index(const Lattice& sub, const Lattice& sup) {
  check_ambient(sub.ambient(), sup.ambient());
  if (!sup.contains(sub)) throw Error(ErrorKind::NotASublattice, "index of a non-sublattice");
  if (sub.rank() < sup.rank()) return std::nullopt;
  IntMat c(sub.rank(), sup.rank());
  for (std::size_t i = 0; i < sub.rank(); ++i) c.set_row(i, *sup.coords(sub.basis().row(i)));
  return abs(c.det());
}

std::optional<Vec> solve_integer(const IntMat& a, std::span<const Int> b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
  const std::size_t m = a.rows(), n = a.cols();
  // U a^T = E with E echelon; a x = b becomes E^T y = b with x = U^T y
  IntMat aug = IntMat::hconcat(a.transpose(), IntMat::identity(n));
  std::size_t r = echelonize(aug, m);
  Vec res(b.begin(), b.end());
  Vec x = zero_vec(n);
  std::size_t k = 0;
  for (std::size_t c = 0; c < m; ++c) {
    if (k < r && sgn(aug(k, c)) != 0) {
      if (!mpz_divisible_p(res[c].get_mpz_t(), aug(k, c).get_mpz_t())) return std::nullopt;
      Int y = res[c] / aug(k, c);
      if (sgn(y) != 0) {
        for (std::size_t t = c; t < m; ++t) res[t] -= y * aug(k, t);
        for (std::size_t j = 0; j < n; ++j) x[j] += y * aug(k, m + j);
      }
      ++k;
    } else if (sgn(res[c]) != 0) {
      return std::nullopt;
    }
  }
  return x;
}

std::vector<Vec> coset_residues(const Lattice& l, std::span<const Int> offset, const Lattice& modulus,
                                std::size_t cap) {
  check_ambient(l.ambient(), modulus.ambient());
  check_ambient(offset.size(), modulus.ambient());
  if (!modulus.is_full_rank()) throw Error(ErrorKind::RankDeficient, "modulus must have full rank");
  const std::size_t n = modulus.ambient();
  Lattice s = sum(l, modulus);
  std::vector<Int> bound(n);
  Int total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    bound[i] = modulus.basis()(i, i) / s.basis()(i, i);
    total *= bound[i];
  }
  if (total > cap) throw Error(ErrorKind::BudgetExceeded, "too many coset residues");
  std::vector<Vec> out;
  std::vector<Int> c(n, Int(0));
  for (;;) {
    Vec v(offset.begin(), offset.end());
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(c[i]) != 0)
        for (std::size_t j = i; j < n; ++j) v[j] += c[i] * s.basis()(i, j);
    out.push_back(modulus.reduce(v));
    std::size_t i = 0;
    while (i < n) {
      if (++c[i] < bound[i]) break;
      c[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void divisor_splits(std::size_t n, const Int& k, std::vector<Int>& cur, std::vector<std::vector<Int>>& out) {
  if (cur.size() + 1 == n) {
    cur.push_back(k);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (Int d = 1; d <= k; ++d)
    if (mpz_divisible_p(k.get_mpz_t(), d.get_mpz_t())) {
      cur.push_back(d);
      divisor_splits(n, k / d, cur, out);
      cur.pop_back();
    }
}

}  // namespace

Int count_sublattices(std::size_t n, const Int& k) {
  if (n == 0) return k == 1 ? 1 : 0;
  std::vector<std::vector<Int>> shapes;
  std::vector<Int> cur;
  divisor_splits(n, k, cur, shapes);
  Int total = 0;
  for (const auto& d : shapes) {
    Int c = 1;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i) c *= d[j];
    total += c;
  }
  return total;
}

std::vector<Lattice> enumerate_sublattices(const Lattice& l, const Int& max_index,
                                           const std::function<bool(const Lattice&)>& filter,
                                           const SublatticeOptions& opt) {
  if (!l.is_full_rank()) throw Error(ErrorKind::RankDeficient, "enumeration needs a full-rank lattice");
  if (max_index < 1) throw Error(ErrorKind::InvalidInput, "max_index must be positive");
  const std::size_t n = l.ambient();
  std::vector<Lattice> out;
  std::size_t visited = 0;
  for (Int k = 1; k <= max_index; ++k) {
    std::vector<std::vector<Int>> shapes;
    std::vector<Int> cur;
    divisor_splits(n, k, cur, shapes);
    for (const auto& d : shapes) {
      // free entries (i,j), i<j, range [0, d_j)
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) free.emplace_back(i, j);
      IntMat h(n, n);
      for (std::size_t i = 0; i < n; ++i) h(i, i) = d[i];
      for (;;) {
        if (++visited > opt.cap) throw Error(ErrorKind::BudgetExceeded, "sublattice enumeration cap reached");
        Lattice cand = row_lattice(h * l.basis());
        if (!filter || filter(cand)) out.push_back(std::move(cand));
        std::size_t t = free.size();
        while (t > 0) {
          auto [i, j] = free[t - 1];
          if (++h(i, j) < d[j]) break;
          h(i, j) = 0;
          --t;
        }
        if (t == 0) break;
      }
    }
  }
  return out;
}

}  // namespace csep
