#include "csep/modp.hpp"

#include "csep/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace csep {

namespace {

long md(long a, long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

// Row-reduce in place; returns pivot columns.
std::vector<std::size_t> rref(FpMat& m) {
  const long p = m.prime();
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t k = r;
    while (k < m.rows() && m(k, c) == 0) ++k;
    if (k == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(k, j));
    long iv = mod_inv(m(r, c), p);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) * iv % p;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      long f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = md(m(i, j) - f * m(r, j), p);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

long mod_pow(long b, long e, long p) {
  long r = 1 % p;
  b = md(b, p);
  while (e > 0) {
    if (e & 1) r = static_cast<long>(static_cast<__int128>(r) * b % p);
    b = static_cast<long>(static_cast<__int128>(b) * b % p);
    e >>= 1;
  }
  return r;
}

long mod_inv(long a, long p) {
  Int r;
  Int aa = md(a, p), pp = p;
  if (mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), pp.get_mpz_t()) == 0)
    throw Error(ErrorKind::Internal, "non-invertible residue");
  return r.get_si();
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long find_prime(long a, long m, const Int& avoid, long min_size, long search_cap) {
  if (m <= 0) throw Error(ErrorKind::InvalidInput, "modulus must be positive");
  if (std::gcd(md(a, m), m) != 1) throw Error(ErrorKind::InvalidInput, "residue not coprime to modulus");
  if (sgn(avoid) == 0) throw Error(ErrorKind::InvalidInput, "avoid must be nonzero");
  long start = std::max(min_size, 2L);
  long p = start + md(a - start, m);
  for (; p <= search_cap; p += m) {
    if (!is_prime(p)) continue;
    if (mpz_divisible_ui_p(avoid.get_mpz_t(), static_cast<unsigned long>(p))) continue;
    return p;
  }
  throw Error(ErrorKind::SearchBoundExceeded, "no suitable prime below " + std::to_string(search_cap));
}

FpMat FpMat::identity(std::size_t n, long p) {
  FpMat m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % p;
  return m;
}

FpMat FpMat::reduce(const IntMat& a, long p) {
  FpMat m(a.rows(), a.cols(), p);
  Int pp = p;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = floor_mod(a(i, j), pp).get_si();
  return m;
}

FpMat operator*(const FpMat& a, const FpMat& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "F_p product");
  FpMat c(a.rows_, b.cols_, a.p_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      long x = a(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = (c(i, j) + x * b(k, j)) % a.p_;
    }
  return c;
}

FpMat operator+(const FpMat& a, const FpMat& b) {
  FpMat c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = (c.data_[i] + b.data_[i]) % a.p_;
  return c;
}

FpMat operator-(const FpMat& a, const FpMat& b) {
  FpMat c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = md(c.data_[i] - b.data_[i], a.p_);
  return c;
}

FpMat FpMat::scaled(long c) const {
  FpMat m = *this;
  c = md(c, p_);
  for (auto& x : m.data_) x = x * c % p_;
  return m;
}

FpMat FpMat::transpose() const {
  FpMat t(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

long FpMat::trace() const {
  long t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = (t + (*this)(i, i)) % p_;
  return t;
}

long FpMat::det() const {
  FpMat m = *this;
  long d = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t k = c;
    while (k < rows_ && m(k, c) == 0) ++k;
    if (k == rows_) return 0;
    if (k != c) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(c, j), m(k, j));
      d = md(-d, p_);
    }
    d = d * m(c, c) % p_;
    long iv = mod_inv(m(c, c), p_);
    for (std::size_t i = c + 1; i < rows_; ++i) {
      long f = m(i, c) * iv % p_;
      if (!f) continue;
      for (std::size_t j = c; j < cols_; ++j) m(i, j) = md(m(i, j) - f * m(c, j), p_);
    }
  }
  return d;
}

std::size_t FpMat::rank() const {
  FpMat m = *this;
  return rref(m).size();
}

bool FpMat::is_scalar() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((i == j && (*this)(i, j) != (*this)(0, 0)) || (i != j && (*this)(i, j) != 0)) return false;
  return true;
}

std::vector<std::vector<long>> FpMat::nullspace() const {
  FpMat m = *this;
  auto piv = rref(m);
  std::vector<char> is_piv(cols_, 0);
  for (auto c : piv) is_piv[c] = 1;
  std::vector<std::vector<long>> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_piv[f]) continue;
    std::vector<long> v(cols_, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = md(-m(r, f), p_);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<FpMat> FpMat::inverse() const {
  const std::size_t n = rows_;
  FpMat aug(n, 2 * n, p_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  FpMat inv(n, n, p_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

ModPRep reduce(const FiniteGroup& g, const std::vector<IntMat>& mats, long p) {
  if (g.order() % p == 0) throw Error(ErrorKind::PrimeDividesOrder, "p divides |G|");
  ModPRep r;
  r.p = p;
  r.dim = mats.empty() ? 0 : mats[0].rows();
  for (const auto& m : mats) r.mats.push_back(FpMat::reduce(m, p));
  return r;
}

namespace {

struct Piece {
  std::size_t dim;
  std::vector<long> chars;
};

std::vector<std::vector<long>> commutant_basis(const std::vector<FpMat>& gens, std::size_t d, long p) {
  FpMat sys(d * d * gens.size(), d * d, p);
  std::size_t row = 0;
  for (const auto& a : gens)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j, ++row) {
        // (X a - a X)_{ij} = sum_k X_{ik} a_{kj} - a_{ik} X_{kj}
        for (std::size_t k = 0; k < d; ++k) {
          sys(row, i * d + k) = md(sys(row, i * d + k) + a(k, j), p);
          sys(row, k * d + j) = md(sys(row, k * d + j) - a(i, k), p);
        }
      }
  return sys.nullspace();
}

void split_rec(const std::vector<FpMat>& mats, const std::vector<int>& gens, std::size_t d, long p,
               std::mt19937_64& rng, std::vector<Piece>& out) {
  std::vector<FpMat> gm;
  for (int s : gens) gm.push_back(mats[s]);
  auto basis = commutant_basis(gm, d, p);
  if (basis.size() == 1) {
    Piece pc{d, {}};
    for (const auto& m : mats) pc.chars.push_back(m.trace());
    out.push_back(std::move(pc));
    return;
  }
  std::uniform_int_distribution<long> coef(0, p - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    FpMat x(d, d, p);
    for (const auto& b : basis) {
      long c = coef(rng);
      for (std::size_t k = 0; k < d * d; ++k) x(k / d, k % d) = (x(k / d, k % d) + c * b[k]) % p;
    }
    if (x.is_scalar()) continue;
    for (long lam = 0; lam < p; ++lam) {
      FpMat y = x - FpMat::identity(d, p).scaled(lam);
      if (y.det() != 0) continue;
      auto u = y.nullspace();
      const std::size_t k = u.size();
      // extend the kernel basis by standard vectors to a basis of F_p^d
      FpMat pm(d, d, p);
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t r = 0; r < d; ++r) pm(r, c) = u[c][r];
      std::size_t c = k;
      for (std::size_t e = 0; e < d && c < d; ++e) {
        pm(e, c) = 1;
        FpMat probe(d, c + 1, p);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j <= c; ++j) probe(i, j) = pm(i, j);
        if (probe.rank() == c + 1)
          ++c;
        else
          pm(e, c) = 0;
      }
      auto pinv = pm.inverse();
      if (!pinv) throw Error(ErrorKind::Internal, "basis extension failed");
      std::vector<FpMat> sub, quo;
      for (const auto& m : mats) {
        FpMat t = *pinv * m * pm;
        FpMat a(k, k, p), b(d - k, d - k, p);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) {
            if (i < k && j < k) a(i, j) = t(i, j);
            else if (i >= k && j >= k) b(i - k, j - k) = t(i, j);
            else if (i >= k && j < k && t(i, j) != 0)
              throw Error(ErrorKind::Internal, "eigenspace of a commuting element is not invariant");
          }
        sub.push_back(std::move(a));
        quo.push_back(std::move(b));
      }
      split_rec(sub, gens, k, p, rng, out);
      split_rec(quo, gens, d - k, p, rng, out);
      return;
    }
  }
  throw Error(ErrorKind::SplittingPrimeFailure,
              "no commutant element with an eigenvalue in F_" + std::to_string(p) + " was found");
}

}  // namespace

std::vector<Constituent> split(const ModPRep& rep, const FiniteGroup& g, std::uint64_t seed) {
  if (g.order() % rep.p == 0) throw Error(ErrorKind::PrimeDividesOrder, "p divides |G|");
  std::vector<Piece> pieces;
  if (rep.dim > 0) {
    std::mt19937_64 rng(seed);
    split_rec(rep.mats, g.generators(), rep.dim, rep.p, rng, pieces);
  }
  std::map<std::pair<std::size_t, std::vector<long>>, int> count;
  for (const auto& pc : pieces) ++count[{pc.dim, pc.chars}];
  std::vector<Constituent> out;
  for (const auto& [key, m] : count) out.push_back(Constituent{key.first, m, key.second});
  std::size_t total = 0;
  for (const auto& c : out) total += c.dim * c.multiplicity;
  if (total != rep.dim) throw Error(ErrorKind::Internal, "constituent dimensions do not add up");
  return out;
}

std::vector<OrbitSum> galois_orbit_sums(const std::vector<Constituent>& cs, const FiniteGroup& g, long p) {
  const int n = g.order();
  const int e = g.exponent();
  std::vector<int> orbit_of(cs.size(), -1);
  std::vector<OrbitSum> out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (orbit_of[i] >= 0) continue;
    OrbitSum o;
    o.dim = cs[i].dim;
    std::vector<std::vector<long>> seen;
    for (int k = 1; k <= e; ++k) {
      if (std::gcd(k, e) != 1) continue;
      std::vector<long> phi(n);
      for (int x = 0; x < n; ++x) phi[x] = cs[i].chars[g.power(x, k)];
      if (std::find(seen.begin(), seen.end(), phi) != seen.end()) continue;
      seen.push_back(phi);
      std::size_t j = 0;
      while (j < cs.size() && !(cs[j].dim == cs[i].dim && cs[j].chars == phi)) ++j;
      if (j == cs.size()) continue;  // conjugate constituent absent from the module
      orbit_of[j] = static_cast<int>(out.size());
      o.members.push_back(static_cast<int>(j));
    }
    std::sort(o.members.begin(), o.members.end());
    const long bound = static_cast<long>(o.dim * seen.size());
    if (2 * bound >= p) throw Error(ErrorKind::LiftOutOfRange, "prime too small to lift orbit sums");
    for (int x = 0; x < n; ++x) {
      long s = 0;
      for (const auto& phi : seen) s = (s + phi[x]) % p;
      if (s > p / 2) s -= p;
      if (std::labs(s) > bound) throw Error(ErrorKind::LiftOutOfRange, "orbit sum exceeds the lifting range");
      o.values.emplace_back(s);
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace csep
