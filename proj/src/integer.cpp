#include "csep/integer.hpp"

#include "csep/error.hpp"

#include <sstream>

namespace csep {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::NotASublattice: return "not-a-sublattice";
    case ErrorKind::RankDeficient: return "rank-deficient";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::NotAssociative: return "not-associative";
    case ErrorKind::NoIdentity: return "no-identity";
    case ErrorKind::MissingInverse: return "missing-inverse";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::NonUnimodular: return "non-unimodular";
    case ErrorKind::NotAHomomorphism: return "not-a-homomorphism";
    case ErrorKind::NotClassConstant: return "not-class-constant";
    case ErrorKind::SplittingPrimeFailure: return "splitting-prime-failure";
    case ErrorKind::SearchBoundExceeded: return "search-bound-exceeded";
    case ErrorKind::PrimeDividesOrder: return "prime-divides-order";
    case ErrorKind::LiftOutOfRange: return "lift-out-of-range";
    case ErrorKind::CocycleNotClosed: return "cocycle-not-closed";
    case ErrorKind::NotACocycle: return "not-a-cocycle";
    case ErrorKind::NoIntegerSolution: return "no-integer-solution";
    case ErrorKind::NonMember: return "non-member";
    case ErrorKind::NotInCentralizer: return "not-in-centralizer";
    case ErrorKind::NotInvariant: return "not-invariant";
    case ErrorKind::InputsConjugate: return "inputs-conjugate";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

static void check_len(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorKind::DimensionMismatch, "vector lengths differ");
}

Vec add(std::span<const Int> a, std::span<const Int> b) {
  check_len(a.size(), b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(std::span<const Int> a, std::span<const Int> b) {
  check_len(a.size(), b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Int& c, std::span<const Int> a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Vec neg(std::span<const Int> a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int floor_mod(const Int& a, const Int& b) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int gcd_of(std::span<const Int> v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

Int lcm_range(unsigned n) {
  Int l = 1;
  for (unsigned i = 2; i <= n; ++i) l = lcm(l, Int(i));
  return l;
}

std::string to_string(std::span<const Int> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::size_t VecHash::operator()(const Vec& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& x : v) {
    const mpz_srcptr z = x.get_mpz_t();
    std::size_t e = static_cast<std::size_t>(z->_mp_size);
    int n = z->_mp_size < 0 ? -z->_mp_size : z->_mp_size;
    for (int i = 0; i < n; ++i) e = e * 0x9e3779b97f4a7c15ULL + z->_mp_d[i];
    h = (h ^ e) * 0x100000001b3ULL;
  }
  return h;
}

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  IntMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

IntMat IntMat::diagonal(std::span<const Int> d) {
  IntMat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Vec IntMat::row(std::size_t i) const {
  return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vec IntMat::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<Vec> IntMat::row_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

void IntMat::set_row(std::size_t i, std::span<const Int> v) {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec IntMat::apply(std::span<const Int> v) const {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0) s += (*this)(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

Int IntMat::trace() const {
  Int t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Int IntMat::det() const {
  if (rows_ != cols_) throw Error(ErrorKind::DimensionMismatch, "det of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMat a = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(a(r, k)) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool IntMat::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  IntMat c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

IntMat operator+(const IntMat& a, const IntMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
  IntMat c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

IntMat operator-(const IntMat& a, const IntMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference");
  IntMat c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

IntMat operator*(const Int& s, const IntMat& a) {
  IntMat c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

IntMat IntMat::hconcat(const IntMat& a, const IntMat& b) {
  if (a.rows_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "hconcat");
  IntMat c(a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) c(i, a.cols_ + j) = b(i, j);
  }
  return c;
}

IntMat IntMat::vconcat(const IntMat& a, const IntMat& b) {
  if (a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "vconcat");
  IntMat c(a.rows_ + b.rows_, a.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) c(a.rows_ + i, j) = b(i, j);
  return c;
}

std::ostream& operator<<(std::ostream& os, const IntMat& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

RatMat::RatMat(const IntMat& m) : rows_(m.rows()), cols_(m.cols()), data_(m.rows() * m.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = m(i, j);
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "rational product");
  RatMat c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

RatMat operator+(const RatMat& a, const RatMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "rational sum");
  RatMat c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

RatMat operator*(const Rat& s, const RatMat& a) {
  RatMat c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

bool RatMat::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

Int RatMat::denominator() const {
  Int d = 1;
  for (const auto& x : data_) d = lcm(d, Int(x.get_den()));
  return d;
}

IntMat RatMat::scaled_to_int(const Int& den) const {
  IntMat m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      Rat x = (*this)(i, j) * den;
      if (x.get_den() != 1) throw Error(ErrorKind::Internal, "scaled rational matrix is not integral");
      m(i, j) = x.get_num();
    }
  return m;
}

}  // namespace csep
