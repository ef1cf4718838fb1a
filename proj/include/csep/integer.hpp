#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace csep {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Int>;

inline Vec make_vec(std::initializer_list<long> xs) {
  Vec v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Int(0)); }

inline bool is_zero(std::span<const Int> v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vec add(std::span<const Int> a, std::span<const Int> b);
Vec sub(std::span<const Int> a, std::span<const Int> b);
Vec scale(const Int& c, std::span<const Int> a);
Vec neg(std::span<const Int> a);

/// Floor division (rounds toward negative infinity).
Int floor_div(const Int& a, const Int& b);
/// Remainder in [0, |b|).
Int floor_mod(const Int& a, const Int& b);

Int gcd_of(std::span<const Int> v);
Int lcm_range(unsigned n);  // lcm(1..n)

std::string to_string(std::span<const Int> v);

struct VecHash {
  std::size_t operator()(const Vec& v) const noexcept;
};

/// Dense integer matrix, row-major. Matrices act on column vectors.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMat(std::initializer_list<std::initializer_list<long>> rows);

  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static IntMat diagonal(std::span<const Int> d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  std::vector<Vec> row_list() const;
  void set_row(std::size_t i, std::span<const Int> v);

  IntMat transpose() const;
  Vec apply(std::span<const Int> v) const;  // this * v
  Int trace() const;
  Int det() const;  // Bareiss, square only
  bool is_zero() const;

  friend IntMat operator*(const IntMat& a, const IntMat& b);
  friend IntMat operator+(const IntMat& a, const IntMat& b);
  friend IntMat operator-(const IntMat& a, const IntMat& b);
  friend IntMat operator*(const Int& c, const IntMat& a);
  friend bool operator==(const IntMat& a, const IntMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(const IntMat& a, const IntMat& b) { return a.data_ < b.data_; }

  /// [a | b] side by side.
  static IntMat hconcat(const IntMat& a, const IntMat& b);
  /// a stacked over b.
  static IntMat vconcat(const IntMat& a, const IntMat& b);

  const std::vector<Int>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMat& m);

/// Exact rational matrix; used for projectors.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit RatMat(const IntMat& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend RatMat operator*(const RatMat& a, const RatMat& b);
  friend RatMat operator+(const RatMat& a, const RatMat& b);
  friend RatMat operator*(const Rat& c, const RatMat& a);
  friend bool operator==(const RatMat& a, const RatMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  bool is_zero() const;
  static RatMat identity(std::size_t n);

  /// Least common denominator of all entries.
  Int denominator() const;
  /// this * den, which must be integral.
  IntMat scaled_to_int(const Int& den) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

}  // namespace csep
