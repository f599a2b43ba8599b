#pragma once

// Scalar types for exact computation.
//
// Rational and Integer are GMP-backed arbitrary precision numbers. ModP is
// arithmetic in the prime field F_P with P = 2^62 - 57, used for fast
// randomized rank estimation. All three plug into Eigen as matrix scalars.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace rigor {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using IntegerMatrix = Matrix<Integer>;

class ModP {
 public:
  static constexpr std::uint64_t kModulus = 4611686018427387847ULL;  // 2^62 - 57

  constexpr ModP() = default;
  constexpr ModP(int v) : value_(reduce_signed(v)) {}  // NOLINT(implicit)
  static constexpr ModP from_u64(std::uint64_t v) {
    ModP r;
    r.value_ = v % kModulus;
    return r;
  }
  static constexpr ModP from_i64(std::int64_t v) {
    ModP r;
    r.value_ = reduce_signed(v);
    return r;
  }
  static ModP from_integer(const Integer& v);
  // Throws std::domain_error when the denominator vanishes mod P.
  static ModP from_rational(const Rational& v);

  constexpr std::uint64_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  constexpr ModP& operator+=(ModP o) {
    value_ += o.value_;
    if (value_ >= kModulus) value_ -= kModulus;
    return *this;
  }
  constexpr ModP& operator-=(ModP o) {
    value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + kModulus - o.value_;
    return *this;
  }
  constexpr ModP& operator*=(ModP o) {
    value_ = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(value_) * o.value_) % kModulus);
    return *this;
  }
  ModP& operator/=(ModP o) { return *this *= o.inverse(); }

  friend constexpr ModP operator+(ModP a, ModP b) { return a += b; }
  friend constexpr ModP operator-(ModP a, ModP b) { return a -= b; }
  friend constexpr ModP operator*(ModP a, ModP b) { return a *= b; }
  friend ModP operator/(ModP a, ModP b) { return a /= b; }
  constexpr ModP operator-() const { return ModP{} - *this; }
  friend constexpr bool operator==(ModP a, ModP b) { return a.value_ == b.value_; }

  // Throws std::domain_error on zero.
  ModP inverse() const;

 private:
  static constexpr std::uint64_t reduce_signed(std::int64_t v) {
    std::int64_t m = v % static_cast<std::int64_t>(kModulus);
    return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(kModulus) : m);
  }
  std::uint64_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, ModP v);

// "num/den" or "num"; whitespace is not accepted. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
// Canonical "num/den" with den > 1, or "num" when integral.
std::string to_string(const Rational& v);

inline bool is_zero(const Rational& v) { return v.is_zero(); }
inline bool is_zero(const Integer& v) { return v.is_zero(); }
inline bool is_zero(ModP v) { return v.is_zero(); }

}  // namespace rigor

namespace Eigen {
template <>
struct NumTraits<rigor::ModP> : GenericNumTraits<rigor::ModP> {
  using Real = rigor::ModP;
  using NonInteger = rigor::ModP;
  using Nested = rigor::ModP;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline rigor::ModP epsilon() { return rigor::ModP{}; }
  static inline rigor::ModP dummy_precision() { return rigor::ModP{}; }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
