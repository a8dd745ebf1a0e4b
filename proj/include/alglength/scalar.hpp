#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "alglength/error.hpp"

namespace alglength {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// The ground field: either Q or GF(p) for a prime p < 2^32.
class FieldDescriptor {
public:
  enum class Kind { rational, prime };

  static FieldDescriptor rational() { return FieldDescriptor(Kind::rational, 0); }

  static FieldDescriptor prime(std::uint64_t p) {
    if (p < 2 || p > 0xFFFFFFFFull)
      throw FieldError("prime modulus out of range: " + std::to_string(p));
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0)
        throw FieldError("modulus is not prime: " + std::to_string(p));
    return FieldDescriptor(Kind::prime, static_cast<std::uint32_t>(p));
  }

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::rational; }
  bool is_prime() const noexcept { return kind_ == Kind::prime; }
  /// Modulus for prime fields, 0 for Q.
  std::uint32_t modulus() const noexcept { return p_; }

  std::string to_string() const {
    return is_rational() ? "rational" : "prime " + std::to_string(p_);
  }

  friend bool operator==(const FieldDescriptor &, const FieldDescriptor &) = default;

private:
  friend class Scalar;

  FieldDescriptor(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

/// An exact field element. Rationals are kept canonical by Boost
/// (positive denominator, reduced); residues are kept in [0, p).
class Scalar {
public:
  static Scalar zero(const FieldDescriptor &f) { return from_integer(f, 0); }
  static Scalar one(const FieldDescriptor &f) { return from_integer(f, 1); }

  static Scalar from_integer(const FieldDescriptor &f, const Integer &value) {
    if (f.is_rational())
      return Scalar(Rational(value));
    Integer r = value % f.modulus();
    if (r < 0)
      r += f.modulus();
    return Scalar(Residue{r.convert_to<std::uint32_t>(), f.modulus()});
  }

  static Scalar from_fraction(const FieldDescriptor &f, const Integer &num,
                              const Integer &den) {
    if (den == 0)
      throw DivisionByZero("zero denominator");
    if (f.is_rational())
      return den < 0 ? Scalar(Rational(Integer(-num), Integer(-den))) : Scalar(Rational(num, den));
    return from_integer(f, num) * from_integer(f, den).inverse();
  }

  FieldDescriptor field() const {
    if (const auto *r = std::get_if<Residue>(&value_))
      return FieldDescriptor(FieldDescriptor::Kind::prime, r->modulus);
    return FieldDescriptor::rational();
  }

  bool same_field(const Scalar &other) const noexcept {
    if (value_.index() != other.value_.index())
      return false;
    if (const auto *r = std::get_if<Residue>(&value_))
      return r->modulus == std::get<Residue>(other.value_).modulus;
    return true;
  }

  bool is_zero() const {
    if (const auto *r = std::get_if<Residue>(&value_))
      return r->value == 0;
    return std::get<Rational>(value_) == 0;
  }

  bool is_one() const {
    if (const auto *r = std::get_if<Residue>(&value_))
      return r->value == 1;
    return std::get<Rational>(value_) == 1;
  }

  /// Only meaningful for Q.
  const Rational &rational() const { return std::get<Rational>(value_); }
  /// Only meaningful for GF(p).
  std::uint32_t residue() const { return std::get<Residue>(value_).value; }

  Scalar operator-() const {
    if (const auto *r = std::get_if<Residue>(&value_))
      return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
    return Scalar(Rational(-std::get<Rational>(value_)));
  }

  Scalar inverse() const {
    if (is_zero())
      throw DivisionByZero("inverse of zero");
    if (const auto *r = std::get_if<Residue>(&value_))
      return Scalar(Residue{pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus});
    return Scalar(Rational(1 / std::get<Rational>(value_)));
  }

  Scalar &operator+=(const Scalar &o) {
    check(o);
    if (auto *r = std::get_if<Residue>(&value_)) {
      std::uint64_t s = std::uint64_t{r->value} + std::get<Residue>(o.value_).value;
      r->value = static_cast<std::uint32_t>(s % r->modulus);
    } else {
      std::get<Rational>(value_) += std::get<Rational>(o.value_);
    }
    return *this;
  }

  Scalar &operator-=(const Scalar &o) { return *this += -o; }

  Scalar &operator*=(const Scalar &o) {
    check(o);
    if (auto *r = std::get_if<Residue>(&value_)) {
      std::uint64_t s = std::uint64_t{r->value} * std::get<Residue>(o.value_).value;
      r->value = static_cast<std::uint32_t>(s % r->modulus);
    } else {
      std::get<Rational>(value_) *= std::get<Rational>(o.value_);
    }
    return *this;
  }

  Scalar &operator/=(const Scalar &o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

  /// Throws FieldMismatch when the operands live in different fields.
  friend bool operator==(const Scalar &a, const Scalar &b) {
    a.check(b);
    if (const auto *r = std::get_if<Residue>(&a.value_))
      return r->value == std::get<Residue>(b.value_).value;
    return std::get<Rational>(a.value_) == std::get<Rational>(b.value_);
  }

  /// "3", "-1/2" for Q; the residue in [0, p) for GF(p).
  std::string to_string() const {
    if (const auto *r = std::get_if<Residue>(&value_))
      return std::to_string(r->value);
    return std::get<Rational>(value_).str();
  }

  friend std::ostream &operator<<(std::ostream &os, const Scalar &s) {
    return os << s.to_string();
  }

private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };

  explicit Scalar(Rational r) : value_(std::move(r)) {}
  explicit Scalar(Residue r) : value_(r) {}

  void check(const Scalar &o) const {
    if (!same_field(o))
      throw FieldMismatch("operands belong to " + field().to_string() + " and " +
                          o.field().to_string());
  }

  static std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp > 0) {
      if (exp & 1)
        result = result * base % mod;
      base = base * base % mod;
      exp >>= 1;
    }
    return static_cast<std::uint32_t>(result);
  }

  std::variant<Rational, Residue> value_;
};

/// Coordinates of an algebra element in the basis {1, e_1, ..., e_{n-1}}.
using Vector = std::vector<Scalar>;

inline Vector zero_vector(const FieldDescriptor &f, std::size_t n) {
  return Vector(n, Scalar::zero(f));
}

inline Vector unit_vector(const FieldDescriptor &f, std::size_t n, std::size_t i) {
  if (i >= n)
    throw ShapeError("basis index " + std::to_string(i) + " out of range for dimension " +
                     std::to_string(n));
  Vector v = zero_vector(f, n);
  v[i] = Scalar::one(f);
  return v;
}

inline bool is_zero(std::span<const Scalar> v) {
  for (const auto &s : v)
    if (!s.is_zero())
      return false;
  return true;
}

inline void require_same_shape(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size())
    throw ShapeError("vector lengths differ: " + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()));
}

/// target += factor * source
inline void add_scaled(Vector &target, const Scalar &factor, std::span<const Scalar> source) {
  require_same_shape(target, source);
  if (factor.is_zero())
    return;
  for (std::size_t i = 0; i < target.size(); ++i)
    if (!source[i].is_zero())
      target[i] += factor * source[i];
}

inline Vector scaled(std::span<const Scalar> v, const Scalar &factor) {
  Vector out(v.begin(), v.end());
  for (auto &s : out)
    s *= factor;
  return out;
}

inline std::string to_string(std::span<const Scalar> v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += ", ";
    out += v[i].to_string();
  }
  return out + "]";
}

} // namespace alglength
