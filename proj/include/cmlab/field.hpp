#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace cmlab {

class Scalar;

/// Coefficient field: the rationals or a prime field F_p with p odd.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  /// The rationals.
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws DomainError unless p is an odd prime below 2^31.
  static Field prime(std::uint32_t p);
  /// Accepts "q" or "fp:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  /// Throws DomainError when p divides the denominator.
  Scalar from_rational(const mpq_class& q) const;
  /// Brings a scalar of any field into this one (rationals reduce mod p).
  Scalar coerce(const Scalar& s) const;

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact field element: a normalized rational or a residue mod p.
///
/// A default-constructed Scalar is the rational 0. Arithmetic between a
/// rational and a residue reduces the rational into the residue's field, so
/// integer literals mix freely with prime-field values.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : v_(mpq_class(v)) {}
  Scalar(long v) : v_(mpq_class(v)) {}
  Scalar(long long v);
  explicit Scalar(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }

  static Scalar residue(std::uint64_t value, std::uint32_t modulus) {
    Scalar s;
    s.v_ = Residue{static_cast<std::uint32_t>(value % modulus), modulus};
    return s;
  }

  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  /// 0 for rationals.
  std::uint32_t modulus() const {
    auto r = std::get_if<Residue>(&v_);
    return r ? r->modulus : 0;
  }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  std::uint32_t residue_value() const { return std::get<Residue>(v_).value; }

  bool is_zero() const;
  bool is_one() const;
  /// Sign of the symmetric representative (residues in (-p/2, p/2]).
  int sign() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Rationals as "n" or "n/d"; residues by their symmetric representative.
  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };
  std::variant<mpq_class, Residue> v_;
};

}  // namespace cmlab
