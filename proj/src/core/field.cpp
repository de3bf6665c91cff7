#include "cmlab/field.hpp"

#include <charconv>
#include <limits>
#include <utility>

#include "cmlab/errors.hpp"

namespace cmlab {
namespace {

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce(const mpq_class& q, std::uint32_t p) {
  const std::uint32_t den = static_cast<std::uint32_t>(mpz_fdiv_ui(q.get_den_mpz_t(), p));
  if (den == 0) {
    throw DomainError("coefficient " + q.get_str() + " is not representable in F_" +
                      std::to_string(p));
  }
  const std::uint32_t num = static_cast<std::uint32_t>(mpz_fdiv_ui(q.get_num_mpz_t(), p));
  return mul_mod(num, inv_mod(den, p), p);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p == 2 || p >= (1u << 31) || !is_prime(p)) {
    throw DomainError("characteristic " + std::to_string(p) + " is not an odd prime below 2^31");
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.starts_with("fp:")) {
    std::uint64_t p = 0;
    const auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty() ||
        p > std::numeric_limits<std::uint32_t>::max()) {
      throw DomainError("malformed field descriptor '" + std::string(text) + "'");
    }
    return prime(static_cast<std::uint32_t>(p));
  }
  throw DomainError("unknown field descriptor '" + std::string(text) + "' (expected q or fp:<p>)");
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (p_ == 0) return Scalar(v);
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar::residue(static_cast<std::uint64_t>(r), p_);
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (p_ == 0) return Scalar(q);
  return Scalar::residue(reduce(q, p_), p_);
}

Scalar Field::coerce(const Scalar& s) const {
  if (s.is_rational()) return from_rational(s.rational());
  if (p_ == 0) throw DomainError("cannot lift a residue into the rationals");
  if (s.modulus() != p_) throw DomainError("residue from a different prime field");
  return s;
}

std::string Field::to_string() const {
  return p_ == 0 ? std::string("q") : "fp:" + std::to_string(p_);
}

static_assert(sizeof(long) == sizeof(long long), "mpq_class(long) must hold a long long");

Scalar::Scalar(long long v) : v_(mpq_class(static_cast<long>(v))) {}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<Residue>(&v_)) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<Residue>(&v_)) return r->value == 1;
  return std::get<mpq_class>(v_) == 1;
}

int Scalar::sign() const {
  if (auto r = std::get_if<Residue>(&v_)) {
    if (r->value == 0) return 0;
    return r->value <= r->modulus / 2 ? 1 : -1;
  }
  return sgn(std::get<mpq_class>(v_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (auto r = std::get_if<Residue>(&v_)) return residue(inv_mod(r->value, r->modulus), r->modulus);
  return Scalar(mpq_class(1) / std::get<mpq_class>(v_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  auto* a = std::get_if<Residue>(&v_);
  auto* b = std::get_if<Residue>(&o.v_);
  if (a && b) {
    if (a->modulus != b->modulus) throw DomainError("residues from different prime fields");
    std::uint32_t s = a->value + b->value;
    if (s >= a->modulus) s -= a->modulus;
    a->value = s;
  } else if (!a && !b) {
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  } else if (a) {
    *this += residue(reduce(o.rational(), a->modulus), a->modulus);
  } else {
    *this = residue(reduce(rational(), b->modulus), b->modulus) += o;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  auto* a = std::get_if<Residue>(&v_);
  auto* b = std::get_if<Residue>(&o.v_);
  if (a && b) {
    if (a->modulus != b->modulus) throw DomainError("residues from different prime fields");
    a->value = mul_mod(a->value, b->value, a->modulus);
  } else if (!a && !b) {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  } else if (a) {
    a->value = mul_mod(a->value, reduce(o.rational(), a->modulus), a->modulus);
  } else {
    *this = residue(reduce(rational(), b->modulus), b->modulus) *= o;
  }
  return *this;
}

Scalar Scalar::operator-() const {
  if (auto r = std::get_if<Residue>(&v_)) {
    return residue(r->value == 0 ? 0 : r->modulus - r->value, r->modulus);
  }
  return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

bool operator==(const Scalar& a, const Scalar& b) {
  auto* ra = std::get_if<Scalar::Residue>(&a.v_);
  auto* rb = std::get_if<Scalar::Residue>(&b.v_);
  if (ra && rb) return ra->modulus == rb->modulus && ra->value == rb->value;
  if (!ra && !rb) return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
  // mixed: compare inside the prime field
  return (a - b).is_zero();
}

std::string Scalar::to_string() const {
  if (auto r = std::get_if<Residue>(&v_)) {
    if (r->value > r->modulus / 2) return "-" + std::to_string(r->modulus - r->value);
    return std::to_string(r->value);
  }
  return std::get<mpq_class>(v_).get_str();
}

}  // namespace cmlab
