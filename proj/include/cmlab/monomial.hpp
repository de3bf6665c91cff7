#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace cmlab {

using Exponent = std::uint16_t;

/// Exponent vector over a fixed number of variables, with cached total
/// degree and a support bitmask used as a divisibility pre-filter.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::span<const Exponent> exps);

  std::size_t size() const { return e_.size(); }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, Exponent e);

  std::uint32_t degree() const { return deg_; }
  std::uint64_t mask() const { return mask_; }
  bool is_one() const { return deg_ == 0; }

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const {
    if ((mask_ & ~other.mask_) != 0 || deg_ > other.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] > other.e_[i]) return false;
    }
    return true;
  }
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg_ == b.deg_ && a.mask_ == b.mask_ && a.e_ == b.e_;
  }

  const Exponent* data() const { return e_.data(); }

 private:
  void recompute();

  boost::container::small_vector<Exponent, 24> e_;
  std::uint32_t deg_ = 0;
  std::uint64_t mask_ = 0;
};

/// Total order on monomials: lex, grevlex, or a block elimination order
/// that first compares the restriction to the front variables and breaks
/// ties on the remaining ones, each by the inner order.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, block };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }
  /// `inner` must be lex or grevlex; `nvars` is the ring size.
  static MonomialOrder block(std::vector<std::size_t> front, Kind inner, std::size_t nvars);
  /// Accepts "lex" or "grevlex".
  static MonomialOrder parse(const std::string& name);

  Kind kind() const { return kind_; }
  Kind inner() const { return inner_; }
  const std::vector<std::size_t>& front() const { return front_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  explicit MonomialOrder(Kind k) : kind_(k), inner_(k) {}

  Kind kind_;
  Kind inner_;
  std::vector<std::size_t> front_;
  std::vector<std::size_t> back_;
};

std::strong_ordering compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);

}  // namespace cmlab
