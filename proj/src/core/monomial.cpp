#include "cmlab/monomial.hpp"

#include <algorithm>
#include <limits>

#include "cmlab/errors.hpp"

namespace cmlab {
namespace {

void check_same_size(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw DomainError("monomials over different variable counts");
}

std::strong_ordering compare_lex(const Exponent* a, const Exponent* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_grevlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    // the smaller exponent in the last differing variable wins
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_subset(const Monomial& a, const Monomial& b,
                                    const std::vector<std::size_t>& idx, MonomialOrder::Kind inner) {
  if (inner == MonomialOrder::Kind::lex) {
    for (std::size_t i : idx) {
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }
  std::uint32_t da = 0, db = 0;
  for (std::size_t i : idx) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t k = idx.size(); k-- > 0;) {
    const std::size_t i = idx[k];
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

Monomial::Monomial(std::initializer_list<Exponent> exps) : e_(exps.begin(), exps.end()) { recompute(); }

Monomial::Monomial(std::span<const Exponent> exps) : e_(exps.begin(), exps.end()) { recompute(); }

void Monomial::set(std::size_t i, Exponent e) {
  e_.at(i) = e;
  recompute();
}

void Monomial::recompute() {
  deg_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    deg_ += e_[i];
    if (e_[i] != 0) mask_ |= std::uint64_t{1} << (i % 64);
  }
}

bool Monomial::coprime(const Monomial& other) const {
  if ((mask_ & other.mask_) == 0) return true;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_same_size(a, b);
  Monomial r(a);
  for (std::size_t i = 0; i < r.e_.size(); ++i) {
    const std::uint32_t s = std::uint32_t{a.e_[i]} + b.e_[i];
    if (s > std::numeric_limits<Exponent>::max()) throw DomainError("exponent overflow");
    r.e_[i] = static_cast<Exponent>(s);
  }
  r.deg_ = a.deg_ + b.deg_;
  r.mask_ = a.mask_ | b.mask_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  check_same_size(a, b);
  if (!b.divides(a)) throw DomainError("monomial quotient is not exact");
  Monomial r(a);
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = static_cast<Exponent>(a.e_[i] - b.e_[i]);
  r.recompute();
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_size(a, b);
  Monomial r(a);
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  r.recompute();
  return r;
}

MonomialOrder MonomialOrder::block(std::vector<std::size_t> front, Kind inner, std::size_t nvars) {
  if (inner == Kind::block) throw DomainError("block order needs lex or grevlex inside");
  std::vector<bool> is_front(nvars, false);
  for (std::size_t i : front) {
    if (i >= nvars) throw DomainError("block variable index out of range");
    is_front[i] = true;
  }
  MonomialOrder o(Kind::block);
  o.inner_ = inner;
  for (std::size_t i = 0; i < nvars; ++i) (is_front[i] ? o.front_ : o.back_).push_back(i);
  return o;
}

MonomialOrder MonomialOrder::parse(const std::string& name) {
  if (name == "lex") return lex();
  if (name == "grevlex") return grevlex();
  throw DomainError("unknown monomial order '" + name + "' (expected lex or grevlex)");
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::lex:
      check_same_size(a, b);
      return compare_lex(a.data(), b.data(), a.size());
    case Kind::grevlex:
      check_same_size(a, b);
      return compare_grevlex(a, b);
    case Kind::block:
      break;
  }
  if (a.size() != front_.size() + back_.size() || b.size() != a.size()) {
    throw DomainError("monomial size does not match block order");
  }
  if (auto c = compare_subset(a, b, front_, inner_); c != 0) return c;
  return compare_subset(a, b, back_, inner_);
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::lex:
      return "lex";
    case Kind::grevlex:
      return "grevlex";
    case Kind::block:
      break;
  }
  std::string s = "block(";
  for (std::size_t k = 0; k < front_.size(); ++k) s += (k ? "," : "") + std::to_string(front_[k]);
  return s + ";" + (inner_ == Kind::lex ? "lex" : "grevlex") + ")";
}

std::strong_ordering compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  return order.compare(a, b);
}

}  // namespace cmlab
