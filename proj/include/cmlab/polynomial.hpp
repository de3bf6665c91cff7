#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cmlab/field.hpp"
#include "cmlab/monomial.hpp"

namespace cmlab {

/// Ordered, duplicate-free variable names. Indices are stable.
class VariableSet {
 public:
  VariableSet() = default;
  explicit VariableSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws DomainError("unknown variable ...").
  std::size_t index(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  friend bool operator==(const VariableSet& a, const VariableSet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Variables, coefficient field and the order terms are kept sorted by.
struct Ring {
  VariableSet vars;
  Field field;
  MonomialOrder order = MonomialOrder::grevlex();
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(VariableSet vars, Field field, MonomialOrder order = MonomialOrder::grevlex());
RingPtr make_ring(std::vector<std::string> names, Field field,
                  MonomialOrder order = MonomialOrder::grevlex());
/// Same variables and field under another order.
RingPtr with_order(const RingPtr& ring, const MonomialOrder& order);
/// Same variables and field: polynomials of the two rings can be mixed.
bool same_space(const Ring& a, const Ring& b);

struct Term {
  Monomial monomial;
  Scalar coeff;
};

/// Sparse polynomial: nonzero terms strictly descending in the ring's order.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  /// Sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// No normalization: terms must already be nonzero and strictly descending.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const Field& field() const { return ring_->field; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Scalar& leading_coeff() const { return leading_term().coeff; }
  std::uint32_t total_degree() const;
  /// Variables that occur with positive exponent.
  std::vector<std::size_t> support() const;

  /// The same polynomial re-sorted into `ring` (same variables and field).
  Polynomial in_ring(const RingPtr& ring) const;
  Polynomial with_order(const MonomialOrder& order) const;

  Polynomial monic() const;
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  /// Same space and identical term sets.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& o) const;
  Polynomial merged(const Polynomial& o, bool negate) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);
Polynomial pow(const Polynomial& f, unsigned e);

Polynomial partial_derivative(const Polynomial& f, std::size_t var);
Polynomial partial_derivative(const Polynomial& f, std::string_view var);

/// Assignment of field values to variable names.
class Point {
 public:
  Point() = default;
  Point(std::initializer_list<std::pair<const std::string, Scalar>> init) : values_(init) {}

  void set(const std::string& var, const Scalar& value) { values_[var] = value; }
  /// Throws DomainError("missing assignment ...").
  const Scalar& at(const std::string& var) const;
  bool has(const std::string& var) const { return values_.count(var) != 0; }
  bool is_total_on(const VariableSet& vars) const;
  const std::map<std::string, Scalar>& values() const { return values_; }

 private:
  std::map<std::string, Scalar> values_;
};

/// Exact value of f at p; every variable occurring in f must be assigned.
Scalar evaluate(const Polynomial& f, const Point& p);

/// Ring homomorphism on one polynomial: source variable i goes to images[i].
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images, const RingPtr& target);

/// Re-expresses f in a ring whose variables are a superset (or subset, when f
/// only involves shared variables) of f's, matching variables by name.
Polynomial change_ring(const Polynomial& f, const RingPtr& target);

/// Parses the polynomial grammar: integer literals, identifiers, + - * ^,
/// parentheses, and division by an integer literal. Juxtaposition is an error.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);
Polynomial parse_polynomial(std::string_view text, const VariableSet& vars, const Field& field);

}  // namespace cmlab
