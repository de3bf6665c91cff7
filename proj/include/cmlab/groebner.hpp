#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <vector>

#include "cmlab/polynomial.hpp"

namespace cmlab {

/// Wall-clock deadline shared by everything one check computes.
class Budget {
 public:
  using Clock = std::chrono::steady_clock;

  /// No deadline.
  Budget() = default;
  static Budget unlimited() { return Budget(); }
  static Budget seconds(double s);

  bool limited() const { return deadline_.has_value(); }
  bool expired() const { return deadline_ && Clock::now() >= *deadline_; }
  /// Throws BudgetExceeded once the deadline has passed.
  void check() const;

 private:
  std::optional<Clock::time_point> deadline_;
};

struct GroebnerOptions {
  /// Select pairs by sugar degree instead of lcm degree.
  bool sugar = false;
  Budget budget;
};

/// Reduced Groebner basis: monic generators sorted by leading monomial,
/// descending, all living in a ring whose order is the basis order.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {}

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool reduced() const { return true; }

  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_unit_ideal() const { return gens_.size() == 1 && gens_[0].is_constant(); }
  std::vector<Monomial> leading_monomials() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order() == b.order() && a.gens_ == b.gens_;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

/// Full reduction of f by G (need not be a basis). The remainder has no term
/// divisible by a leading monomial of G and is expressed under `order`.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, const MonomialOrder& order,
                       const Budget& budget = {});

/// lcm/LT(f)·f − lcm/LT(g)·g with monic leading terms. Throws on zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Buchberger's algorithm with Gebauer-Moeller pair elimination. The ring
/// fixes variables, field and order; zero generators are ignored.
GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens, const GroebnerOptions& opts = {});
/// Convenience form: the ring is taken from the first generator.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                         const GroebnerOptions& opts = {});

/// True iff NF(f, I) = 0. f must be expressed under the basis order.
bool ideal_membership(const Polynomial& f, const GroebnerBasis& I, const Budget& budget = {});

}  // namespace cmlab
