#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cmlab/groebner.hpp"
#include "cmlab/matrix.hpp"
#include "cmlab/polynomial.hpp"

namespace cmlab {

/// Generators on a named variable set over a field, with a label that says
/// where the ideal came from.
class IdealPresentation {
 public:
  /// Throws DomainError on an empty label or generators from another ring.
  IdealPresentation(RingPtr ring, std::vector<Polynomial> gens, std::string label);
  /// Parses each generator with the polynomial grammar.
  static IdealPresentation parse(std::vector<std::string> vars, const Field& field,
                                 const std::vector<std::string>& gens, std::string label);

  const RingPtr& ring() const { return ring_; }
  const VariableSet& vars() const { return ring_->vars; }
  const Field& field() const { return ring_->field; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  const std::string& label() const { return label_; }

  IdealPresentation relabeled(std::string label) const { return {ring_, gens_, std::move(label)}; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::string label_;
};

/// Reduced basis of I under `order`.
GroebnerBasis groebner_basis(const IdealPresentation& I, const MonomialOrder& order, const GroebnerOptions& opts = {});

/// I ∩ K[vars \ drop], via a block order with `drop` in front. The result
/// lives on the remaining variables, in their original relative order.
IdealPresentation eliminate(const IdealPresentation& I, const std::vector<std::string>& drop,
                            const GroebnerOptions& opts = {});

/// I : f^∞ through I + (1 − z·f) and elimination of the fresh variable z{k}.
IdealPresentation saturate(const IdealPresentation& I, const Polynomial& f, const GroebnerOptions& opts = {});

/// First unused name z1, z2, ... in vars.
std::string fresh_auxiliary(const VariableSet& vars);

/// f ∈ √I iff 1 ∈ I + (1 − z·f).
bool radical_membership(const Polynomial& f, const IdealPresentation& I, const GroebnerOptions& opts = {});

/// Krull dimension of K[vars]/I from the leading-term ideal. nullopt for the
/// unit ideal, where the quotient is the zero ring.
std::optional<std::size_t> krull_dimension(const IdealPresentation& I, const MonomialOrder& order,
                                           const GroebnerOptions& opts = {});
/// Largest variable subset containing no leading monomial's support.
std::size_t independent_set_dimension(std::span<const Monomial> leading, std::size_t nvars);

/// [∂g_i/∂v_j](p) over the generators' shared variable set.
ScalarMatrix jacobian_matrix(std::span<const Polynomial> gens, const Point& p);
std::size_t jacobian_rank(std::span<const Polynomial> gens, const Point& p);

}  // namespace cmlab
