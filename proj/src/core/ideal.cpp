#include "cmlab/ideal.hpp"

#include <algorithm>
#include <bit>

#include "cmlab/errors.hpp"

namespace cmlab {

IdealPresentation::IdealPresentation(RingPtr ring, std::vector<Polynomial> gens, std::string label)
    : ring_(std::move(ring)), gens_(std::move(gens)), label_(std::move(label)) {
  if (label_.empty()) throw DomainError("ideal label must be nonempty");
  for (auto& g : gens_) {
    if (!same_space(*ring_, g.ring())) throw DomainError("generator lives on another variable set or field");
    g = g.in_ring(ring_);
  }
}

IdealPresentation IdealPresentation::parse(std::vector<std::string> vars, const Field& field,
                                           const std::vector<std::string>& gens, std::string label) {
  auto ring = make_ring(std::move(vars), field);
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(parse_polynomial(g, ring));
  return {ring, std::move(polys), std::move(label)};
}

GroebnerBasis groebner_basis(const IdealPresentation& I, const MonomialOrder& order, const GroebnerOptions& opts) {
  return buchberger(with_order(I.ring(), order), I.gens(), opts);
}

IdealPresentation eliminate(const IdealPresentation& I, const std::vector<std::string>& drop,
                            const GroebnerOptions& opts) {
  const auto& vars = I.vars();
  std::vector<std::size_t> front;
  std::vector<bool> dropped(vars.size(), false);
  for (const auto& name : drop) {
    const std::size_t i = vars.index(name);
    if (!dropped[i]) front.push_back(i);
    dropped[i] = true;
  }
  std::sort(front.begin(), front.end());
  if (front.empty()) return I.relabeled(I.label());

  const auto order = MonomialOrder::block(front, MonomialOrder::Kind::grevlex, vars.size());
  const GroebnerBasis gb = groebner_basis(I, order, opts);

  std::vector<std::string> kept_names;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!dropped[i]) kept_names.push_back(vars.name(i));
  }
  const RingPtr target = make_ring(kept_names, I.field());
  std::vector<Polynomial> gens;
  for (const auto& g : gb.generators()) {
    const auto support = g.support();
    const bool clean = std::none_of(support.begin(), support.end(), [&](std::size_t i) { return dropped[i]; });
    if (clean) gens.push_back(change_ring(g, target));
  }
  std::string label = "eliminate(" + I.label() + ";";
  for (std::size_t k = 0; k < drop.size(); ++k) label += (k ? "," : "") + drop[k];
  return {target, std::move(gens), label + ")"};
}

std::string fresh_auxiliary(const VariableSet& vars) {
  for (std::size_t k = 1;; ++k) {
    std::string name = "z" + std::to_string(k);
    if (!vars.contains(name)) return name;
  }
}

namespace {

// I extended by a fresh z and the generator 1 − z·f.
IdealPresentation with_inverse(const IdealPresentation& I, const Polynomial& f, std::string& z) {
  if (!same_space(f.ring(), *I.ring())) throw DomainError("polynomial lives on another variable set or field");
  z = fresh_auxiliary(I.vars());
  auto names = I.vars().names();
  names.push_back(z);
  const RingPtr ext = make_ring(names, I.field());
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(change_ring(g, ext));
  const Polynomial zf = Polynomial::variable(ext, z) * change_ring(f, ext);
  gens.push_back(Polynomial::constant(ext, ext->field.one()) - zf);
  return {ext, std::move(gens), I.label() + "+(1-" + z + "*f)"};
}

}  // namespace

IdealPresentation saturate(const IdealPresentation& I, const Polynomial& f, const GroebnerOptions& opts) {
  if (f.is_zero()) throw DomainError("cannot saturate by zero");
  if (f.is_constant()) return I.relabeled("saturate(" + I.label() + ")");
  std::string z;
  const IdealPresentation ext = with_inverse(I, f, z);
  return eliminate(ext, {z}, opts).relabeled("saturate(" + I.label() + "," + f.to_string() + ")");
}

bool radical_membership(const Polynomial& f, const IdealPresentation& I, const GroebnerOptions& opts) {
  std::string z;
  const IdealPresentation ext = with_inverse(I, f, z);
  return groebner_basis(ext, MonomialOrder::grevlex(), opts).is_unit_ideal();
}

namespace {

struct HittingSet {
  std::vector<std::uint64_t> edges;
  int best;

  // Disjoint unhit edges each need their own vertex.
  int lower_bound(std::uint64_t chosen) const {
    std::uint64_t used = 0;
    int count = 0;
    for (auto e : edges) {
      if ((e & chosen) == 0 && (e & used) == 0) {
        used |= e;
        ++count;
      }
    }
    return count;
  }

  void search(std::uint64_t chosen, int size) {
    if (size + lower_bound(chosen) >= best) return;
    const std::uint64_t* pick = nullptr;
    for (const auto& e : edges) {
      if ((e & chosen) != 0) continue;
      if (!pick || std::popcount(e) < std::popcount(*pick)) pick = &e;
    }
    if (!pick) {
      best = size;
      return;
    }
    for (std::uint64_t rest = *pick; rest != 0; rest &= rest - 1) {
      search(chosen | (rest & -rest), size + 1);
    }
  }
};

}  // namespace

std::size_t independent_set_dimension(std::span<const Monomial> leading, std::size_t nvars) {
  if (nvars > 64) throw DomainError("dimension search supports at most 64 variables");
  std::vector<std::uint64_t> edges;
  for (const auto& m : leading) {
    if (m.size() != nvars) throw DomainError("monomial size does not match the variable count");
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (m[i] != 0) s |= std::uint64_t{1} << i;
    }
    if (s == 0) throw DomainError("unit ideal has no dimension");
    edges.push_back(s);
  }
  // keep only inclusion-minimal supports
  std::sort(edges.begin(), edges.end(), [](auto a, auto b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<std::uint64_t> minimal;
  for (auto e : edges) {
    if (std::none_of(minimal.begin(), minimal.end(), [&](auto m) { return (m & e) == m; })) minimal.push_back(e);
  }
  HittingSet hs{std::move(minimal), static_cast<int>(nvars) + 1};
  hs.search(0, 0);
  return nvars - static_cast<std::size_t>(hs.best);
}

std::optional<std::size_t> krull_dimension(const IdealPresentation& I, const MonomialOrder& order,
                                           const GroebnerOptions& opts) {
  const GroebnerBasis gb = groebner_basis(I, order, opts);
  if (gb.is_unit_ideal()) return std::nullopt;
  const auto lms = gb.leading_monomials();
  return independent_set_dimension(lms, I.vars().size());
}

ScalarMatrix jacobian_matrix(std::span<const Polynomial> gens, const Point& p) {
  if (gens.empty()) return ScalarMatrix(0, 0, Scalar());
  const Ring& ring = gens.front().ring();
  for (const auto& g : gens) {
    if (!same_space(ring, g.ring())) throw DomainError("generators live on different variable sets");
  }
  const std::size_t n = ring.vars.size();
  ScalarMatrix jac(gens.size(), n, ring.field.zero());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Polynomial d = partial_derivative(gens[i], j);
      if (!d.is_zero()) jac(i, j) = evaluate(d, p);
    }
  }
  return jac;
}

std::size_t jacobian_rank(std::span<const Polynomial> gens, const Point& p) {
  return rank(jacobian_matrix(gens, p));
}

}  // namespace cmlab
