#pragma once
// Property checks over the ideal corpus, shared by the unit tests and the
// acceptance runner. Each returns how many cases ran and the first failure.

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "cmlab/cli/ideal_file.hpp"
#include "cmlab/groebner.hpp"
#include "cmlab/ideal.hpp"
#include "cmlab/lab/regular.hpp"
#include "gen.hpp"

namespace props {

struct Outcome {
  bool ok = true;
  std::size_t cases = 0;
  std::string failure;

  void fail(const std::string& what) {
    if (ok) failure = what;
    ok = false;
  }
};

inline std::vector<cmlab::IdealPresentation> load_corpus(const std::string& dir) {
  std::vector<std::string> paths;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".ideal") paths.push_back(e.path().string());
  std::sort(paths.begin(), paths.end());
  std::vector<cmlab::IdealPresentation> out;
  for (const auto& p : paths) out.push_back(cmlab::cli::read_ideal_file(p));
  return out;
}

/// Every S-polynomial of the reduced grevlex basis reduces to zero.
inline Outcome spolys_reduce_to_zero(const std::vector<cmlab::IdealPresentation>& corpus) {
  Outcome o;
  const auto order = cmlab::MonomialOrder::grevlex();
  for (const auto& I : corpus) {
    const auto G = cmlab::groebner_basis(I, order);
    const auto& g = G.generators();
    for (std::size_t j = 0; j < g.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) {
        ++o.cases;
        if (!cmlab::normal_form(cmlab::s_polynomial(g[i], g[j], order), g, order).is_zero())
          o.fail(I.label() + ": S(" + std::to_string(i) + "," + std::to_string(j) + ") does not reduce to 0");
      }
  }
  return o;
}

/// The reduced basis does not depend on the order of the input generators.
inline Outcome basis_permutation_invariant(const std::vector<cmlab::IdealPresentation>& corpus, int shuffles,
                                           std::uint64_t seed) {
  Outcome o;
  gen::Rng rng(seed);
  for (const auto& I : corpus)
    for (const auto& order : {cmlab::MonomialOrder::grevlex(), cmlab::MonomialOrder::lex()}) {
      const auto G = cmlab::groebner_basis(I, order);
      auto gens = I.gens();
      for (int k = 0; k < shuffles; ++k) {
        std::shuffle(gens.begin(), gens.end(), rng);
        ++o.cases;
        const cmlab::IdealPresentation J(I.ring(), gens, I.label());
        if (!(cmlab::groebner_basis(J, order) == G)) o.fail(I.label() + ": basis changed under a permutation");
      }
    }
  return o;
}

/// NF(NF(f)) = NF(f), NF(a f + b g) = a NF(f) + b NF(g), and f − NF(f) lies
/// in the ideal.
inline Outcome normal_form_laws(const std::vector<cmlab::IdealPresentation>& corpus, int per_ideal,
                                std::uint64_t seed) {
  Outcome o;
  gen::Rng rng(seed);
  const auto order = cmlab::MonomialOrder::grevlex();
  for (const auto& I : corpus) {
    const auto G = cmlab::groebner_basis(I, order);
    const auto& ring = G.ring();
    const auto& g = G.generators();
    for (int k = 0; k < per_ideal; ++k) {
      ++o.cases;
      const auto f = gen::polynomial(rng, ring, 5, 4), h = gen::polynomial(rng, ring, 5, 4);
      const auto a = gen::scalar(rng, ring->field), b = gen::scalar(rng, ring->field);
      const auto nf = cmlab::normal_form(f, g, order), nh = cmlab::normal_form(h, g, order);
      if (!(cmlab::normal_form(nf, g, order) == nf)) o.fail(I.label() + ": normal form is not idempotent");
      if (!(cmlab::normal_form(a * f + b * h, g, order) == a * nf + b * nh))
        o.fail(I.label() + ": normal form is not linear");
      if (!cmlab::ideal_membership(f - nf, G)) o.fail(I.label() + ": f - NF(f) is not in the ideal");
    }
  }
  return o;
}

/// Krull dimension computed from lex and from grevlex bases agree.
inline Outcome dimension_order_independent(const std::vector<cmlab::IdealPresentation>& corpus) {
  Outcome o;
  for (const auto& I : corpus) {
    ++o.cases;
    const auto lex = cmlab::krull_dimension(I, cmlab::MonomialOrder::lex());
    const auto grl = cmlab::krull_dimension(I, cmlab::MonomialOrder::grevlex());
    if (lex != grl) o.fail(I.label() + ": lex and grevlex dimensions differ");
  }
  return o;
}

/// Centralizer dimension is unchanged by simultaneous conjugation.
inline Outcome regular_conjugation_invariant(int rounds, std::uint64_t seed) {
  Outcome o;
  gen::Rng rng(seed);
  const auto F = cmlab::Field::prime(cmlab::Field::kDefaultPrime);
  for (int k = 0; k < rounds; ++k) {
    ++o.cases;
    const std::size_t n = 2 + k % 3;
    const auto [A, B] = gen::commuting_pair(rng, n, F);
    const auto g = gen::invertible(rng, n, F);
    const auto gi = cmlab::inverse(g);
    const auto base = cmlab::lab::regular_point_test(A, B);
    const auto conj = cmlab::lab::regular_point_test(g * A * gi, g * B * gi);
    if (base.centralizer_dimension != conj.centralizer_dimension || base.regular != conj.regular)
      o.fail("round " + std::to_string(k) + ": conjugation changed the centralizer dimension");
  }
  return o;
}

}  // namespace props
