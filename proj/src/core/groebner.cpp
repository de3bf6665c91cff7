#include "cmlab/groebner.hpp"

#include <algorithm>
#include <utility>

#include "cmlab/errors.hpp"

namespace cmlab {

Budget Budget::seconds(double s) {
  Budget b;
  b.deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(s));
  return b;
}

void Budget::check() const {
  if (expired()) throw BudgetExceeded();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.leading_monomial());
  return out;
}

namespace {

// Coefficient domains for the engine. Residues are kept as raw words so the
// reduction loop does no variant dispatch.
struct ModP {
  using Elem = std::uint32_t;
  std::uint32_t p;

  Elem one() const { return 1; }
  Elem from(const Scalar& s) const { return s.residue_value(); }
  Scalar to(Elem e) const { return Scalar::residue(e, p); }
  static bool is_zero(Elem e) { return e == 0; }
  Elem add(Elem a, Elem b) const {
    const std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p - b); }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const { return to(a).inverse().residue_value(); }
};

struct Rat {
  using Elem = mpq_class;

  Elem one() const { return 1; }
  Elem from(const Scalar& s) const { return s.rational(); }
  Scalar to(const Elem& e) const { return Scalar(e); }
  static bool is_zero(const Elem& e) { return sgn(e) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return 1 / a; }
};

template <class K>
struct ETerm {
  Monomial m;
  typename K::Elem c;
};

template <class K>
struct EPoly {
  std::vector<ETerm<K>> terms;
  std::uint32_t sugar = 0;

  const Monomial& lm() const { return terms.front().m; }
};

template <class K>
class Engine {
 public:
  using Elem = typename K::Elem;
  using Terms = std::vector<ETerm<K>>;
  using Poly = EPoly<K>;

  Engine(K k, const MonomialOrder& order, const Budget& budget) : k_(std::move(k)), order_(order), budget_(budget) {}

  Poly import(const Polynomial& f, const RingPtr& ring) const {
    Poly p;
    const Polynomial sorted = f.in_ring(ring);
    for (const auto& t : sorted.terms()) p.terms.push_back({t.monomial, k_.from(ring->field.coerce(t.coeff))});
    p.sugar = f.total_degree();
    return p;
  }

  Polynomial export_poly(const Poly& p, const RingPtr& ring) const {
    std::vector<Term> out;
    out.reserve(p.terms.size());
    for (const auto& t : p.terms) out.push_back({t.m, k_.to(t.c)});
    return Polynomial::from_sorted_terms(ring, std::move(out));
  }

  void make_monic(Poly& p) const {
    if (p.terms.empty()) return;
    const Elem inv = k_.inv(p.terms.front().c);
    for (auto& t : p.terms) t.c = k_.mul(t.c, inv);
  }

  // ca*ma*a[ai..] + cb*mb*b[bi..], merged in descending order.
  Terms combine(const Terms& a, std::size_t ai, const Elem& ca, const Monomial& ma, const Terms& b, std::size_t bi,
                const Elem& cb, const Monomial& mb) const {
    Terms out;
    out.reserve(a.size() - ai + b.size() - bi);
    const bool ma_one = ma.is_one(), mb_one = mb.is_one();
    auto scaled_a = [&](std::size_t i) { return ETerm<K>{ma_one ? a[i].m : a[i].m * ma, k_.mul(a[i].c, ca)}; };
    auto scaled_b = [&](std::size_t j) { return ETerm<K>{mb_one ? b[j].m : b[j].m * mb, k_.mul(b[j].c, cb)}; };

    std::size_t i = ai, j = bi;
    std::optional<ETerm<K>> ta, tb;
    if (i < a.size()) ta = scaled_a(i);
    if (j < b.size()) tb = scaled_b(j);
    while (ta && tb) {
      const auto cmp = order_.compare(ta->m, tb->m);
      if (cmp > 0) {
        out.push_back(std::move(*ta));
        ta = ++i < a.size() ? std::optional(scaled_a(i)) : std::nullopt;
      } else if (cmp < 0) {
        out.push_back(std::move(*tb));
        tb = ++j < b.size() ? std::optional(scaled_b(j)) : std::nullopt;
      } else {
        Elem s = k_.add(ta->c, tb->c);
        if (!K::is_zero(s)) out.push_back({std::move(ta->m), std::move(s)});
        ta = ++i < a.size() ? std::optional(scaled_a(i)) : std::nullopt;
        tb = ++j < b.size() ? std::optional(scaled_b(j)) : std::nullopt;
      }
    }
    for (; ta; ta = ++i < a.size() ? std::optional(scaled_a(i)) : std::nullopt) out.push_back(std::move(*ta));
    for (; tb; tb = ++j < b.size() ? std::optional(scaled_b(j)) : std::nullopt) out.push_back(std::move(*tb));
    return out;
  }

  // Reduces p by the monic polynomials `by`. With full=false stops once the
  // leading term is irreducible.
  Poly reduce(Poly p, const std::vector<const Poly*>& by, bool full) {
    Terms rem;
    Terms& t = p.terms;
    std::size_t pos = 0;
    const Monomial one(order_size(p));
    while (pos < t.size()) {
      if ((++steps_ & 0xff) == 0) budget_.check();
      const Poly* div = nullptr;
      for (const Poly* g : by) {
        if (g->lm().divides(t[pos].m)) {
          div = g;
          break;
        }
      }
      if (!div) {
        if (!full) break;
        rem.push_back(std::move(t[pos]));
        ++pos;
        continue;
      }
      const Monomial q = t[pos].m / div->lm();
      p.sugar = std::max(p.sugar, q.degree() + div->sugar);
      const Elem c = k_.neg(t[pos].c);
      t = combine(t, pos + 1, k_.one(), one, div->terms, 1, c, q);
      pos = 0;
    }
    if (!rem.empty()) {
      for (std::size_t i = pos; i < t.size(); ++i) rem.push_back(std::move(t[i]));
      t = std::move(rem);
    } else if (pos > 0) {
      t.erase(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(pos));
    }
    return p;
  }

  Poly s_poly(const Poly& f, const Poly& g) const {
    const Monomial l = lcm(f.lm(), g.lm());
    const Monomial mf = l / f.lm(), mg = l / g.lm();
    Poly s;
    // both inputs are monic
    s.terms = combine(f.terms, 1, k_.one(), mf, g.terms, 1, k_.neg(k_.one()), mg);
    s.sugar = std::max(f.sugar + mf.degree(), g.sugar + mg.degree());
    return s;
  }

  std::vector<Poly> buchberger(std::vector<Poly> input, bool use_sugar) {
    basis_.clear();
    active_.clear();
    pairs_.clear();
    use_sugar_ = use_sugar;

    for (auto& f : input) {
      if (f.terms.empty()) continue;
      make_monic(f);
      Poly h = reduce(std::move(f), active_polys(), true);
      if (h.terms.empty()) continue;
      make_monic(h);
      if (h.lm().is_one()) return {std::move(h)};
      update(std::move(h));
    }

    while (!pairs_.empty()) {
      budget_.check();
      const std::size_t best = select_pair();
      const Pair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      Poly h = reduce(s_poly(basis_[pr.i], basis_[pr.j]), active_polys(), true);
      if (h.terms.empty()) continue;
      make_monic(h);
      if (h.lm().is_one()) return {std::move(h)};
      update(std::move(h));
    }

    // The active set is a minimal basis; interreduce tails.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (active_[i]) keep.push_back(i);
    }
    std::vector<Poly> out;
    for (std::size_t i : keep) {
      std::vector<const Poly*> others;
      for (std::size_t j : keep) {
        if (j != i) others.push_back(&basis_[j]);
      }
      Poly g = basis_[i];
      Poly tail;
      tail.terms.assign(std::make_move_iterator(g.terms.begin() + 1), std::make_move_iterator(g.terms.end()));
      tail = reduce(std::move(tail), others, true);
      g.terms.resize(1);
      for (auto& t : tail.terms) g.terms.push_back(std::move(t));
      make_monic(g);
      out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) { return order_.greater(a.lm(), b.lm()); });
    return out;
  }

 private:
  struct Pair {
    std::size_t i, j;  // i < j
    Monomial lcm;
    std::uint32_t key;
  };

  static std::size_t order_size(const Poly& p) { return p.terms.empty() ? 0 : p.terms.front().m.size(); }

  std::vector<const Poly*> active_polys() const {
    std::vector<const Poly*> out;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (active_[i]) out.push_back(&basis_[i]);
    }
    return out;
  }

  std::uint32_t pair_key(std::size_t i, std::size_t j, const Monomial& l) const {
    if (!use_sugar_) return l.degree();
    const auto& a = basis_[i];
    const auto& b = basis_[j];
    return std::max(a.sugar + l.degree() - a.lm().degree(), b.sugar + l.degree() - b.lm().degree());
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.key != b.key) {
        if (a.key < b.key) best = k;
        continue;
      }
      const auto c = order_.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::pair(a.i, a.j) < std::pair(b.i, b.j))) best = k;
    }
    return best;
  }

  // Gebauer-Moeller update with the new element h.
  void update(Poly h) {
    const std::size_t hi = basis_.size();
    const Monomial& lh = h.lm();

    std::vector<std::size_t> cand;
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g]) cand.push_back(g);
    }
    std::vector<Monomial> lcms;
    for (std::size_t g : cand) lcms.push_back(lcm(lh, basis_[g].lm()));

    std::vector<std::size_t> kept;  // positions in cand
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool keep = lh.coprime(basis_[cand[a]].lm());
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cand.size() && keep; ++b) {
          if (lcms[b].divides(lcms[a])) keep = false;
        }
        for (std::size_t b : kept) {
          if (!keep) break;
          if (lcms[b].divides(lcms[a])) keep = false;
        }
      }
      if (keep) kept.push_back(a);
    }

    std::vector<Pair> next;
    for (const Pair& p : pairs_) {
      const bool drop = lh.divides(p.lcm) && !(lcm(basis_[p.i].lm(), lh) == p.lcm) &&
                        !(lcm(basis_[p.j].lm(), lh) == p.lcm);
      if (!drop) next.push_back(p);
    }

    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && lh.divides(basis_[g].lm())) active_[g] = false;
    }
    basis_.push_back(std::move(h));
    active_.push_back(true);

    for (std::size_t a : kept) {
      const std::size_t g = cand[a];
      if (basis_[hi].lm().coprime(basis_[g].lm())) continue;
      next.push_back({g, hi, lcms[a], pair_key(g, hi, lcms[a])});
    }
    pairs_ = std::move(next);
  }

  K k_;
  const MonomialOrder& order_;
  const Budget& budget_;
  std::size_t steps_ = 0;
  bool use_sugar_ = false;
  std::vector<Poly> basis_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

template <class Fn>
decltype(auto) with_engine(const Field& field, const MonomialOrder& order, const Budget& budget, Fn&& fn) {
  if (field.is_rational()) {
    Engine<Rat> e(Rat{}, order, budget);
    return fn(e);
  }
  Engine<ModP> e(ModP{field.characteristic()}, order, budget);
  return fn(e);
}

void require_same_space(const Ring& ring, std::span<const Polynomial> polys) {
  for (const auto& p : polys) {
    if (!same_space(ring, p.ring())) throw DomainError("mismatched variable sets or fields");
  }
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, const MonomialOrder& order,
                       const Budget& budget) {
  if (f.ring().vars.size() == 0) throw DomainError("normal form over an empty variable set");
  require_same_space(f.ring(), G);
  const RingPtr ring = with_order(f.ring_ptr(), order);
  return with_engine(ring->field, ring->order, budget, [&](auto& e) {
    using Poly = typename std::remove_reference_t<decltype(e)>::Poly;
    std::vector<Poly> divisors;
    for (const auto& g : G) {
      if (g.is_zero()) continue;
      divisors.push_back(e.import(g, ring));
      e.make_monic(divisors.back());
    }
    std::vector<const Poly*> by;
    for (const auto& d : divisors) by.push_back(&d);
    return e.export_poly(e.reduce(e.import(f, ring), by, true), ring);
  });
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw DomainError("S-polynomial of a zero polynomial");
  const Polynomial gg[] = {g};
  require_same_space(f.ring(), gg);
  const RingPtr ring = with_order(f.ring_ptr(), order);
  const Budget none;
  return with_engine(ring->field, ring->order, none, [&](auto& e) {
    auto a = e.import(f, ring);
    auto b = e.import(g, ring);
    e.make_monic(a);
    e.make_monic(b);
    return e.export_poly(e.s_poly(a, b), ring);
  });
}

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens, const GroebnerOptions& opts) {
  require_same_space(*ring, gens);
  return with_engine(ring->field, ring->order, opts.budget, [&](auto& e) {
    using Poly = typename std::remove_reference_t<decltype(e)>::Poly;
    std::vector<Poly> in;
    for (const auto& g : gens) in.push_back(e.import(g, ring));
    std::vector<Polynomial> out;
    for (const auto& p : e.buchberger(std::move(in), opts.sugar)) out.push_back(e.export_poly(p, ring));
    return GroebnerBasis(ring, std::move(out));
  });
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order, const GroebnerOptions& opts) {
  if (gens.empty()) throw DomainError("cannot infer a ring from an empty generator list");
  return buchberger(with_order(gens.front().ring_ptr(), order), gens, opts);
}

bool ideal_membership(const Polynomial& f, const GroebnerBasis& I, const Budget& budget) {
  if (!same_space(f.ring(), *I.ring())) throw DomainError("mismatched variable sets or fields");
  if (!(f.ring().order == I.order())) throw DomainError("polynomial order differs from the basis order");
  if (f.is_zero()) return true;
  if (I.is_unit_ideal()) return true;
  return normal_form(f, I.generators(), I.order(), budget).is_zero();
}

}  // namespace cmlab
