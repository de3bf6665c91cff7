#pragma once
// Deliberately naive reference implementations used to cross-check the
// library. Nothing here calls into cmlab's algorithms; only plain data
// (exponent vectors and coefficients) crosses the boundary.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cmlab/polynomial.hpp"

namespace oracle {

using Exps = std::vector<int>;

enum class Ord { lex, grevlex };

// a > b in the order
inline bool greater(Ord o, const Exps& a, const Exps& b) {
  if (o == Ord::grevlex) {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

// Coefficients are rationals; over F_p they are kept as integers in [0, p).
struct Field {
  unsigned long p = 0;

  mpq_class norm(const mpq_class& q) const {
    if (p == 0) return q;
    mpz_class P(p), num = q.get_num() % P, den = q.get_den() % P, inv;
    if (num < 0) num += P;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t()) == 0) throw std::runtime_error("oracle: bad denominator");
    mpz_class r = (num * inv) % P;
    return mpq_class(r);
  }
  mpq_class inv(const mpq_class& q) const { return norm(mpq_class(1) / q); }
};

struct Poly {
  std::map<Exps, mpq_class> t;  // no zero coefficients

  bool zero() const { return t.empty(); }
};

inline Poly add(const Field& F, Poly a, const Poly& b, const mpq_class& scale = 1) {
  for (const auto& [e, c] : b.t) {
    mpq_class v = F.norm(a.t[e] + scale * c);
    if (v == 0) a.t.erase(e);
    else a.t[e] = v;
  }
  return a;
}

inline Poly mul_term(const Field& F, const Poly& a, const Exps& m, const mpq_class& c) {
  Poly r;
  for (const auto& [e, v] : a.t) {
    Exps s = e;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += m[i];
    r.t[s] = F.norm(v * c);
  }
  return r;
}

inline Poly mul(const Field& F, const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [e, c] : b.t) r = add(F, r, mul_term(F, a, e, c));
  return r;
}

inline std::pair<Exps, mpq_class> lead(Ord o, const Poly& f) {
  auto best = f.t.begin();
  for (auto it = f.t.begin(); it != f.t.end(); ++it)
    if (greater(o, it->first, best->first)) best = it;
  return *best;
}

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Full reduction of f by G: every term is reduced, not just the leading one.
inline Poly reduce(const Field& F, Ord o, Poly f, const std::vector<Poly>& G) {
  Poly r;
  while (!f.zero()) {
    auto [m, c] = lead(o, f);
    bool done = false;
    for (const auto& g : G) {
      auto [gm, gc] = lead(o, g);
      if (!divides(gm, m)) continue;
      Exps q = m;
      for (std::size_t i = 0; i < q.size(); ++i) q[i] -= gm[i];
      f = add(F, f, mul_term(F, g, q, F.norm(c / gc)), -1);
      done = true;
      break;
    }
    if (!done) {
      r.t[m] = c;
      f.t.erase(m);
    }
  }
  return r;
}

inline Poly monic(const Field& F, Ord o, const Poly& f) {
  if (f.zero()) return f;
  const mpq_class inv = F.inv(lead(o, f).second);
  Poly r;
  for (const auto& [e, c] : f.t) r.t[e] = F.norm(c * inv);
  return r;
}

// Plain Buchberger over every pair, no criteria, then minimize and
// interreduce. Sorted by leading monomial, descending.
inline std::vector<Poly> groebner(const Field& F, Ord o, std::vector<Poly> G) {
  std::erase_if(G, [](const Poly& g) { return g.zero(); });
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    auto [fi, ci] = lead(o, G[i]);
    auto [fj, cj] = lead(o, G[j]);
    Exps l(fi.size()), a(fi.size()), b(fi.size());
    for (std::size_t k = 0; k < l.size(); ++k) {
      l[k] = std::max(fi[k], fj[k]);
      a[k] = l[k] - fi[k];
      b[k] = l[k] - fj[k];
    }
    Poly s = add(F, mul_term(F, G[i], a, F.inv(ci)), mul_term(F, G[j], b, F.inv(cj)), -1);
    Poly r = reduce(F, o, s, G);
    if (r.zero()) continue;
    G.push_back(r);
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
  }
  // minimal
  std::vector<Poly> M;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    const Exps li = lead(o, G[i]).first;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Exps lj = lead(o, G[j]).first;
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) M.push_back(monic(F, o, G[i]));
  }
  // reduced
  for (std::size_t i = 0; i < M.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    const auto [lm, lc] = lead(o, M[i]);
    Poly tail = M[i];
    tail.t.erase(lm);
    Poly r = reduce(F, o, tail, others);
    r.t[lm] = lc;
    M[i] = r;
  }
  std::sort(M.begin(), M.end(), [&](const Poly& a, const Poly& b) { return greater(o, lead(o, a).first, lead(o, b).first); });
  return M;
}

// Largest subset S of variables with no leading monomial supported in S.
inline std::optional<int> dimension(Ord o, const std::vector<Poly>& basis, int nvars) {
  std::vector<std::uint64_t> lms;
  for (const auto& g : basis) {
    const Exps m = lead(o, g).first;
    std::uint64_t mask = 0;
    for (int i = 0; i < nvars; ++i)
      if (m[i] > 0) mask |= std::uint64_t(1) << i;
    if (mask == 0) return std::nullopt;
    lms.push_back(mask);
  }
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t(1) << nvars); ++s) {
    bool ok = true;
    for (auto l : lms)
      if ((l & ~s) == 0) ok = false;
    if (ok) best = std::max(best, __builtin_popcountll(s));
  }
  return best;
}

inline Poly derivative(const Field& F, const Poly& f, int var) {
  Poly r;
  for (const auto& [e, c] : f.t) {
    if (e[var] == 0) continue;
    Exps d = e;
    d[var] -= 1;
    r.t[d] = F.norm(c * e[var]);
  }
  std::erase_if(r.t, [](const auto& kv) { return kv.second == 0; });
  return r;
}

inline mpq_class eval(const Field& F, const Poly& f, const std::vector<mpq_class>& x) {
  mpq_class s = 0;
  for (const auto& [e, c] : f.t) {
    mpq_class term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= x[i];
    s += term;
  }
  return F.norm(s);
}

inline int rank(const Field& F, std::vector<std::vector<mpq_class>> M) {
  int r = 0;
  const int rows = M.size(), cols = rows ? M[0].size() : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (F.norm(M[i][c]) != 0) piv = i;
    if (piv < 0) continue;
    std::swap(M[piv], M[r]);
    const mpq_class inv = F.inv(M[r][c]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || F.norm(M[i][c]) == 0) continue;
      const mpq_class f = F.norm(M[i][c] * inv);
      for (int k = 0; k < cols; ++k) M[i][k] = F.norm(M[i][k] - f * M[r][k]);
    }
    ++r;
  }
  return r;
}

// Plain data export from a cmlab polynomial.
inline mpq_class coeff(const cmlab::Scalar& s) {
  return s.is_rational() ? s.rational() : mpq_class(s.residue_value());
}

inline Poly from(const cmlab::Polynomial& f) {
  Poly p;
  const std::size_t n = f.ring().vars.size();
  for (const auto& term : f.terms()) {
    Exps e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = term.monomial[i];
    p.t[e] = coeff(term.coeff);
  }
  return p;
}

inline std::vector<Poly> from(const std::vector<cmlab::Polynomial>& fs) {
  std::vector<Poly> out;
  for (const auto& f : fs) out.push_back(from(f));
  return out;
}

inline bool same(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].t != b[i].t) return false;
  return true;
}

// Number of n×n matrices over F_p commuting with A and B, by enumeration.
inline std::uint64_t centralizer_count(unsigned p, const std::vector<std::vector<int>>& A,
                                       const std::vector<std::vector<int>>& B) {
  const int n = A.size();
  const int cells = n * n;
  std::vector<int> C(cells, 0);
  std::uint64_t count = 0;
  auto commutes = [&](const std::vector<std::vector<int>>& X) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long long s = 0;
        for (int k = 0; k < n; ++k) s += X[i][k] * C[k * n + j] - C[i * n + k] * X[k][j];
        if (((s % (long long)p) + p) % p != 0) return false;
      }
    return true;
  };
  while (true) {
    if (commutes(A) && commutes(B)) ++count;
    int k = 0;
    while (k < cells && ++C[k] == (int)p) C[k++] = 0;
    if (k == cells) break;
  }
  return count;
}

}  // namespace oracle
