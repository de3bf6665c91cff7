#include "cmlab/lab/cv.hpp"

#include <algorithm>

#include "cmlab/errors.hpp"
#include "cmlab/lab/schemes.hpp"

namespace cmlab::lab {
namespace {

void require_split(int m, int m1, int m2) {
  if (m < 1) throw HypothesisError("m must be at least 1");
  if (m > 9) throw HypothesisError("m above 9 is not supported by the variable naming");
  if (m1 < 0 || m2 < 0 || m1 + m2 > m) {
    throw HypothesisError("need m1, m2 >= 0 and m1 + m2 <= m (got m=" + std::to_string(m) +
                          ", m1=" + std::to_string(m1) + ", m2=" + std::to_string(m2) + ")");
  }
}

Scalar draw(std::mt19937_64& rng, const Field& field) {
  if (field.is_rational()) return Scalar(static_cast<long long>(rng() % 19) - 9);
  return Scalar::residue(rng() % field.characteristic(), field.characteristic());
}

// `count` pairwise distinct field elements.
std::vector<Scalar> distinct(int count, std::mt19937_64& rng, const Field& field) {
  std::vector<Scalar> out;
  for (int tries = 0; static_cast<int>(out.size()) < count; ++tries) {
    if (tries > 1000 * count) throw DomainError("could not draw pairwise distinct values");
    Scalar s = draw(rng, field);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  }
  return out;
}

ScalarMatrix diagonal(const std::vector<Scalar>& d, const Field& field) {
  ScalarMatrix m(d.size(), d.size(), field.zero());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "; " : "") + v[k];
  return s;
}

}  // namespace

std::vector<std::pair<int, int>> valid_splits(int m) {
  std::vector<std::pair<int, int>> out;
  for (int m1 = 0; m1 <= m; ++m1)
    for (int m2 = 0; m1 + m2 <= m; ++m2) out.emplace_back(m1, m2);
  return out;
}

std::vector<std::string> cv_violations(const CVTuple& c) {
  std::vector<std::string> bad;
  const std::size_t m = c.size();
  if (!c.B.is_square() || c.B.rows() != m || c.alpha.rows() != m || c.alpha.cols() != 1 || c.beta.rows() != 1 ||
      c.beta.cols() != m) {
    bad.push_back("shape");
    return bad;
  }
  if (!(c.A * c.B - c.B * c.A).is_zero()) bad.push_back("AB = BA");
  if (!(c.A * c.alpha - c.alpha * c.a).is_zero()) bad.push_back("A*alpha = a*alpha");
  if (!(c.beta * c.B - c.beta * c.b).is_zero()) bad.push_back("beta*B = b*beta");
  if (!(c.beta * c.alpha).is_zero()) bad.push_back("beta*alpha = 0");
  return bad;
}

Point flatten(const CVTuple& c) {
  const int m = static_cast<int>(c.size());
  Point p;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      p.set(xname(i, j), c.A(i - 1, j - 1));
      p.set(yname(i, j), c.B(i - 1, j - 1));
    }
    p.set(uname(i), c.alpha(i - 1, 0));
    p.set(vname(i), c.beta(0, i - 1));
  }
  p.set("t1", c.a);
  p.set("t2", c.b);
  return p;
}

IdealPresentation cv_ideal(int m, const Field& field) {
  return build_ideal({Family::extended, m, {Tag::t_zero, Tag::add_w}}, field);
}

Point point_P(int m, int m1, int m2) {
  require_split(m, m1, m2);
  Point p;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      const bool diag = i == j;
      const long long a = i <= m1 ? 1 : i + 1;
      const long long b = i > m - m2 ? 1 : m + i + 2;
      p.set(xname(i, j), diag ? Scalar(a) : Scalar(0));
      p.set(yname(i, j), diag ? Scalar(b) : Scalar(0));
    }
    p.set(uname(i), Scalar(i <= m1 ? 1 : 0));
    p.set(vname(i), Scalar(i > m - m2 ? 1 : 0));
  }
  p.set("t1", Scalar(1));
  p.set("t2", Scalar(1));
  return p;
}

VerificationReport check_jacobian_rank_at(int m, const Point& p, const std::string& check_id,
                                          const nlohmann::ordered_json& params, const Field& field) {
  return run_check(check_id, params, [&](VerificationReport& r) {
    const IdealPresentation I = cv_ideal(m, field);
    for (const auto& g : I.gens()) {
      const Scalar value = evaluate(g, p);
      if (!value.is_zero()) r.offending.push_back(g.to_string() + " = " + value.to_string());
    }
    if (!r.offending.empty()) {
      r.status = Status::fail;
      r.details = "point is not on the scheme: " + join(r.offending);
      return;
    }
    const std::size_t expected = static_cast<std::size_t>(m * m + m);
    const std::size_t rank = jacobian_rank(I.gens(), p);
    r.details = "generators vanish; rank=" + std::to_string(rank) + " expected=" + std::to_string(expected);
    r.status = rank == expected ? Status::pass : Status::fail;
    if (rank != expected) r.offending.push_back("rank " + std::to_string(rank));
  });
}

VerificationReport check_jacobian_rank(int m, int m1, int m2, const Field& field) {
  nlohmann::ordered_json params;
  params["m"] = m;
  params["m1"] = m1;
  params["m2"] = m2;
  params["field"] = field.to_string();
  const std::string id = "jacobian:m=" + std::to_string(m) + ",m1=" + std::to_string(m1) + ",m2=" + std::to_string(m2);
  require_split(m, m1, m2);
  return check_jacobian_rank_at(m, point_P(m, m1, m2), id, params, field);
}

CVTuple psi_sample(int m, int m1, int m2, std::mt19937_64& rng, const Field& field) {
  require_split(m, m1, m2);
  if (!field.is_rational() && field.characteristic() <= static_cast<std::uint32_t>(4 * m)) {
    throw HypothesisError("field too small: need p > 4m for pairwise distinct eigenvalues");
  }
  const std::size_t n = static_cast<std::size_t>(m);
  const Scalar zero = field.zero();

  ScalarMatrix g(n, n, zero), gi(n, n, zero);
  for (int attempt = 0;; ++attempt) {
    if (attempt == 100) throw DomainError("no invertible conjugator after 100 draws");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = draw(rng, field);
    if (rank(g) == n) break;
  }
  gi = inverse(g);

  const auto as = distinct(m - m1 + 1, rng, field);  // a0, a1, ..., a_{m−m1}
  const auto bs = distinct(m - m2 + 1, rng, field);  // b0, b1, ..., b_{m−m2}
  std::vector<Scalar> adiag(m1, as[0]), bdiag;
  adiag.insert(adiag.end(), as.begin() + 1, as.end());
  bdiag.assign(bs.begin() + 1, bs.end());
  bdiag.insert(bdiag.end(), m2, bs[0]);

  ScalarMatrix alpha0(n, 1, zero), beta0(1, n, zero);
  for (int i = 0; i < m1; ++i) alpha0(i, 0) = draw(rng, field);
  for (int j = 0; j < m2; ++j) beta0(0, n - m2 + j) = draw(rng, field);

  return CVTuple{g * diagonal(adiag, field) * gi, g * diagonal(bdiag, field) * gi, g * alpha0, beta0 * gi,
                 as[0], bs[0]};
}

CVTuple psi_sample(int m, int m1, int m2, std::uint64_t seed, const Field& field) {
  std::mt19937_64 rng(seed);
  return psi_sample(m, m1, m2, rng, field);
}

VerificationReport check_psi_membership(int m, int m1, int m2, int samples, std::uint64_t seed, const Field& field,
                                        const Budget& budget) {
  nlohmann::ordered_json params;
  params["m"] = m;
  params["m1"] = m1;
  params["m2"] = m2;
  params["samples"] = samples;
  params["seed"] = seed;
  params["field"] = field.to_string();
  const std::string id =
      "psi-membership:m=" + std::to_string(m) + ",m1=" + std::to_string(m1) + ",m2=" + std::to_string(m2);
  require_split(m, m1, m2);
  return run_check(id, params, [&](VerificationReport& r) {
    const IdealPresentation I = cv_ideal(m, field);
    std::seed_seq seq{seed, static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(m1),
                      static_cast<std::uint64_t>(m2)};
    std::mt19937_64 rng(seq);
    for (int k = 0; k < samples; ++k) {
      budget.check();
      const CVTuple c = psi_sample(m, m1, m2, rng, field);
      for (const auto& v : cv_violations(c)) r.offending.push_back("sample " + std::to_string(k) + ": " + v);
      const Point p = flatten(c);
      for (const auto& g : I.gens()) {
        if (!evaluate(g, p).is_zero()) r.offending.push_back("sample " + std::to_string(k) + ": " + g.to_string());
      }
      if (r.offending.size() > 10) break;
    }
    if (r.offending.empty()) {
      r.status = Status::pass;
      r.details = std::to_string(samples) + " samples, all " + std::to_string(I.gens().size()) +
                  " generators vanish exactly";
    } else {
      r.status = Status::fail;
      r.details = "nonvanishing: " + join(r.offending);
    }
  });
}

}  // namespace cmlab::lab
