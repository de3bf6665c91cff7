#include "cmlab/lab/families.hpp"

#include <tuple>

#include "cmlab/errors.hpp"

namespace cmlab::lab {
namespace {

const std::vector<std::tuple<FamilyKind, std::string, std::string>> kKinds = {
    {FamilyKind::shear_top, "shear_top", "L54"},
    {FamilyKind::shear_bottom, "shear_bottom", "L55"},
    {FamilyKind::split_jordan, "split_jordan", "L56"},
    {FamilyKind::commutator_lift, "commutator_lift", "L59"},
};

ScalarMatrix coerce(const ScalarMatrix& m, const Field& field) {
  ScalarMatrix out(m.rows(), m.cols(), field.zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = field.coerce(m(i, j));
  return out;
}

CVTuple coerce(const CVTuple& t, const Field& field) {
  return {coerce(t.A, field), coerce(t.B, field), coerce(t.alpha, field), coerce(t.beta, field),
          field.coerce(t.a), field.coerce(t.b)};
}

bool is_scalar_block(const ScalarMatrix& m, std::size_t r0, std::size_t n, const Scalar& s) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(m(r0 + i, r0 + j) == (i == j ? s : Scalar(0)))) return false;
  return true;
}

bool is_diagonal(const ScalarMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

void require(bool ok, const FamilyInstance& inst, const std::string& what) {
  if (!ok) throw HypothesisError(inst.id() + ": " + what);
}

// Vectors for the shear constructions.
struct ShearData {
  ScalarMatrix left;   // α2 (r×1) or α' ((m−r)×1)
  ScalarMatrix right;  // β2 (1×r) or the row of B4' = α'·right
};

ShearData shear_top_data(const CVTuple& t, int r, const Field& field) {
  const std::size_t m = t.size(), rr = r;
  const ScalarMatrix A2 = t.A.block(0, rr, rr, m - rr);
  // β2 with β2·A2 = 0 is a null vector of A2ᵗ.
  const auto ns = nullspace(A2.transpose());
  ScalarMatrix beta2(1, rr, field.zero()), alpha2(rr, 1, field.zero());
  for (std::size_t k = 0; k < rr; ++k) beta2(0, k) = ns.front()[k];
  for (std::size_t k = 0; k < rr; ++k) {
    if (!beta2(0, k).is_zero()) {
      alpha2(k, 0) = field.one();
      break;
    }
  }
  return {alpha2, beta2};
}

ShearData shear_bottom_data(const CVTuple& t, int r, const Field& field) {
  const std::size_t m = t.size(), rr = r, s = m - rr;
  const ScalarMatrix A2 = t.A.block(0, rr, rr, s);
  const auto ns = nullspace(A2);
  ScalarMatrix alpha(s, 1, field.zero());
  for (std::size_t k = 0; k < s; ++k) alpha(k, 0) = ns.front()[k];
  const ScalarMatrix beta1 = t.beta.block(0, rr, 1, s);
  if (!(beta1 * alpha)(0, 0).is_zero()) return {alpha, beta1};
  // γ with γ·α' = 1: a scaled coordinate row.
  ScalarMatrix gamma(1, s, field.zero());
  for (std::size_t k = 0; k < s; ++k) {
    if (!alpha(k, 0).is_zero()) {
      gamma(0, k) = alpha(k, 0).inverse();
      break;
    }
  }
  return {alpha, gamma};
}

class Residuals {
 public:
  void add(const std::string& name, const PolyMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero())
          bad_.push_back(name + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "] = " + m(i, j).to_string());
  }
  void add_nonzero(const std::string& name, const Polynomial& p) {
    if (p.is_zero()) bad_.push_back(name + " vanishes");
  }
  std::vector<std::string>& list() { return bad_; }

 private:
  std::vector<std::string> bad_;
};

}  // namespace

FamilyKind parse_family_kind(const std::string& name) {
  for (const auto& [k, role, alias] : kKinds) {
    if (name == role || name == alias) return k;
  }
  throw DomainError("unknown family kind '" + name + "'");
}

std::string family_kind_name(FamilyKind k) {
  for (const auto& [g, role, alias] : kKinds) {
    if (g == k) return role;
  }
  return "?";
}

std::string FamilyInstance::id() const {
  std::string s = family_kind_name(kind) + ":m=" + std::to_string(m());
  if (kind == FamilyKind::shear_top || kind == FamilyKind::shear_bottom) s += ",r=" + std::to_string(r);
  if (kind == FamilyKind::commutator_lift) s += ",m1=" + std::to_string(m1) + ",m2=" + std::to_string(m2);
  if (!variant.empty()) s += ":" + variant;
  if (broken_denominator) s += ":broken";
  return s;
}

void check_hypotheses(const FamilyInstance& inst) {
  const CVTuple& t = inst.tuple;
  const std::size_t m = t.size();
  require(m >= 1 && t.A.is_square(), inst, "A must be square");
  const auto bad = cv_violations(t);
  require(bad.empty(), inst, "tuple is not in CV(m): " + (bad.empty() ? std::string() : bad.front()));

  switch (inst.kind) {
    case FamilyKind::shear_top:
    case FamilyKind::shear_bottom: {
      const bool top = inst.kind == FamilyKind::shear_top;
      require(inst.r > 0 && static_cast<std::size_t>(inst.r) < m, inst, "need 0 < r < m");
      const std::size_t r = inst.r, s = m - r;
      const Scalar ap = t.A(0, 0);
      require(is_scalar_block(t.A, 0, r, ap), inst, "top-left block of A must be scalar");
      require(t.A.block(r, 0, s, r).is_zero(), inst, "A must be block upper triangular");
      require(t.B.block(r, 0, s, r).is_zero(), inst, "B must be block upper triangular");
      require(t.beta.block(0, 0, 1, r).is_zero(), inst, "beta must vanish on the first r coordinates");
      const std::size_t rk = rank(t.A.block(0, r, r, s));
      if (top) {
        require(rk < r, inst, "need rank(A2) < r");
      } else {
        require(is_scalar_block(t.A, r, s, ap), inst, "bottom-right block of A must equal the top-left scalar");
        require(rk < s, inst, "need rank(A2) < m - r");
      }
      break;
    }
    case FamilyKind::split_jordan:
      require(m == 2, inst, "split_jordan is defined only for 2x2 tuples");
      require(t.A(1, 0).is_zero() && t.A(0, 0) == t.A(1, 1), inst, "A must be upper triangular with one eigenvalue");
      require(!t.A(0, 1).is_zero(), inst, "A must not be scalar");
      require(t.B(1, 0).is_zero() && t.B(0, 0) == t.B(1, 1), inst, "B must be upper triangular with one eigenvalue");
      require(t.alpha(1, 0).is_zero(), inst, "alpha must be a multiple of e1");
      break;
    case FamilyKind::commutator_lift: {
      require(inst.m1 >= 0 && inst.m2 >= 0 && static_cast<std::size_t>(inst.m1 + inst.m2) <= m, inst,
              "need m1 + m2 <= m");
      require(is_diagonal(t.A) && is_diagonal(t.B), inst, "A and B must be diagonal");
      const std::size_t m1 = inst.m1, m2 = inst.m2;
      std::vector<Scalar> as{t.a}, bs{t.b};
      for (std::size_t i = 0; i < m; ++i) {
        if (i < m1) require(t.A(i, i) == t.a, inst, "A must equal a on the first m1 coordinates");
        else as.push_back(t.A(i, i));
        if (i >= m - m2) require(t.B(i, i) == t.b, inst, "B must equal b on the last m2 coordinates");
        else bs.push_back(t.B(i, i));
        if (i >= m1) require(t.alpha(i, 0).is_zero(), inst, "alpha must vanish after m1");
        if (i < m - m2) require(t.beta(0, i).is_zero(), inst, "beta must vanish before m - m2");
      }
      for (const auto* v : {&as, &bs})
        for (std::size_t i = 0; i < v->size(); ++i)
          for (std::size_t j = i + 1; j < v->size(); ++j)
            require(!((*v)[i] == (*v)[j]), inst, "eigenvalues must be pairwise distinct");
      break;
    }
  }
}

VerificationReport family_check(const FamilyInstance& raw, const Field& field) {
  FamilyInstance inst = raw;
  inst.tuple = coerce(raw.tuple, field);
  check_hypotheses(inst);

  nlohmann::ordered_json params;
  params["family"] = family_kind_name(inst.kind);
  params["m"] = inst.m();
  if (inst.kind == FamilyKind::shear_top || inst.kind == FamilyKind::shear_bottom) params["r"] = inst.r;
  if (inst.kind == FamilyKind::commutator_lift) {
    params["m1"] = inst.m1;
    params["m2"] = inst.m2;
  }
  params["field"] = field.to_string();

  return run_check("family:" + inst.id(), params, [&](VerificationReport& rep) {
    const CVTuple& t = inst.tuple;
    const std::size_t m = t.size();
    const RingPtr ring = make_ring(std::vector<std::string>{"c"}, field);
    const Polynomial c = Polynomial::variable(ring, "c");
    auto P = [&](const ScalarMatrix& s) { return to_poly(s, ring); };
    auto K = [&](const Scalar& s) { return Polynomial::constant(ring, s); };
    const PolyMatrix A = P(t.A), B = P(t.B), alpha = P(t.alpha), beta = P(t.beta);
    const Polynomial a = K(t.a), b = K(t.b);
    auto at_zero = [&](const PolyMatrix& M) {
      PolyMatrix out(M.rows(), M.cols(), Polynomial(ring));
      const std::vector<Polynomial> images{Polynomial(ring)};
      for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) out(i, j) = substitute(M(i, j), images, ring);
      return out;
    };
    auto trace = [&](const PolyMatrix& M) {
      Polynomial s(ring);
      for (std::size_t i = 0; i < M.rows(); ++i) s += M(i, i);
      return s;
    };

    Residuals res;
    switch (inst.kind) {
      case FamilyKind::shear_top: {
        const auto d = shear_top_data(t, inst.r, field);
        PolyMatrix shift(m, m, Polynomial(ring));
        shift.set_block(0, 0, P(d.left * d.right));
        const PolyMatrix Bc = B + shift * c;
        res.add("A*B(c) - B(c)*A", A * Bc - Bc * A);
        res.add("beta*B(c) - b*beta", beta * Bc - beta * b);
        res.add("A*alpha - a*alpha", A * alpha - alpha * a);
        res.add("beta*alpha", beta * alpha);
        res.add("B(0) - B", at_zero(Bc) - B);
        res.add_nonzero("trace shift", trace(Bc) - trace(B));
        break;
      }
      case FamilyKind::shear_bottom: {
        const auto d = shear_bottom_data(t, inst.r, field);
        PolyMatrix shift(m, m, Polynomial(ring));
        shift.set_block(inst.r, inst.r, P(d.left * d.right));
        const PolyMatrix Bc = B + shift * c;
        const ScalarMatrix beta1 = t.beta.block(0, inst.r, 1, m - inst.r);
        const Polynomial bc = b + c * K((beta1 * d.left)(0, 0));
        res.add("A*B(c) - B(c)*A", A * Bc - Bc * A);
        res.add("beta*B(c) - b(c)*beta", beta * Bc - beta * bc);
        res.add("A*alpha - a*alpha", A * alpha - alpha * a);
        res.add("beta*alpha", beta * alpha);
        res.add("B(0) - B", at_zero(Bc) - B);
        res.add_nonzero("trace shift", trace(Bc) - trace(B));
        break;
      }
      case FamilyKind::split_jordan: {
        PolyMatrix e11(2, 2, Polynomial(ring));
        e11(0, 0) = c;
        const PolyMatrix Ac = A + e11;
        const PolyMatrix Bc = B + e11 * K(t.B(0, 1) / t.A(0, 1));
        res.add("A(c)*B(c) - B(c)*A(c)", Ac * Bc - Bc * Ac);
        res.add("beta*B(c) - b*beta", beta * Bc - beta * b);
        res.add("A(c)*alpha - (a+c)*alpha", Ac * alpha - alpha * (a + c));
        res.add("beta*alpha", beta * alpha);
        res.add("A(0) - A", at_zero(Ac) - A);
        res.add("B(0) - B", at_zero(Bc) - B);
        break;
      }
      case FamilyKind::commutator_lift: {
        const std::size_t m1 = inst.m1, m2 = inst.m2;
        PolyMatrix N(m, m, Polynomial(ring));
        for (std::size_t i = 0; i < m1; ++i) {
          const Scalar denom = inst.broken_denominator ? t.b : t.b - t.B(i, i);
          if (denom.is_zero()) throw DomainError("zero denominator in the lift table");
          for (std::size_t j = 0; j < m2; ++j) {
            const std::size_t col = m - m2 + j;
            N(i, col) = c * K(t.alpha(i, 0) * t.beta(0, col) / denom);
          }
        }
        const PolyMatrix Ac = A + N;
        res.add("A(c)*B - B*A(c) - c*alpha*beta", Ac * B - B * Ac - (alpha * beta) * c);
        res.add("A(c)*alpha - a*alpha", Ac * alpha - alpha * a);
        res.add("beta*B - b*beta", beta * B - beta * b);
        res.add("beta*alpha", beta * alpha);
        res.add("A(0) - A", at_zero(Ac) - A);
        break;
      }
    }

    rep.offending = std::move(res.list());
    if (rep.offending.empty()) {
      rep.status = Status::pass;
      rep.details = "all identities hold in K[c]; c = 0 recovers the input tuple";
    } else {
      rep.status = Status::fail;
      rep.details = "nonzero residuals: ";
      for (std::size_t k = 0; k < rep.offending.size(); ++k) rep.details += (k ? "; " : "") + rep.offending[k];
    }
  });
}

std::vector<FamilyInstance> builtin_families(const Field& field) {
  auto s = [&](long long v) { return field.from_int(v); };
  auto mat = [&](std::size_t r, std::size_t c, std::initializer_list<long long> vals) {
    ScalarMatrix out(r, c, field.zero());
    std::size_t k = 0;
    for (long long v : vals) {
      out(k / c, k % c) = s(v);
      ++k;
    }
    return out;
  };
  auto tuple = [&](ScalarMatrix A, ScalarMatrix B, ScalarMatrix alpha, ScalarMatrix beta, long long a, long long b) {
    return CVTuple{std::move(A), std::move(B), std::move(alpha), std::move(beta), s(a), s(b)};
  };
  std::vector<FamilyInstance> out;
  auto shear = [&](FamilyKind k, int r, CVTuple t, std::string variant = "") {
    FamilyInstance f;
    f.kind = k;
    f.r = r;
    f.variant = std::move(variant);
    f.tuple = std::move(t);
    out.push_back(std::move(f));
  };
  auto lift = [&](int m1, int m2, CVTuple t) {
    FamilyInstance f;
    f.kind = FamilyKind::commutator_lift;
    f.m1 = m1;
    f.m2 = m2;
    f.tuple = std::move(t);
    out.push_back(std::move(f));
  };

  shear(FamilyKind::shear_top, 1,
        tuple(mat(2, 2, {0, 0, 0, 0}), mat(2, 2, {1, 1, 0, 1}), mat(2, 1, {1, 0}), mat(1, 2, {0, 1}), 0, 1));
  shear(FamilyKind::shear_top, 2,
        tuple(mat(3, 3, {0, 0, 1, 0, 0, 0, 0, 0, 0}), mat(3, 3, {1, 0, 1, 0, 1, 0, 0, 0, 1}), mat(3, 1, {1, 0, 0}),
              mat(1, 3, {0, 0, 1}), 0, 1));
  shear(FamilyKind::shear_bottom, 1,
        tuple(mat(2, 2, {0, 0, 0, 0}), mat(2, 2, {1, 1, 0, 2}), mat(2, 1, {1, 0}), mat(1, 2, {0, 1}), 0, 2));
  // β vanishes, so B4' comes from the γ branch.
  shear(FamilyKind::shear_bottom, 1,
        tuple(mat(2, 2, {0, 0, 0, 0}), mat(2, 2, {1, 0, 0, 1}), mat(2, 1, {1, 0}), mat(1, 2, {0, 0}), 0, 5),
        "null_beta");
  shear(FamilyKind::shear_bottom, 1,
        tuple(mat(3, 3, {0, 1, 0, 0, 0, 0, 0, 0, 0}), mat(3, 3, {1, 0, 1, 0, 1, 0, 0, 0, 1}), mat(3, 1, {1, 0, 0}),
              mat(1, 3, {0, 0, 1}), 0, 1));
  {
    FamilyInstance f;
    f.kind = FamilyKind::split_jordan;
    f.tuple = tuple(mat(2, 2, {0, 1, 0, 0}), mat(2, 2, {1, 2, 0, 1}), mat(2, 1, {1, 0}), mat(1, 2, {0, 1}), 0, 1);
    out.push_back(std::move(f));
  }
  lift(1, 1, tuple(mat(2, 2, {0, 0, 0, 1}), mat(2, 2, {0, 0, 0, 1}), mat(2, 1, {1, 0}), mat(1, 2, {0, 1}), 0, 1));
  lift(1, 1,
       tuple(mat(3, 3, {0, 0, 0, 0, 2, 0, 0, 0, 3}), mat(3, 3, {4, 0, 0, 0, 5, 0, 0, 0, 1}), mat(3, 1, {1, 0, 0}),
             mat(1, 3, {0, 0, 1}), 0, 1));
  lift(2, 1,
       tuple(mat(3, 3, {0, 0, 0, 0, 0, 0, 0, 0, 2}), mat(3, 3, {3, 0, 0, 0, 4, 0, 0, 0, 1}), mat(3, 1, {1, 2, 0}),
             mat(1, 3, {0, 0, 5}), 0, 1));
  return out;
}

FamilyInstance builtin_family(FamilyKind kind, int m, const Field& field) {
  for (auto& f : builtin_families(field)) {
    if (f.kind == kind && f.m() == m) return f;
  }
  if (kind == FamilyKind::split_jordan) {
    // Outside the construction: kept so callers see the hypothesis failure.
    const ScalarMatrix A = [&] {
      ScalarMatrix x(m, m, field.zero());
      if (m > 1) x(0, 1) = field.one();
      return x;
    }();
    FamilyInstance f;
    f.kind = kind;
    f.tuple = CVTuple{A, ScalarMatrix::identity(m, field.zero(), field.one()), ScalarMatrix(m, 1, field.zero()),
                      ScalarMatrix(1, m, field.zero()), field.zero(), field.one()};
    return f;
  }
  throw HypothesisError("no built-in " + family_kind_name(kind) + " instance of size " + std::to_string(m));
}

}  // namespace cmlab::lab
