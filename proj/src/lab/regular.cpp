#include "cmlab/lab/regular.hpp"

#include "cmlab/errors.hpp"

namespace cmlab::lab {
namespace {

// Rows of X·C − C·X = 0 as linear forms in the entries of C (row-major).
void commutation_rows(const ScalarMatrix& X, ScalarMatrix& sys, std::size_t row0) {
  const std::size_t n = X.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = row0 + i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        sys(row, k * n + j) += X(i, k);
        sys(row, i * n + k) -= X(k, j);
      }
    }
  }
}

}  // namespace

RegularPointResult regular_point_test(const ScalarMatrix& A, const ScalarMatrix& B) {
  if (!A.is_square() || !B.is_square() || A.rows() != B.rows()) {
    throw HypothesisError("regular point test needs two square matrices of the same size");
  }
  if (!(A * B == B * A)) throw HypothesisError("matrices do not commute");
  const std::size_t n = A.rows();
  ScalarMatrix sys(2 * n * n, n * n, A.zero() * Scalar(0));
  commutation_rows(A, sys, 0);
  commutation_rows(B, sys, n * n);
  RegularPointResult r;
  r.centralizer_dimension = n * n - rank(sys);
  r.regular = r.centralizer_dimension == n;
  return r;
}

ScalarMatrix jordan_block(int n, const Field& field) {
  ScalarMatrix J(n, n, field.zero());
  for (int i = 0; i + 1 < n; ++i) J(i, i + 1) = field.one();
  return J;
}

std::vector<RegularCase> builtin_regular_cases(const Field& field, int max_n) {
  auto diag = [&](std::initializer_list<long long> d) {
    ScalarMatrix m(d.size(), d.size(), field.zero());
    std::size_t k = 0;
    for (long long v : d) m(k, k) = field.from_int(v), ++k;
    return m;
  };
  std::vector<RegularCase> out;
  out.push_back({"diagonal:n=2", diag({1, 2}), diag({3, 4}), 2, true});
  out.push_back({"zero:n=2", diag({0, 0}), diag({0, 0}), 4, false});
  for (int n = 1; n <= max_n; ++n) {
    out.push_back({"jordan:n=" + std::to_string(n), jordan_block(n, field), ScalarMatrix(n, n, field.zero()),
                   static_cast<std::size_t>(n), true});
  }
  return out;
}

VerificationReport check_regular_point(const RegularCase& c, const Field& field) {
  nlohmann::ordered_json params;
  params["case"] = c.name;
  params["n"] = c.A.rows();
  params["field"] = field.to_string();
  return run_check("regular-point:" + c.name, params, [&](VerificationReport& rep) {
    const auto r = regular_point_test(c.A, c.B);
    rep.details = "centralizer dimension=" + std::to_string(r.centralizer_dimension) +
                  (r.regular ? " regular" : " not regular") + "; expected " + std::to_string(c.expected_dimension) +
                  (c.expected_regular ? " regular" : " not regular");
    if (r.centralizer_dimension == c.expected_dimension && r.regular == c.expected_regular) {
      rep.status = Status::pass;
    } else {
      rep.status = Status::fail;
      rep.offending.push_back("dimension " + std::to_string(r.centralizer_dimension));
    }
  });
}

}  // namespace cmlab::lab
