#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cmlab/ideal.hpp"
#include "cmlab/lab/report.hpp"
#include "cmlab/matrix.hpp"

namespace cmlab::lab {

/// (A, B, α, β, a, b) with AB = BA, Aα = aα, βB = bβ, βα = 0.
struct CVTuple {
  ScalarMatrix A;
  ScalarMatrix B;
  ScalarMatrix alpha;  // m×1
  ScalarMatrix beta;   // 1×m
  Scalar a;
  Scalar b;

  std::size_t size() const { return A.rows(); }
};

/// Names of the defining equations that fail; empty when the tuple is valid.
std::vector<std::string> cv_violations(const CVTuple& c);

/// Values of x, y, u, v, t1, t2 for the tuple.
Point flatten(const CVTuple& c);

/// Generators of J(m)+(t, w_m): [X,Y] entries, (X − t1)u, v(Y − t2), w.
IdealPresentation cv_ideal(int m, const Field& field);

/// Diagonal point with eigenvalue 1 on the first m1 coordinates of A and
/// the last m2 of B, distinct integers elsewhere, α and β all-ones on those
/// coordinates, t1 = t2 = 1. Throws HypothesisError unless m1 + m2 ≤ m.
Point point_P(int m, int m1, int m2);

/// Vanishing precheck, then rank of the Jacobian of cv_ideal(m) at the point
/// against m² + m.
VerificationReport check_jacobian_rank(int m, int m1, int m2, const Field& field = Field::prime(Field::kDefaultPrime));
VerificationReport check_jacobian_rank_at(int m, const Point& p, const std::string& check_id,
                                          const nlohmann::ordered_json& params, const Field& field);

/// One tuple in the image of the parametrization by conjugation: random
/// invertible g, pairwise distinct eigenvalue tuples, random eigenvector
/// coordinates. Over a prime field p must exceed 4m.
CVTuple psi_sample(int m, int m1, int m2, std::mt19937_64& rng, const Field& field);
CVTuple psi_sample(int m, int m1, int m2, std::uint64_t seed, const Field& field);

/// `samples` tuples per call, each checked against every generator of cv_ideal(m).
VerificationReport check_psi_membership(int m, int m1, int m2, int samples, std::uint64_t seed, const Field& field,
                                        const Budget& budget = {});

/// All (m1, m2) with m1 + m2 ≤ m, in lexicographic order.
std::vector<std::pair<int, int>> valid_splits(int m);

}  // namespace cmlab::lab
