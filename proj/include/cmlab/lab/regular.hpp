#pragma once

#include <string>
#include <vector>

#include "cmlab/lab/report.hpp"
#include "cmlab/matrix.hpp"

namespace cmlab::lab {

struct RegularPointResult {
  /// dim {C : AC = CA, BC = CB}
  std::size_t centralizer_dimension = 0;
  /// The pair is regular iff that dimension equals n.
  bool regular = false;
};

/// Exact elimination on the 2n² × n² system. Throws HypothesisError unless A
/// and B are square of equal size and commute.
RegularPointResult regular_point_test(const ScalarMatrix& A, const ScalarMatrix& B);

/// Named pair with the expected answer, for reports.
struct RegularCase {
  std::string name;
  ScalarMatrix A;
  ScalarMatrix B;
  std::size_t expected_dimension;
  bool expected_regular;
};

/// diag(1,2) with diag(3,4); the zero pair at n = 2; a nilpotent Jordan block
/// with 0 for n = 1..max_n.
std::vector<RegularCase> builtin_regular_cases(const Field& field, int max_n = 4);

/// nilpotent Jordan block of size n (ones on the superdiagonal)
ScalarMatrix jordan_block(int n, const Field& field);

VerificationReport check_regular_point(const RegularCase& c, const Field& field);

}  // namespace cmlab::lab
