#pragma once

#include <string>
#include <vector>

#include "cmlab/lab/cv.hpp"
#include "cmlab/lab/report.hpp"

namespace cmlab::lab {

/// One-parameter deformations of a tuple in CV(m), with the parameter c kept
/// symbolic.
///  shear_top        B(c) = B + c·diag-block(α2β2, 0) where β2 kills the
///                   off-diagonal block of A from the left (A = [a'I_r A2; 0 A4])
///  shear_bottom     B(c) = B + c·diag-block(0, B4') with A2·α' = 0
///                   (A = [a'I_r A2; 0 a'I])
///  split_jordan     A(c) = A + c·E11, B(c) = B + (b2/a2)·c·E11 for 2×2
///                   upper triangular A, B with a single eigenvalue each
///  commutator_lift  A(c) = A + N(c), N_{i,m−m2+j} = α'_i β'_j c/(b − b_i),
///                   on diagonal A, B; then A(c)B − BA(c) = c·α·β
enum class FamilyKind { shear_top, shear_bottom, split_jordan, commutator_lift };

/// Role names above; L54, L55, L56 and L59 are accepted as aliases.
FamilyKind parse_family_kind(const std::string& name);
std::string family_kind_name(FamilyKind k);

struct FamilyInstance {
  FamilyKind kind = FamilyKind::shear_top;
  CVTuple tuple;
  /// Block size r for shear_top and shear_bottom.
  int r = 0;
  /// Eigenvector supports for commutator_lift.
  int m1 = 0;
  int m2 = 0;
  /// Fault injection: commutator_lift divides by b instead of b − b_i.
  bool broken_denominator = false;
  /// Distinguishes instances of the same kind and size in check ids.
  std::string variant;

  int m() const { return static_cast<int>(tuple.size()); }
  std::string id() const;
};

/// Throws HypothesisError when the instance is outside the construction's
/// hypotheses (block shapes, rank bounds, eigenvalue distinctness, membership
/// in CV(m)).
void check_hypotheses(const FamilyInstance& inst);

/// Checks the hypotheses (throwing as above), then verifies the identities of
/// the deformation over K[c], and that c = 0 gives back the input tuple. On
/// failure the details carry the nonzero residuals.
VerificationReport family_check(const FamilyInstance& inst, const Field& field);

/// Fixed instances at m = 2 and m = 3 (split_jordan only at m = 2).
std::vector<FamilyInstance> builtin_families(const Field& field);

/// First built-in instance of the kind at size m. For split_jordan at m = 3
/// this is a 3×3 tuple that check_hypotheses rejects.
FamilyInstance builtin_family(FamilyKind kind, int m, const Field& field);

}  // namespace cmlab::lab
