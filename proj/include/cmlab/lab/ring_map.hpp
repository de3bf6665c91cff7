#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cmlab/groebner.hpp"
#include "cmlab/ideal.hpp"
#include "cmlab/lab/report.hpp"

namespace cmlab::lab {

/// Homomorphism K[source vars]/source → K[target vars]/(target + witnesses),
/// given by the image of each source variable.
struct RingMap {
  std::string name;
  IdealPresentation source;
  IdealPresentation target;
  /// images[i] is the image of source variable i, in the target ring.
  std::vector<Polynomial> images;
  /// (z, w): target variable z is declared the inverse of w, i.e. z·w − 1
  /// joins the target ideal.
  std::vector<std::pair<std::string, Polynomial>> inverse_witnesses;
  /// Source polynomials that must map into the target ideal.
  std::vector<Polynomial> kernel;
};

/// Throws DomainError unless every source variable has exactly one image in
/// the target ring and every witness is a nonzero target polynomial.
void validate(const RingMap& map);

/// Target ideal with the witness generators adjoined.
IdealPresentation witnessed_target(const RingMap& map);

/// Pass iff every source generator and declared kernel element maps into
/// the witnessed target ideal.
VerificationReport verify_hom(const RingMap& map, const GroebnerOptions& opts = {});

/// Which construction to build.
///  identity         the identity on a given ideal
///  corner_strip     I(n) → J(n−1)|t=1 stripping the last row and column
///  localized_strip  I(n)|x_in=0 with det(X' − x_nn·I) inverted → I(n−1) + witness
///  triangular       framed_det(n) localized, v = e_n → J(n−1)|t=0 + w + witnesses
enum class MapKind { identity, corner_strip, localized_strip, triangular };

MapKind parse_map_kind(const std::string& name);
std::string map_kind_name(MapKind k);

RingMap identity_map(const IdealPresentation& I);
/// With `corrupt`, x21 is sent to v1 + 1 instead of v1.
RingMap corner_strip_map(int n, const Field& field, bool corrupt = false);
RingMap localized_strip_map(int n, const Field& field);
RingMap triangular_map(int n, const Field& field);

}  // namespace cmlab::lab
