#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cmlab/ideal.hpp"
#include "cmlab/matrix.hpp"

namespace cmlab::lab {

/// Presentation families.
///  commuting     pairs (X, Y) with [X, Y] = 0
///  extended      [X, Y] − t·u·v, (X − t1)u, v(Y − t2) over x, y, u, v, t1, t2, t
///  commuting_cut commuting with x_{in} = 0 for i < n
///  framed        [X, Y] − u·v, (X − t1)u, v(X − t2), v(Y − t3), v'(Y − t3)
///  framed_det    framed plus det(X − t2·I)
enum class Family { commuting, extended, commuting_cut, framed, framed_det };

enum class Tag { t_zero, t_one, add_w, kill_xin, kill_yni, det_t2 };

/// Short names used in files and on the command line: R, R_tilde, R1,
/// R_prime, R2 and t=0, t=1, add_w, kill_xin, kill_yni, det_t2.
Family parse_family(const std::string& name);
std::string family_name(Family f);
Tag parse_tag(const std::string& name);
std::string tag_name(Tag t);

struct SchemeSpec {
  Family family = Family::commuting;
  int n = 1;
  std::set<Tag> tags;
};

/// Throws HypothesisError on an invalid tag combination or n < 1.
void validate(const SchemeSpec& spec);

/// Generators in row-major entry order, one block after another. Tags act by
/// substitution and shrink the variable set; identically zero generators
/// are dropped.
IdealPresentation build_ideal(const SchemeSpec& spec, const Field& field);

/// Krull dimension the construction is known to have, when the spec is one
/// of: R, R with kill_xin, R1; R_tilde with t=0, t=0 and add_w, t=1, add_w.
std::optional<std::size_t> known_dimension(const SchemeSpec& spec);

/// Replaces each named variable by a constant and removes it from the
/// variable set. Zero generators are dropped.
IdealPresentation specialize(const IdealPresentation& I, const std::map<std::string, Scalar>& values,
                             const std::string& label);

/// I with extra generators, which must live in I's ring.
IdealPresentation extend(const IdealPresentation& I, const std::vector<Polynomial>& extra, const std::string& label);

/// I on a larger variable set: `names` are appended after I's variables.
IdealPresentation adjoin_variables(const IdealPresentation& I, const std::vector<std::string>& names,
                                   const std::string& label);

// Variable names.
std::string xname(int i, int j);
std::string yname(int i, int j);
std::string uname(int i);
std::string vname(int i);
std::string vpname(int i);

/// n×n matrix of the variables prefix{i}{j} of `ring`.
PolyMatrix variable_matrix(const RingPtr& ring, char prefix, int n);
/// Column (or row) of prefix{i}, i = 1..n.
PolyMatrix variable_column(const RingPtr& ring, const std::string& prefix, int n);
PolyMatrix variable_row(const RingPtr& ring, const std::string& prefix, int n);

PolyMatrix poly_identity(const RingPtr& ring, int n);
PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b);

/// Entries in row-major order.
std::vector<Polynomial> entries(const PolyMatrix& m);

}  // namespace cmlab::lab
