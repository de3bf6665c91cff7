#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cmlab/ideal.hpp"

namespace cmlab::cli {

/// Ideal file:
///
///   # comment
///   vars: x y z
///   field: fp:32003        (optional; q or fp:<p>)
///   x^2 - y                (one generator per line)
///
/// `#` starts a comment anywhere on a line. Blank lines are ignored. The
/// vars line must come before any generator. `field_override`, when set,
/// wins over the file's field line; without either the field is q.
/// Errors are ParseError with the 1-based line and column in the file.
IdealPresentation parse_ideal_text(std::string_view text, const std::optional<Field>& field_override = {},
                                   const std::string& label = "file");

/// Reads and parses a file; a missing file is a DomainError.
IdealPresentation read_ideal_file(const std::string& path, const std::optional<Field>& field_override = {});

/// Inverse of parse_ideal_text (up to comments and spacing).
std::string format_ideal(const IdealPresentation& I);

}  // namespace cmlab::cli
