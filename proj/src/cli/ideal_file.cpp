#include "cmlab/cli/ideal_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "cmlab/errors.hpp"

namespace cmlab::cli {
namespace {

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::size_t first_nonspace(std::string_view s) {
  std::size_t k = 0;
  while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
  return k;
}

std::string_view trim(std::string_view s) {
  s.remove_prefix(first_nonspace(s));
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// "key:" prefix match; returns the offset of the value.
std::optional<std::size_t> header(std::string_view line, std::string_view key) {
  const std::size_t k = first_nonspace(line);
  if (line.substr(k, key.size()) != key) return std::nullopt;
  std::size_t p = k + key.size();
  while (p < line.size() && line[p] == ' ') ++p;
  if (p >= line.size() || line[p] != ':') return std::nullopt;
  return p + 1;
}

}  // namespace

IdealPresentation parse_ideal_text(std::string_view text, const std::optional<Field>& field_override,
                                   const std::string& label) {
  std::optional<std::vector<std::string>> vars;
  std::optional<Field> file_field;
  std::vector<std::pair<std::size_t, std::string>> lines;  // (line number, text with comment removed)

  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++lineno;
    start = end + 1;
    const std::string_view line = strip_comment(raw);
    if (trim(line).empty()) continue;

    if (auto off = header(line, "vars")) {
      if (vars) throw ParseError("duplicate vars line", lineno, first_nonspace(line) + 1);
      if (!lines.empty()) throw ParseError("vars line after a generator", lineno, first_nonspace(line) + 1);
      std::istringstream in{std::string(line.substr(*off))};
      std::vector<std::string> names;
      for (std::string name; in >> name;) names.push_back(name);
      if (names.empty()) throw ParseError("vars line lists no variables", lineno, *off + 1);
      try {
        VariableSet check(names);
      } catch (const Error& e) {
        throw ParseError(e.what(), lineno, *off + 1);
      }
      vars = std::move(names);
      continue;
    }
    if (auto off = header(line, "field")) {
      if (file_field) throw ParseError("duplicate field line", lineno, first_nonspace(line) + 1);
      if (!lines.empty()) throw ParseError("field line after a generator", lineno, first_nonspace(line) + 1);
      try {
        file_field = Field::parse(trim(line.substr(*off)));
      } catch (const Error& e) {
        throw ParseError(e.what(), lineno, *off + 1 + first_nonspace(line.substr(*off)));
      }
      continue;
    }
    if (!vars) throw ParseError("expected 'vars:' before the first generator", lineno, first_nonspace(line) + 1);
    lines.emplace_back(lineno, std::string(line));
  }
  if (!vars) throw ParseError("missing 'vars:' line", lineno == 0 ? 1 : lineno, 1);

  const Field field = field_override ? *field_override : file_field ? *file_field : Field::rationals();
  const RingPtr ring = make_ring(*vars, field);
  std::vector<Polynomial> gens;
  for (const auto& [n, src] : lines) {
    try {
      gens.push_back(parse_polynomial(src, ring));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), n, e.column());
    } catch (const Error& e) {
      throw ParseError(e.what(), n, first_nonspace(src) + 1);
    }
  }
  return {ring, std::move(gens), label};
}

IdealPresentation read_ideal_file(const std::string& path, const std::optional<Field>& field_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string label = path;
  if (auto slash = label.find_last_of('/'); slash != std::string::npos) label = label.substr(slash + 1);
  return parse_ideal_text(buf.str(), field_override, label);
}

std::string format_ideal(const IdealPresentation& I) {
  std::string s = "# " + I.label() + "\nvars:";
  for (const auto& v : I.vars().names()) s += " " + v;
  s += "\nfield: " + I.field().to_string() + "\n";
  for (const auto& g : I.gens()) s += g.to_string() + "\n";
  return s;
}

}  // namespace cmlab::cli
