#include "cmlab/lab/schemes.hpp"

#include <algorithm>

#include "cmlab/errors.hpp"

namespace cmlab::lab {
namespace {

const std::vector<std::pair<Family, std::string>> kFamilies = {
    {Family::commuting, "R"},     {Family::extended, "R_tilde"}, {Family::commuting_cut, "R1"},
    {Family::framed, "R_prime"}, {Family::framed_det, "R2"},
};

const std::vector<std::pair<Tag, std::string>> kTags = {
    {Tag::t_zero, "t=0"},       {Tag::t_one, "t=1"},         {Tag::add_w, "add_w"},
    {Tag::kill_xin, "kill_xin"}, {Tag::kill_yni, "kill_yni"}, {Tag::det_t2, "det_t2"},
};

std::string idx(int i) { return std::to_string(i); }

std::vector<std::string> square_names(char prefix, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.push_back(prefix + idx(i) + idx(j));
  return out;
}

std::vector<std::string> vector_names(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(prefix + idx(i));
  return out;
}

void append(std::vector<std::string>& to, const std::vector<std::string>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

void append(std::vector<Polynomial>& to, const PolyMatrix& m) {
  for (auto& e : entries(m)) to.push_back(std::move(e));
}

std::string base_label(Family f, int n) {
  switch (f) {
    case Family::commuting:
      return "I(" + idx(n) + ")";
    case Family::extended:
      return "J(" + idx(n) + ")";
    case Family::commuting_cut:
      return "I(" + idx(n) + ")+(x_in)";
    case Family::framed:
      return "J'(" + idx(n) + ")";
    case Family::framed_det:
      return "J'(" + idx(n) + ")+(det)";
  }
  return "?";
}

}  // namespace

Family parse_family(const std::string& name) {
  for (const auto& [f, s] : kFamilies) {
    if (s == name) return f;
  }
  throw DomainError("unknown family '" + name + "'");
}

std::string family_name(Family f) {
  for (const auto& [g, s] : kFamilies) {
    if (g == f) return s;
  }
  return "?";
}

Tag parse_tag(const std::string& name) {
  for (const auto& [t, s] : kTags) {
    if (s == name) return t;
  }
  throw DomainError("unknown tag '" + name + "'");
}

std::string tag_name(Tag t) {
  for (const auto& [g, s] : kTags) {
    if (g == t) return s;
  }
  return "?";
}

std::string xname(int i, int j) { return "x" + idx(i) + idx(j); }
std::string yname(int i, int j) { return "y" + idx(i) + idx(j); }
std::string uname(int i) { return "u" + idx(i); }
std::string vname(int i) { return "v" + idx(i); }
std::string vpname(int i) { return "vp" + idx(i); }

void validate(const SchemeSpec& spec) {
  if (spec.n < 1) throw HypothesisError("size must be at least 1");
  if (spec.n > 9) throw HypothesisError("sizes above 9 are not supported by the variable naming");
  const auto has = [&](Tag t) { return spec.tags.count(t) != 0; };
  const Family f = spec.family;
  const bool extended = f == Family::extended;
  const bool framed = f == Family::framed || f == Family::framed_det;
  const bool commuting = f == Family::commuting || f == Family::commuting_cut;
  if ((has(Tag::t_zero) || has(Tag::t_one)) && !extended) {
    throw HypothesisError("t=0 and t=1 apply only to R_tilde");
  }
  if (has(Tag::t_zero) && has(Tag::t_one)) throw HypothesisError("t=0 and t=1 are mutually exclusive");
  if (has(Tag::add_w) && !(extended || framed)) throw HypothesisError("add_w applies only to R_tilde and R_prime");
  if ((has(Tag::kill_xin) || has(Tag::kill_yni)) && !commuting) {
    throw HypothesisError("kill_xin and kill_yni apply only to R and R1");
  }
  if (has(Tag::det_t2) && f != Family::framed) throw HypothesisError("det_t2 applies only to R_prime");
}

PolyMatrix variable_matrix(const RingPtr& ring, char prefix, int n) {
  PolyMatrix m(n, n, Polynomial(ring));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m(i - 1, j - 1) = Polynomial::variable(ring, prefix + idx(i) + idx(j));
  return m;
}

PolyMatrix variable_column(const RingPtr& ring, const std::string& prefix, int n) {
  PolyMatrix m(n, 1, Polynomial(ring));
  for (int i = 1; i <= n; ++i) m(i - 1, 0) = Polynomial::variable(ring, prefix + idx(i));
  return m;
}

PolyMatrix variable_row(const RingPtr& ring, const std::string& prefix, int n) {
  return variable_column(ring, prefix, n).transpose();
}

PolyMatrix poly_identity(const RingPtr& ring, int n) {
  return PolyMatrix::identity(n, Polynomial(ring), Polynomial::constant(ring, ring->field.one()));
}

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b) { return a * b - b * a; }

std::vector<Polynomial> entries(const PolyMatrix& m) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

std::optional<std::size_t> known_dimension(const SchemeSpec& spec) {
  validate(spec);
  const std::size_t n = spec.n;
  using Tags = std::set<Tag>;
  switch (spec.family) {
    case Family::commuting:
      if (spec.tags.empty()) return n * n + n;
      if (spec.tags == Tags{Tag::kill_xin}) return n * n + 1;
      return std::nullopt;
    case Family::commuting_cut:
      if (spec.tags.empty()) return n * n + 1;
      return std::nullopt;
    case Family::extended:
      if (spec.tags == Tags{Tag::t_zero} || spec.tags == Tags{Tag::t_zero, Tag::add_w} ||
          spec.tags == Tags{Tag::t_one}) {
        return n * n + n + 2;
      }
      if (spec.tags == Tags{Tag::add_w}) return n * n + n + 3;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

IdealPresentation specialize(const IdealPresentation& I, const std::map<std::string, Scalar>& values,
                             const std::string& label) {
  std::vector<std::string> kept;
  for (const auto& name : I.vars().names()) {
    if (!values.count(name)) kept.push_back(name);
  }
  for (const auto& [name, v] : values) I.vars().index(name);  // reject unknown names
  const RingPtr target = make_ring(kept, I.field());

  std::vector<Polynomial> images;
  for (const auto& name : I.vars().names()) {
    auto it = values.find(name);
    images.push_back(it == values.end() ? Polynomial::variable(target, name) : Polynomial::constant(target, it->second));
  }
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) {
    Polynomial s = substitute(g, images, target);
    if (!s.is_zero()) gens.push_back(std::move(s));
  }
  return {target, std::move(gens), label};
}

IdealPresentation extend(const IdealPresentation& I, const std::vector<Polynomial>& extra, const std::string& label) {
  std::vector<Polynomial> gens = I.gens();
  for (const auto& e : extra) {
    if (!e.is_zero()) gens.push_back(e.in_ring(I.ring()));
  }
  return {I.ring(), std::move(gens), label};
}

IdealPresentation adjoin_variables(const IdealPresentation& I, const std::vector<std::string>& names,
                                   const std::string& label) {
  auto all = I.vars().names();
  all.insert(all.end(), names.begin(), names.end());
  const RingPtr ring = make_ring(all, I.field());
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(change_ring(g, ring));
  return {ring, std::move(gens), label};
}

IdealPresentation build_ideal(const SchemeSpec& spec, const Field& field) {
  validate(spec);
  const int n = spec.n;
  const Family f = spec.family;
  const auto has = [&](Tag t) { return spec.tags.count(t) != 0; };
  const bool extended = f == Family::extended;
  const bool framed = f == Family::framed || f == Family::framed_det;

  std::vector<std::string> names = square_names('x', n);
  append(names, square_names('y', n));
  if (extended || framed) {
    append(names, vector_names("u", n));
    append(names, vector_names("v", n));
  }
  if (framed) append(names, vector_names("vp", n));
  if (extended) append(names, {"t1", "t2", "t"});
  if (framed) append(names, {"t1", "t2", "t3"});
  const RingPtr ring = make_ring(names, field);

  const PolyMatrix X = variable_matrix(ring, 'x', n);
  const PolyMatrix Y = variable_matrix(ring, 'y', n);
  const PolyMatrix I = poly_identity(ring, n);
  auto var = [&](const std::string& s) { return Polynomial::variable(ring, s); };

  std::vector<Polynomial> gens;
  if (extended) {
    const PolyMatrix u = variable_column(ring, "u", n), v = variable_row(ring, "v", n);
    append(gens, commutator(X, Y) - (u * v) * var("t"));
    append(gens, (X - I * var("t1")) * u);
    append(gens, v * (Y - I * var("t2")));
  } else if (framed) {
    const PolyMatrix u = variable_column(ring, "u", n), v = variable_row(ring, "v", n);
    const PolyMatrix vp = variable_row(ring, "vp", n);
    append(gens, commutator(X, Y) - u * v);
    append(gens, (X - I * var("t1")) * u);
    append(gens, v * (X - I * var("t2")));
    append(gens, v * (Y - I * var("t3")));
    append(gens, vp * (Y - I * var("t3")));
  } else {
    append(gens, commutator(X, Y));
  }
  std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });

  std::string label = base_label(f, n);
  std::vector<std::string> notes;
  std::map<std::string, Scalar> values;
  if (f == Family::commuting_cut || has(Tag::kill_xin)) {
    for (int i = 1; i < n; ++i) values[xname(i, n)] = 0;
    if (f != Family::commuting_cut) notes.push_back("x_in");
  }
  if (has(Tag::kill_yni)) {
    for (int i = 1; i < n; ++i) values[yname(n, i)] = 0;
    notes.push_back("y_ni");
  }
  if (has(Tag::t_zero)) {
    values["t"] = 0;
    notes.push_back("t");
  }
  if (has(Tag::t_one)) {
    values["t"] = 1;
    notes.push_back("t-1");
  }
  if (has(Tag::add_w)) notes.push_back("w" + idx(n));
  if (has(Tag::det_t2)) notes.push_back("det");
  if (!notes.empty()) {
    label += "+(";
    for (std::size_t k = 0; k < notes.size(); ++k) label += (k ? "," : "") + notes[k];
    label += ")";
  }

  IdealPresentation out = specialize(IdealPresentation(ring, gens, label), values, label);
  std::vector<Polynomial> extra;
  const RingPtr& r = out.ring();
  if (has(Tag::add_w)) {
    Polynomial w(r);
    for (int i = 1; i <= n; ++i) w += Polynomial::variable(r, uname(i)) * Polynomial::variable(r, vname(i));
    extra.push_back(w);
  }
  if (f == Family::framed_det || has(Tag::det_t2)) {
    const PolyMatrix Xr = variable_matrix(r, 'x', n);
    extra.push_back(determinant(Xr - poly_identity(r, n) * Polynomial::variable(r, "t2")));
  }
  return extend(out, extra, label);
}

}  // namespace cmlab::lab
