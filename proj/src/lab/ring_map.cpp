#include "cmlab/lab/ring_map.hpp"

#include <map>

#include "cmlab/errors.hpp"
#include "cmlab/lab/schemes.hpp"

namespace cmlab::lab {
namespace {

const std::vector<std::pair<MapKind, std::string>> kKinds = {
    {MapKind::identity, "identity"},
    {MapKind::corner_strip, "corner_strip"},
    {MapKind::localized_strip, "localized_strip"},
    {MapKind::triangular, "triangular"},
};

// Images indexed by source variable, filled from a name table.
std::vector<Polynomial> images_from(const IdealPresentation& source, const std::map<std::string, Polynomial>& table) {
  std::vector<Polynomial> out;
  for (const auto& name : source.vars().names()) {
    auto it = table.find(name);
    if (it == table.end()) throw DomainError("no image for source variable '" + name + "'");
    out.push_back(it->second);
  }
  return out;
}

void require_size(int n, int least) {
  if (n < least) throw HypothesisError("map needs n >= " + std::to_string(least));
}

}  // namespace

MapKind parse_map_kind(const std::string& name) {
  for (const auto& [k, s] : kKinds) {
    if (s == name) return k;
  }
  throw DomainError("unknown map '" + name + "'");
}

std::string map_kind_name(MapKind k) {
  for (const auto& [m, s] : kKinds) {
    if (m == k) return s;
  }
  return "?";
}

void validate(const RingMap& map) {
  if (map.images.size() != map.source.vars().size()) {
    throw DomainError("ring map needs exactly one image per source variable");
  }
  for (const auto& img : map.images) {
    if (!same_space(img.ring(), *map.target.ring())) throw DomainError("image outside the target ring");
  }
  for (const auto& [z, w] : map.inverse_witnesses) {
    if (!map.target.vars().contains(z)) throw DomainError("witness variable '" + z + "' is not a target variable");
    if (w.is_zero()) throw DomainError("inverse witness must be nonzero");
    if (!same_space(w.ring(), *map.target.ring())) throw DomainError("witness outside the target ring");
  }
  for (const auto& k : map.kernel) {
    if (!same_space(k.ring(), *map.source.ring())) throw DomainError("kernel element outside the source ring");
  }
}

IdealPresentation witnessed_target(const RingMap& map) {
  std::vector<Polynomial> extra;
  std::string label = map.target.label();
  const RingPtr& ring = map.target.ring();
  for (const auto& [z, w] : map.inverse_witnesses) {
    extra.push_back(Polynomial::variable(ring, z) * w.in_ring(ring) - Polynomial::constant(ring, ring->field.one()));
    label += "+(" + z + "*w-1)";
  }
  return extend(map.target, extra, label);
}

VerificationReport verify_hom(const RingMap& map, const GroebnerOptions& opts) {
  nlohmann::ordered_json params;
  params["map"] = map.name;
  params["source"] = map.source.label();
  params["target"] = map.target.label();
  return run_check("hom:" + map.name, params, [&](VerificationReport& r) {
    validate(map);
    const IdealPresentation target = witnessed_target(map);
    const GroebnerBasis gb = groebner_basis(target, MonomialOrder::grevlex(), opts);
    const RingPtr& ring = gb.ring();
    std::vector<Polynomial> images;
    for (const auto& img : map.images) images.push_back(img.in_ring(ring));

    auto check = [&](const Polynomial& f, const std::string& what) {
      const Polynomial image = substitute(f, images, ring);
      const Polynomial nf = normal_form(image, gb.generators(), gb.order(), opts.budget);
      if (!nf.is_zero()) r.offending.push_back(what + " " + f.to_string() + " has nonzero remainder " + nf.to_string());
    };
    for (const auto& g : map.source.gens()) check(g, "generator");
    for (const auto& k : map.kernel) check(k, "kernel element");

    if (r.offending.empty()) {
      r.status = Status::pass;
      r.details = std::to_string(map.source.gens().size()) + " generator images and " +
                  std::to_string(map.kernel.size()) + " kernel elements reduce to 0 modulo a basis of size " +
                  std::to_string(gb.size());
    } else {
      r.status = Status::fail;
      r.details = "offending: " + r.offending.front();
      for (std::size_t k = 1; k < r.offending.size(); ++k) r.details += "; " + r.offending[k];
    }
  });
}

RingMap identity_map(const IdealPresentation& I) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < I.vars().size(); ++i) images.push_back(Polynomial::variable(I.ring(), i));
  return {"identity:" + I.label(), I, I, std::move(images), {}, {}};
}

RingMap corner_strip_map(int n, const Field& field, bool corrupt) {
  require_size(n, 2);
  const IdealPresentation source = build_ideal({Family::commuting, n, {}}, field);
  const IdealPresentation target = build_ideal({Family::extended, n - 1, {Tag::t_one}}, field);
  const RingPtr& t = target.ring();
  auto var = [&](const std::string& s) { return Polynomial::variable(t, s); };
  const Polynomial zero(t);

  std::map<std::string, Polynomial> table;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      table.emplace(xname(i, j), var(xname(i, j)));
      table.emplace(yname(i, j), var(yname(i, j)));
    }
    table.emplace(yname(i, n), var(uname(i)));
    table.emplace(xname(n, i), var(vname(i)));
    table.emplace(xname(i, n), zero);
    table.emplace(yname(n, i), zero);
  }
  table.emplace(xname(n, n), var("t1"));
  table.emplace(yname(n, n), var("t2"));
  if (corrupt) table.at(xname(n, 1)) = var(vname(1)) + Polynomial::constant(t, t->field.one());

  std::vector<Polynomial> kernel;
  for (int i = 1; i < n; ++i) {
    kernel.push_back(Polynomial::variable(source.ring(), xname(i, n)));
    kernel.push_back(Polynomial::variable(source.ring(), yname(n, i)));
  }
  std::string name = "corner_strip:n=" + std::to_string(n) + (corrupt ? ":corrupted" : "");
  return {name, source, target, images_from(source, table), {}, std::move(kernel)};
}

RingMap localized_strip_map(int n, const Field& field) {
  require_size(n, 2);
  // source: I(n) with x_in = 0, plus z1 inverting det(X' − x_nn·I)
  const IdealPresentation cut = build_ideal({Family::commuting_cut, n, {}}, field);
  const IdealPresentation src0 = adjoin_variables(cut, {"z1"}, cut.label());
  const RingPtr& s = src0.ring();
  const PolyMatrix Xs = variable_matrix(s, 'x', n - 1);
  const Polynomial xnn_s = Polynomial::variable(s, xname(n, n));
  const Polynomial f0_s = determinant(Xs - poly_identity(s, n - 1) * xnn_s);
  const IdealPresentation source =
      extend(src0, {Polynomial::variable(s, "z1") * f0_s - Polynomial::constant(s, s->field.one())},
             cut.label() + "+(z1*f0-1)");

  const IdealPresentation base = build_ideal({Family::commuting, n - 1, {}}, field);
  const IdealPresentation target = adjoin_variables(base, {xname(n, n), yname(n, n), "z1"}, base.label() + "[x_nn,y_nn,z1]");
  const RingPtr& t = target.ring();
  auto var = [&](const std::string& name) { return Polynomial::variable(t, name); };
  const PolyMatrix Xt = variable_matrix(t, 'x', n - 1);
  const Polynomial f0_t = determinant(Xt - poly_identity(t, n - 1) * var(xname(n, n)));

  std::map<std::string, Polynomial> table;
  const Polynomial zero(t);
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      table.emplace(xname(i, j), var(xname(i, j)));
      table.emplace(yname(i, j), var(yname(i, j)));
    }
    table.emplace(xname(n, i), zero);
    table.emplace(yname(i, n), zero);
    table.emplace(yname(n, i), zero);
  }
  table.emplace(xname(n, n), var(xname(n, n)));
  table.emplace(yname(n, n), var(yname(n, n)));
  table.emplace("z1", var("z1"));

  std::vector<Polynomial> kernel;
  for (int i = 1; i < n; ++i) kernel.push_back(Polynomial::variable(source.ring(), xname(n, i)));
  return {"localized_strip:n=" + std::to_string(n), source, target, images_from(source, table), {{"z1", f0_t}},
          std::move(kernel)};
}

RingMap triangular_map(int n, const Field& field) {
  require_size(n, 2);
  const int m = n - 1;
  // source: framed_det(n) with v = e_n and z1 inverting h1·(t1 − t2), where
  // h1 is the linear coefficient of det(X − (t2 − λ)·I) = tr adj(X − t2·I)
  const IdealPresentation framed = build_ideal({Family::framed_det, n, {}}, field);
  const IdealPresentation src0 = adjoin_variables(framed, {"z1"}, framed.label());
  const RingPtr& s = src0.ring();
  auto svar = [&](const std::string& name) { return Polynomial::variable(s, name); };
  const Polynomial one_s = Polynomial::constant(s, s->field.one());
  const PolyMatrix adj = adjugate(variable_matrix(s, 'x', n) - poly_identity(s, n) * svar("t2"), one_s);
  Polynomial h1(s);
  for (int i = 0; i < n; ++i) h1 += adj(i, i);
  std::vector<Polynomial> extra;
  for (int i = 1; i < n; ++i) extra.push_back(svar(vname(i)));
  extra.push_back(svar(vname(n)) - one_s);
  extra.push_back(svar("z1") * h1 * (svar("t1") - svar("t2")) - one_s);
  const IdealPresentation source = extend(src0, extra, framed.label() + "+(v-e_n,z1*h1*(t1-t2)-1)");

  const IdealPresentation base = build_ideal({Family::extended, m, {Tag::t_zero, Tag::add_w}}, field);
  std::vector<std::string> fresh;
  for (int i = 1; i <= n; ++i) fresh.push_back(xname(i, n));
  fresh.push_back(vpname(n));
  fresh.push_back("z1");
  fresh.push_back("z2");
  const IdealPresentation target = adjoin_variables(base, fresh, base.label() + "[x_in,vp_n,z1,z2]");
  const RingPtr& t = target.ring();
  auto var = [&](const std::string& name) { return Polynomial::variable(t, name); };
  const Polynomial one = Polynomial::constant(t, t->field.one());
  const Polynomial zero(t);
  const Polynomial xnn = var(xname(n, n));

  const PolyMatrix Xp = variable_matrix(t, 'x', m);
  const PolyMatrix Yp = variable_matrix(t, 'y', m);
  const PolyMatrix Im = poly_identity(t, m);
  PolyMatrix xcol(m, 1, zero), ucol = variable_column(t, "u", m);
  for (int i = 1; i <= m; ++i) xcol(i - 1, 0) = var(xname(i, n));
  const PolyMatrix shifted = Xp - Im * xnn;
  const Polynomial h = determinant(shifted);
  // (X' − x_nn)^{-1} = z1·adj(X' − x_nn), (t1 − x_nn)^{-1} = z2
  const PolyMatrix ycol = (Yp - Im * var("t2")) * adjugate(shifted, one) * xcol * var("z1") + ucol * var("z2");

  std::map<std::string, Polynomial> table;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Polynomial xi = zero, yi = zero;
      if (i < n && j < n) {
        xi = var(xname(i, j));
        yi = var(yname(i, j));
      } else if (j == n) {
        xi = var(xname(i, n));
        yi = i < n ? ycol(i - 1, 0) : var("t2");
      }
      table.emplace(xname(i, j), xi);
      table.emplace(yname(i, j), yi);
    }
    table.emplace(uname(i), i < n ? var(uname(i)) : zero);
    table.emplace(vname(i), i < n ? zero : one);
    table.emplace(vpname(i), i < n ? var(vname(i)) : var(vpname(n)));
  }
  table.emplace("t1", var("t1"));
  table.emplace("t2", xnn);
  table.emplace("t3", var("t2"));
  table.emplace("z1", var("z1") * var("z2"));

  return {"triangular:n=" + std::to_string(n), source, target, images_from(source, table),
          {{"z1", h}, {"z2", var("t1") - xnn}}, {}};
}

}  // namespace cmlab::lab
