#include "cmlab/lab/suite.hpp"

#include <algorithm>
#include <functional>

#include "cmlab/errors.hpp"
#include "cmlab/lab/cv.hpp"
#include "cmlab/lab/families.hpp"
#include "cmlab/lab/regular.hpp"
#include "cmlab/lab/ring_map.hpp"
#include "cmlab/lab/schemes.hpp"

namespace cmlab::lab {
namespace {

std::string order_name(const MonomialOrder& o) { return o.name(); }

IdealPresentation framed_without_v(int n, const Field& field) {
  const IdealPresentation I = build_ideal({Family::framed, n, {}}, field);
  std::map<std::string, Scalar> values;
  for (int i = 1; i <= n; ++i) values[vname(i)] = 0;
  return specialize(I, values, I.label() + "+(v)");
}

}  // namespace

void validate(const SuiteConfig& c) {
  if (c.max_n < 1 || c.max_n > 9) throw HypothesisError("max_n must be between 1 and 9");
  if (c.max_m < 1 || c.max_m > 9) throw HypothesisError("max_m must be between 1 and 9");
  if (!(c.budget_seconds > 0)) throw HypothesisError("budget must be positive");
  if (c.psi_samples < 0) throw HypothesisError("sample count must be nonnegative");
}

VerificationReport check_dimension(const IdealPresentation& I, std::size_t expected, const MonomialOrder& order,
                                   const GroebnerOptions& opts) {
  nlohmann::ordered_json params;
  params["ideal"] = I.label();
  params["vars"] = I.vars().size();
  params["field"] = I.field().to_string();
  params["order"] = order_name(order);
  params["expected"] = expected;
  return run_check("dimension:" + I.label(), params, [&](VerificationReport& r) {
    const auto d = krull_dimension(I, order, opts);
    if (!d) {
      r.status = Status::fail;
      r.details = "unit ideal; expected dim=" + std::to_string(expected);
      r.offending.push_back("unit ideal");
      return;
    }
    r.details = "dim=" + std::to_string(*d) + " expected=" + std::to_string(expected);
    r.status = *d == expected ? Status::pass : Status::fail;
    if (*d != expected) r.offending.push_back("dim " + std::to_string(*d));
  });
}

VerificationReport check_saturation_stable(const IdealPresentation& I, const Polynomial& f,
                                           const GroebnerOptions& opts) {
  nlohmann::ordered_json params;
  params["ideal"] = I.label();
  params["by"] = f.to_string();
  params["field"] = I.field().to_string();
  std::string by = f.to_string();
  std::erase(by, ' ');
  return run_check("saturation:" + I.label() + ":" + by, params, [&](VerificationReport& r) {
    const MonomialOrder order = MonomialOrder::grevlex();
    const GroebnerBasis before = groebner_basis(I, order, opts);
    const IdealPresentation sat = saturate(I, f, opts);
    const GroebnerBasis after = groebner_basis(sat, order, opts);
    r.details = "reduced basis sizes " + std::to_string(before.size()) + " and " + std::to_string(after.size());
    if (before.generators().size() == after.generators().size()) {
      for (std::size_t k = 0; k < before.size(); ++k) {
        if (before.generators()[k].to_string() != after.generators()[k].to_string()) {
          r.offending.push_back(after.generators()[k].to_string());
        }
      }
    } else {
      for (const auto& g : after.generators()) {
        if (!ideal_membership(g.in_ring(before.ring()), before, opts.budget)) r.offending.push_back(g.to_string());
      }
      if (r.offending.empty()) r.offending.push_back("basis size changed");
    }
    if (r.offending.empty()) {
      r.status = Status::pass;
      r.details += "; bases are equal";
    } else {
      r.status = Status::fail;
      r.details += "; differing generators: " + r.offending.front();
    }
  });
}

std::vector<VerificationReport> run_suite(const SuiteConfig& c) {
  validate(c);
  const Field& F = c.field;
  auto opts = [&] {
    GroebnerOptions o;
    o.budget = Budget::seconds(c.budget_seconds);
    return o;
  };
  std::vector<VerificationReport> out;
  // A check that throws before reaching run_check (bad construction) still
  // becomes a report.
  auto add = [&](const std::string& fallback_id, const std::function<VerificationReport()>& fn) {
    try {
      out.push_back(fn());
    } catch (const BudgetExceeded& e) {
      out.push_back(run_check(fallback_id, {}, [&](VerificationReport& r) {
        r.status = Status::budget_exceeded;
        r.details = e.what();
      }));
    } catch (const Error& e) {
      out.push_back(run_check(fallback_id, {}, [&](VerificationReport& r) {
        r.status = Status::fail;
        r.details = e.what();
        r.offending.push_back(e.what());
      }));
    }
  };
  auto scheme = [&](Family f, int n, std::set<Tag> tags) {
    const SchemeSpec spec{f, n, std::move(tags)};
    add("dimension:" + family_name(f) + "(" + std::to_string(n) + ")", [&] {
      return check_dimension(build_ideal(spec, F), *known_dimension(spec), c.order, opts());
    });
  };
  for (int n = 1; n <= c.max_n; ++n) {
    scheme(Family::commuting, n, {});
    scheme(Family::commuting_cut, n, {});
    const std::size_t nn = n;
    add("dimension:J'(n)+(v)", [&] { return check_dimension(framed_without_v(n, F), nn * nn + nn + 3, c.order, opts()); });
  }
  for (int m = 1; m <= c.max_m; ++m) {
    scheme(Family::extended, m, {Tag::t_zero, Tag::add_w});
    scheme(Family::extended, m, {Tag::t_zero});
    scheme(Family::extended, m, {Tag::t_one});
    scheme(Family::extended, m, {Tag::add_w});
  }

  for (int n = 1; n <= c.max_n; ++n) {
    add("hom:identity", [&] { return verify_hom(identity_map(build_ideal({Family::commuting, n, {}}, F)), opts()); });
    if (n < 2) continue;
    add("hom:corner_strip", [&] { return verify_hom(corner_strip_map(n, F, c.inject_fault), opts()); });
    add("hom:localized_strip", [&] { return verify_hom(localized_strip_map(n, F), opts()); });
    add("hom:triangular", [&] { return verify_hom(triangular_map(n, F), opts()); });
  }

  for (int m = 1; m <= c.max_m; ++m) {
    for (auto [m1, m2] : valid_splits(m)) {
      add("jacobian", [&] { return check_jacobian_rank(m, m1, m2, F); });
      add("psi-membership", [&] {
        return check_psi_membership(m, m1, m2, c.psi_samples, c.seed, F, Budget::seconds(c.budget_seconds));
      });
    }
  }

  for (auto f : builtin_families(F)) {
    if (f.m() > c.max_m) continue;
    if (c.inject_fault && f.kind == FamilyKind::commutator_lift) f.broken_denominator = true;
    add("family:" + f.id(), [&] { return family_check(f, F); });
  }

  for (const auto& rc : builtin_regular_cases(F, 4)) {
    add("regular-point:" + rc.name, [&] { return check_regular_point(rc, F); });
  }

  if (c.max_n >= 2) {
    add("saturation", [&] {
      const IdealPresentation I = build_ideal({Family::commuting, 2, {}}, F);
      const Polynomial f = Polynomial::variable(I.ring(), "x11") - Polynomial::variable(I.ring(), "x22");
      return check_saturation_stable(I, f, opts());
    });
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const VerificationReport& a, const VerificationReport& b) { return a.check_id < b.check_id; });
  return out;
}

SuiteSummary summarize(const std::vector<VerificationReport>& reports) {
  SuiteSummary s;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::pass:
        ++s.pass;
        break;
      case Status::fail:
        ++s.fail;
        break;
      case Status::budget_exceeded:
        ++s.budget_exceeded;
        break;
    }
  }
  return s;
}

}  // namespace cmlab::lab
