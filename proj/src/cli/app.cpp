#include "cmlab/cli/app.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cmlab/cli/ideal_file.hpp"
#include "cmlab/errors.hpp"
#include "cmlab/groebner.hpp"
#include "cmlab/lab/cv.hpp"
#include "cmlab/lab/families.hpp"
#include "cmlab/lab/regular.hpp"
#include "cmlab/lab/ring_map.hpp"
#include "cmlab/lab/schemes.hpp"
#include "cmlab/lab/suite.hpp"

namespace cmlab::cli {
namespace {

using lab::Status;
using lab::VerificationReport;

struct IdealArgs {
  std::string path;
  std::string order = "grevlex";
  std::string field;
  double budget = 600;
  bool sugar = false;
};

struct VerifyArgs {
  std::string check;
  int m = 1, m1 = 0, m2 = 0, n = 2;
  std::string map;
  std::string family;
  std::string variant;
  bool broken = false;
  bool corrupt = false;
  int samples = 100;
  std::uint64_t seed = 0;
  std::string field = "fp:32003";
  std::string order = "grevlex";
  double budget = 600;
  std::string ideal;
  std::string scheme;
  std::vector<std::string> tags;
  std::optional<std::size_t> expect;
  std::string regular_case;
  std::string a_text, b_text;
};

struct SuiteArgs {
  lab::SuiteConfig config;
  std::string field = "fp:32003";
  std::string order = "grevlex";
  std::string out = "cmlab_suite.json";
};

struct BuildArgs {
  std::string scheme;
  int n = 1;
  std::vector<std::string> tags;
  std::string field = "q";
};

// Numeric aliases kept for compatibility with existing scripts.
const std::map<std::string, std::string> kMapAliases = {
    {"2.7", "corner_strip"},
    {"2.8", "localized_strip"},
    {"4.4", "triangular"},
};

int status_exit(Status s) {
  switch (s) {
    case Status::pass:
      return exit_ok;
    case Status::fail:
      return exit_failed;
    case Status::budget_exceeded:
      return exit_budget;
  }
  return exit_failed;
}

GroebnerOptions options(double budget, bool sugar = false) {
  if (!(budget > 0)) throw HypothesisError("budget must be positive");
  GroebnerOptions o;
  o.sugar = sugar;
  o.budget = Budget::seconds(budget);
  return o;
}

IdealPresentation load(const IdealArgs& a) {
  std::optional<Field> f;
  if (!a.field.empty()) f = Field::parse(a.field);
  return read_ideal_file(a.path, f);
}

lab::SchemeSpec scheme_spec(const std::string& family, int n, const std::vector<std::string>& tags) {
  lab::SchemeSpec spec;
  spec.family = lab::parse_family(family);
  spec.n = n;
  for (const auto& t : tags) spec.tags.insert(lab::parse_tag(t));
  lab::validate(spec);
  return spec;
}

ScalarMatrix parse_matrix(const std::string& text, const Field& field) {
  std::vector<std::vector<Scalar>> rows;
  std::stringstream rs(text);
  for (std::string row; std::getline(rs, row, ';');) {
    std::vector<Scalar> r;
    std::stringstream es(row);
    for (std::string e; std::getline(es, e, ',');) {
      e.erase(std::remove_if(e.begin(), e.end(), [](unsigned char ch) { return std::isspace(ch); }), e.end());
      mpq_class q;
      if (e.empty() || q.set_str(e, 10) != 0) throw DomainError("bad matrix entry '" + e + "'");
      q.canonicalize();
      r.push_back(field.from_rational(q));
    }
    rows.push_back(std::move(r));
  }
  if (rows.empty() || rows.front().empty()) throw DomainError("empty matrix");
  ScalarMatrix m(rows.size(), rows.front().size(), field.zero());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw DomainError("matrix rows differ in length");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

int cmd_gb(const IdealArgs& a, std::ostream& out) {
  const IdealPresentation I = load(a);
  const GroebnerBasis G = groebner_basis(I, MonomialOrder::parse(a.order), options(a.budget, a.sugar));
  for (const auto& g : G.generators()) out << g.to_string() << "\n";
  return exit_ok;
}

int cmd_dim(const IdealArgs& a, std::ostream& out) {
  const IdealPresentation I = load(a);
  const auto d = krull_dimension(I, MonomialOrder::parse(a.order), options(a.budget, a.sugar));
  out << (d ? static_cast<long long>(*d) : -1LL) << "\n";
  return exit_ok;
}

VerificationReport verify_report(const VerifyArgs& a) {
  const Field field = Field::parse(a.field);
  const std::string& c = a.check;
  if (c == "jacobian") return lab::check_jacobian_rank(a.m, a.m1, a.m2, field);
  if (c == "psi-membership") {
    if (a.samples < 0) throw HypothesisError("sample count must be nonnegative");
    return lab::check_psi_membership(a.m, a.m1, a.m2, a.samples, a.seed, field, Budget::seconds(a.budget));
  }
  if (c == "dimension") {
    std::optional<std::size_t> expect = a.expect;
    std::optional<IdealPresentation> I;
    if (!a.ideal.empty()) {
      I = read_ideal_file(a.ideal, field);
    } else if (!a.scheme.empty()) {
      const auto spec = scheme_spec(a.scheme, a.n, a.tags);
      I = lab::build_ideal(spec, field);
      if (!expect) expect = lab::known_dimension(spec);
    } else {
      throw HypothesisError("dimension check needs --ideal or --scheme");
    }
    if (!expect) throw HypothesisError("no known dimension for this ideal; pass --expect");
    return lab::check_dimension(*I, *expect, MonomialOrder::parse(a.order), options(a.budget));
  }
  if (c == "hom") {
    std::string kind = a.map.empty() ? "corner_strip" : a.map;
    if (auto it = kMapAliases.find(kind); it != kMapAliases.end()) kind = it->second;
    const auto opts = options(a.budget);
    switch (lab::parse_map_kind(kind)) {
      case lab::MapKind::identity: {
        if (!a.ideal.empty()) return lab::verify_hom(lab::identity_map(read_ideal_file(a.ideal, field)), opts);
        const std::string family = a.scheme.empty() ? "R" : a.scheme;
        return lab::verify_hom(lab::identity_map(lab::build_ideal(scheme_spec(family, a.n, a.tags), field)), opts);
      }
      case lab::MapKind::corner_strip:
        return lab::verify_hom(lab::corner_strip_map(a.n, field, a.corrupt), opts);
      case lab::MapKind::localized_strip:
        return lab::verify_hom(lab::localized_strip_map(a.n, field), opts);
      case lab::MapKind::triangular:
        return lab::verify_hom(lab::triangular_map(a.n, field), opts);
    }
  }
  if (c == "family") {
    if (a.family.empty()) throw HypothesisError("family check needs --family");
    const auto kind = lab::parse_family_kind(a.family);
    std::optional<lab::FamilyInstance> inst;
    if (a.variant.empty()) {
      inst = lab::builtin_family(kind, a.m, field);
    } else {
      for (auto& f : lab::builtin_families(field))
        if (f.kind == kind && f.m() == a.m && f.variant == a.variant) inst = f;
      if (!inst) throw HypothesisError("no built-in instance with variant '" + a.variant + "'");
    }
    inst->broken_denominator = a.broken;
    return lab::family_check(*inst, field);
  }
  if (c == "regular-point") {
    if (!a.regular_case.empty()) {
      for (const auto& rc : lab::builtin_regular_cases(field, 9))
        if (rc.name == a.regular_case) return lab::check_regular_point(rc, field);
      throw HypothesisError("unknown regular-point case '" + a.regular_case + "'");
    }
    if (a.a_text.empty() || a.b_text.empty()) throw HypothesisError("regular-point check needs --case or --A and --B");
    const ScalarMatrix A = parse_matrix(a.a_text, field), B = parse_matrix(a.b_text, field);
    lab::regular_point_test(A, B);  // rejects bad input before a report is built
    nlohmann::ordered_json params;
    params["A"] = a.a_text;
    params["B"] = a.b_text;
    params["field"] = field.to_string();
    if (a.expect) params["expected"] = *a.expect;
    return lab::run_check("regular-point:custom", params, [&](VerificationReport& r) {
      const auto res = lab::regular_point_test(A, B);
      r.details = "centralizer dimension=" + std::to_string(res.centralizer_dimension) +
                  (res.regular ? " regular" : " not regular");
      r.status = Status::pass;
      if (a.expect && *a.expect != res.centralizer_dimension) {
        r.status = Status::fail;
        r.offending.push_back("dimension " + std::to_string(res.centralizer_dimension));
      }
    });
  }
  throw HypothesisError("unknown check '" + c + "'");
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const VerificationReport r = verify_report(a);
  out << lab::to_json(r).dump(2) << "\n";
  return status_exit(r.status);
}

int cmd_suite(SuiteArgs a, std::ostream& out, std::ostream& err) {
  a.config.field = Field::parse(a.field);
  a.config.order = MonomialOrder::parse(a.order);
  lab::validate(a.config);
  std::ofstream file(a.out, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot write '" << a.out << "'\n";
    return exit_bad_input;
  }
  const auto reports = lab::run_suite(a.config);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(lab::to_json(r));
  file << arr.dump(2) << "\n";
  file.close();
  if (!file) {
    err << "error: writing '" << a.out << "' failed\n";
    return exit_bad_input;
  }
  const auto s = lab::summarize(reports);
  out << "pass=" << s.pass << " fail=" << s.fail << " budget_exceeded=" << s.budget_exceeded
      << " total=" << reports.size() << "\n";
  return s.fail ? exit_failed : exit_ok;
}

int cmd_build(const BuildArgs& a, std::ostream& out) {
  out << format_ideal(lab::build_ideal(scheme_spec(a.scheme, a.n, a.tags), Field::parse(a.field)));
  return exit_ok;
}

void ideal_options(CLI::App* sub, IdealArgs& a) {
  sub->add_option("file", a.path, "ideal file")->required();
  sub->add_option("--order", a.order, "lex or grevlex")->capture_default_str();
  sub->add_option("--field", a.field, "q or fp:<p>; overrides the file");
  sub->add_option("--budget", a.budget, "seconds")->capture_default_str();
  sub->add_flag("--sugar", a.sugar, "sugar pair selection");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner bases and verification checks for commuting-matrix schemes", "cmlab"};
  app.require_subcommand(1);

  IdealArgs gb_args, dim_args;
  ideal_options(app.add_subcommand("gb", "print the reduced Groebner basis"), gb_args);
  ideal_options(app.add_subcommand("dim", "print the Krull dimension (-1 for the unit ideal)"), dim_args);

  VerifyArgs v;
  auto* verify = app.add_subcommand("verify", "run one check and print its JSON report");
  verify->add_option("--check", v.check, "dimension, jacobian, psi-membership, hom, family, regular-point")
      ->required();
  verify->add_option("--m", v.m);
  verify->add_option("--m1", v.m1);
  verify->add_option("--m2", v.m2);
  verify->add_option("--n", v.n);
  verify->add_option("--map,--lemma", v.map, "identity, corner_strip, localized_strip, triangular");
  verify->add_option("--family", v.family, "shear_top, shear_bottom, split_jordan, commutator_lift");
  verify->add_option("--variant", v.variant);
  verify->add_flag("--broken", v.broken, "break the lift table");
  verify->add_flag("--corrupt", v.corrupt, "corrupt the corner_strip map");
  verify->add_option("--samples", v.samples)->capture_default_str();
  verify->add_option("--seed", v.seed)->capture_default_str();
  verify->add_option("--field", v.field)->capture_default_str();
  verify->add_option("--order", v.order)->capture_default_str();
  verify->add_option("--budget", v.budget)->capture_default_str();
  verify->add_option("--ideal", v.ideal, "ideal file");
  verify->add_option("--scheme", v.scheme, "R, R_tilde, R1, R_prime, R2");
  verify->add_option("--tags", v.tags, "t=0, t=1, add_w, kill_xin, kill_yni, det_t2")->delimiter(',');
  verify->add_option("--expect", v.expect);
  verify->add_option("--case", v.regular_case);
  verify->add_option("--A", v.a_text, "rows separated by ';', entries by ','");
  verify->add_option("--B", v.b_text);

  SuiteArgs s;
  auto* suite = app.add_subcommand("suite", "run every check and write a JSON array");
  suite->add_option("--max-n", s.config.max_n)->capture_default_str();
  suite->add_option("--max-m", s.config.max_m)->capture_default_str();
  suite->add_option("--field", s.field)->capture_default_str();
  suite->add_option("--order", s.order)->capture_default_str();
  suite->add_option("--budget", s.config.budget_seconds, "seconds per check")->capture_default_str();
  suite->add_option("--seed", s.config.seed)->capture_default_str();
  suite->add_option("--samples", s.config.psi_samples)->capture_default_str();
  suite->add_option("--out", s.out)->capture_default_str();
  suite->add_flag("--inject-fault", s.config.inject_fault);

  BuildArgs b;
  auto* build = app.add_subcommand("build", "print a scheme's ideal in file format");
  build->add_option("--scheme", b.scheme)->required();
  build->add_option("--n", b.n)->capture_default_str();
  build->add_option("--tags", b.tags)->delimiter(',');
  build->add_option("--field", b.field)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_bad_input;
  }

  const std::string where = app.got_subcommand("gb") ? gb_args.path : app.got_subcommand("dim") ? dim_args.path : "";
  try {
    if (app.got_subcommand("gb")) return cmd_gb(gb_args, out);
    if (app.got_subcommand("dim")) return cmd_dim(dim_args, out);
    if (app.got_subcommand("verify")) return cmd_verify(v, out);
    if (app.got_subcommand("suite")) return cmd_suite(s, out, err);
    return cmd_build(b, out);
  } catch (const ParseError& e) {
    err << "error: " << (where.empty() ? "" : where + ":") << e.line() << ":" << e.column() << ": " << e.what()
        << "\n";
    return exit_bad_input;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return exit_budget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_bad_input;
  }
}

}  // namespace cmlab::cli
