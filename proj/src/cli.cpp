#include "nlsa/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "nlsa/error.hpp"
#include "nlsa/extensions.hpp"
#include "nlsa/io.hpp"
#include "nlsa/metric.hpp"

namespace nlsa {

namespace {

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse:
    case ErrorCode::UnknownName:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::AmbientMismatch:
    case ErrorCode::ArityMismatch:
    case ErrorCode::NotHomogeneous:
    case ErrorCode::WrongDimension:
      return 1;
    default:
      return 2;
  }
}

const char* yes(bool b) { return b ? "yes" : "no"; }

std::string dims(const GradedSpace& s) {
  return "(" + std::to_string(s.dim_even()) + "|" + std::to_string(s.dim_odd()) + ")";
}

Json dims_json(const GradedSpace& s) { return Json::array({s.dim_even(), s.dim_odd()}); }

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

std::string opt(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "none"; }
Json opt_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::vector<std::string> basis_strings(const GradedSpace& space, const GradedSubspace& w) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < w.dim(); ++r) out.push_back(format_vector(space, w.basis_vector(r)));
  return out;
}

Json subspace_json(const GradedSpace& space, const GradedSubspace& w) {
  return Json{{"dim", w.dim()}, {"basis", basis_strings(space, w)}};
}

GradedSubspace subspace_by_names(const NLieSuperalgebra& g, const std::vector<std::string>& names) {
  std::vector<std::size_t> idx;
  for (const auto& n : names) {
    const auto i = g.space().find(n);
    if (!i) throw Error(ErrorCode::Parse, "unknown basis name '" + n + "'");
    idx.push_back(*i);
  }
  return GradedSubspace::coordinate(g.parities(), idx);
}

/// Loads an algebra and insists it passes check_axioms.
NLieSuperalgebra load_valid(const std::string& path) {
  LoadedAlgebra l = parse_algebra(read_json_file(path));
  if (l.skew_defect) throw Error(ErrorCode::AxiomFailure, path + ": skew symmetry violated: " + l.skew_defect->detail);
  const AxiomReport r = check_axioms(l.algebra);
  if (!r.ok()) {
    throw Error(ErrorCode::AxiomFailure,
                path + ": not a first-class n-Lie superalgebra, " + r.violation->axiom + " fails at [" +
                    join(r.violation->args) + "]");
  }
  return std::move(l.algebra);
}

struct Output {
  std::ostringstream text;
  Json json;
  int exit = 0;
};

std::string properties_line(const FormProperties& p) {
  return std::string("nondegenerate ") + yes(p.nondegenerate) + ", invariant " + yes(p.invariant) +
         ", supersymmetric " + yes(p.supersymmetric) + ", consistent " + yes(p.consistent);
}

Json properties_json(const FormProperties& p) {
  return Json{{"nondegenerate", p.nondegenerate},
              {"invariant", p.invariant},
              {"supersymmetric", p.supersymmetric},
              {"consistent", p.consistent}};
}

// ---------------------------------------------------------------------------

void cmd_validate(const std::string& file, Output& o) {
  LoadedAlgebra l = parse_algebra(read_json_file(file));
  const NLieSuperalgebra& g = l.algebra;
  AxiomReport r = check_axioms(g);
  if (l.skew_defect) {
    r.skew = false;
    r.violation = l.skew_defect;
  }
  o.text << "algebra " << g.name() << ": n=" << g.arity() << ", dim " << dims(g.space()) << "\n";
  o.text << "grading: " << (r.grading ? "ok" : "FAIL") << "\n";
  o.text << "skew symmetry: " << (r.skew ? "ok" : "FAIL") << "\n";
  o.text << "Filippov identity: " << (r.filippov ? "ok" : "FAIL") << "\n";
  o.json = Json{{"algebra", g.name()}, {"n", g.arity()}, {"dim", dims_json(g.space())},
                {"grading", r.grading}, {"skew", r.skew}, {"filippov", r.filippov}, {"valid", r.ok()}};
  if (r.violation) {
    o.text << "counterexample " << r.violation->axiom << " at [" << join(r.violation->args)
           << "]: " << r.violation->detail << "\n";
    o.json["violation"] = Json{{"axiom", r.violation->axiom}, {"args", r.violation->args},
                               {"detail", r.violation->detail}};
  } else {
    o.json["violation"] = nullptr;
  }
  o.text << "result: " << (r.ok() ? "valid" : "INVALID") << "\n";
  o.exit = r.ok() ? 0 : 2;
}

void cmd_series(const std::string& file, Output& o) {
  const NLieSuperalgebra g = load_valid(file);
  const SeriesReport s = series(g);
  auto dims_of = [](const std::vector<GradedSubspace>& xs) {
    std::vector<std::size_t> d;
    for (const auto& x : xs) d.push_back(x.dim());
    return d;
  };
  auto line = [](const std::vector<std::size_t>& d) {
    std::string t;
    for (auto x : d) t += " " + std::to_string(x);
    return t;
  };
  o.text << "algebra " << g.name() << ": n=" << g.arity() << ", dim " << dims(g.space()) << "\n";
  o.text << "derived series dims:" << line(dims_of(s.derived)) << "\n";
  o.text << "lower central series dims:" << line(dims_of(s.lower_central)) << "\n";
  o.text << "centralizer series dims:" << line(dims_of(s.centralizer)) << "\n";
  o.text << "nilpotent length " << opt(s.nilpotent_length) << ", solvable length " << opt(s.solvable_length) << "\n";
  o.json = Json{{"algebra", g.name()},
                {"derived", dims_of(s.derived)},
                {"lower_central", dims_of(s.lower_central)},
                {"centralizer", dims_of(s.centralizer)},
                {"nilpotent_length", opt_json(s.nilpotent_length)},
                {"solvable_length", opt_json(s.solvable_length)}};
}

void cmd_cohomology(const std::string& file, const std::string& module, std::size_t degree, const std::string& parity,
                    bool compatible, Output& o) {
  const NLieSuperalgebra g = load_valid(file);
  const Representation rho = module_by_name(g, module);
  std::vector<Parity> ps;
  if (parity == "both") {
    ps = {Parity::even, Parity::odd};
  } else {
    ps = {parse_parity(parity)};
  }
  const Convention conv = compatible ? Convention::wedge_compatible : Convention::full;
  o.text << "algebra " << g.name() << ", module " << module << ", degree " << degree << ", convention "
         << (compatible ? "wedge-compatible" : "full") << "\n";
  o.json = Json{{"algebra", g.name()}, {"module", module}, {"degree", degree},
                {"convention", compatible ? "wedge-compatible" : "full"}};
  Json rows = Json::array();
  for (Parity p : ps) {
    const CohomologyDims d = cohomology_dims(rho, degree, p, conv);
    o.text << "parity " << parity_name(p) << ": dim C " << d.cochains << ", dim Z " << d.cocycles << ", dim B "
           << d.coboundaries << ", dim H " << d.cohomology;
    Json row{{"parity", parity_name(p)}, {"C", d.cochains}, {"Z", d.cocycles}, {"B", d.coboundaries},
             {"H", d.cohomology}};
    if (d.subcomplex_invariant) {
      o.text << ", delta preserves compatibility " << yes(*d.subcomplex_invariant);
      row["subcomplex_invariant"] = *d.subcomplex_invariant;
      if (!*d.subcomplex_invariant) o.exit = 2;
    }
    o.text << "\n";
    rows.push_back(row);
  }
  o.json["dims"] = rows;
}

void cmd_extend(const std::string& base_file, const std::string& fiber_file, const std::string& cocycle_file,
                const std::string& action_file, const std::string& out_file, Output& o) {
  const NLieSuperalgebra b = load_valid(base_file);
  const NLieSuperalgebra a = load_valid(fiber_file);
  Representation action =
      action_file.empty()
          ? Representation(b, a.space(), std::vector<Matrix>(fundamental_basis(b).size(), Matrix(a.dim(), a.dim())),
                           "zero")
          : representation_from_json(b, a.space(), read_json_file(action_file));
  const Cochain f = cochain_from_json(action, read_json_file(cocycle_file));
  const Extension e = build_extension(ExtensionDatum{b, a, action, f});
  const AxiomReport r = check_axioms(e.algebra);
  o.text << "extension " << e.algebra.name() << ": n=" << e.algebra.arity() << ", dim " << dims(e.algebra.space())
         << "\n";
  o.text << "axioms: " << (r.ok() ? "ok" : "FAIL") << "\n";
  const Json alg = algebra_to_json(e.algebra);
  o.json = Json{{"algebra", alg}, {"axioms", r.ok()}};
  if (!out_file.empty()) {
    write_json_file(out_file, alg);
    o.text << "wrote " << out_file << "\n";
  }
  if (!r.ok()) o.exit = 2;
}

void cmd_tstar(const std::string& file, const std::string& theta_file, const std::string& out, Output& o) {
  const NLieSuperalgebra g = load_valid(file);
  const Representation co = coadjoint(g);
  const Cochain theta = theta_file.empty() ? Cochain::zero(CochainSpace(co, 1), Parity::even)
                                           : cochain_from_json(co, read_json_file(theta_file));
  const TStarBundle t = build_tstar(g, theta);
  const FormProperties fp = form_properties(t.total.algebra, t.total.gram);
  const AxiomReport ax = check_axioms(t.total.algebra);
  const SeriesReport s = series(t.total.algebra);
  const Json alg = algebra_to_json(t.total.algebra);
  const Json form = form_to_json(t.total.algebra.space(), t.total.gram);
  o.text << "T*-extension " << t.total.algebra.name() << ": n=" << g.arity() << ", dim "
         << dims(t.total.algebra.space()) << ", theta " << (is_zero(theta.coefficients) ? "zero" : "nonzero") << "\n";
  o.text << "axioms: " << (ax.ok() ? "ok" : "FAIL") << "\n";
  o.text << "form: " << properties_line(fp) << "\n";
  o.text << "nilpotent length " << opt(s.nilpotent_length) << ", solvable length " << opt(s.solvable_length) << "\n";
  o.json = Json{{"algebra", alg},
                {"form", form},
                {"axioms", ax.ok()},
                {"form_properties", properties_json(fp)},
                {"nilpotent_length", opt_json(s.nilpotent_length)},
                {"solvable_length", opt_json(s.solvable_length)}};
  if (!out.empty()) {
    write_json_file(out + ".json", alg);
    write_json_file(out + ".form.json", form);
    o.text << "wrote " << out << ".json and " << out << ".form.json\n";
  }
  if (!ax.ok() || !fp.all()) o.exit = 2;
}

MetricAlgebra load_metric(const std::string& file, const std::string& form_file) {
  NLieSuperalgebra g = load_valid(file);
  Matrix gram = form_from_json(g.space(), read_json_file(form_file));
  return {std::move(g), std::move(gram)};
}

void report_reconstruction(const MetricAlgebra& m, const Reconstruction& r, const std::string& out, Output& o) {
  const Representation co = coadjoint(r.quotient);
  const Json theta = cochain_to_json(co, r.tstar.theta);
  const Json quot = algebra_to_json(r.quotient);
  const auto qlen = series(r.quotient).nilpotent_length;
  o.text << "isotropic complement: " << join(basis_strings(m.algebra.space(), r.complement), "; ") << "\n";
  o.text << "quotient g/I: dim " << dims(r.quotient.space()) << ", basis " << join(std::vector<std::string>(
                                                                                  [&] {
                                                                                    std::vector<std::string> v;
                                                                                    for (const auto& b : r.quotient.space().basis()) v.push_back(b.name);
                                                                                    return v;
                                                                                  }()))
         << ", nilpotent length " << opt(qlen) << "\n";
  o.text << "theta: " << (is_zero(r.tstar.theta.coefficients) ? "zero" : "nonzero") << " ("
         << theta["entries"].size() << " entries)\n";
  o.text << "phi bijective " << yes(r.bijective) << ", bracket preserving " << yes(r.bracket_preserving)
         << ", isometry " << yes(r.isometry) << "\n";
  o.text << "isometry verified: " << yes(r.ok()) << "\n";
  o.json["quotient"] = quot;
  o.json["quotient_nilpotent_length"] = opt_json(qlen);
  o.json["complement"] = subspace_json(m.algebra.space(), r.complement);
  o.json["theta"] = theta;
  o.json["bijective"] = r.bijective;
  o.json["bracket_preserving"] = r.bracket_preserving;
  o.json["isometry"] = r.isometry;
  o.json["verified"] = r.ok();
  if (!out.empty()) {
    write_json_file(out + ".quotient.json", quot);
    write_json_file(out + ".theta.json", theta);
    o.text << "wrote " << out << ".quotient.json and " << out << ".theta.json\n";
  }
  if (!r.ok()) o.exit = 2;
}

void cmd_reconstruct(const std::string& file, const std::string& form_file, const std::vector<std::string>& ideal,
                     const std::string& out, Output& o) {
  const MetricAlgebra m = load_metric(file, form_file);
  o.text << "algebra " << m.algebra.name() << ": n=" << m.algebra.arity() << ", dim " << dims(m.algebra.space())
         << "\n";
  o.json = Json{{"algebra", m.algebra.name()}};
  if (!ideal.empty()) {
    const GradedSubspace i = subspace_by_names(m.algebra, ideal);
    o.text << "ideal I: " << join(basis_strings(m.algebra.space(), i), "; ") << "\n";
    o.json["ideal"] = subspace_json(m.algebra.space(), i);
    report_reconstruction(m, reconstruct_tstar(m, i), out, o);
    return;
  }
  const PipelineRecord p = nilpotent_pipeline(m);
  o.text << "nilpotent length k = " << p.nilpotent_length << ", bound [(k+1)/2] = " << p.bound << "\n";
  o.text << "seed ideal J: dim " << p.seed.dim() << ", isotropic ideal " << yes(p.seed_isotropic_ideal)
         << ", contains g^" << p.bound << " " << yes(p.seed_contains_power) << "\n";
  o.text << "maximal isotropic ideal I: " << join(basis_strings(m.algebra.space(), p.maximal.subspace), "; ") << "\n";
  o.json["nilpotent_length"] = p.nilpotent_length;
  o.json["bound"] = p.bound;
  o.json["seed"] = subspace_json(m.algebra.space(), p.seed);
  o.json["ideal"] = subspace_json(m.algebra.space(), p.maximal.subspace);
  if (p.line) {
    o.text << "odd dimension: line extension by " << p.line->algebra.algebra.space().name(m.algebra.dim())
           << ", z = " << format_vector(m.algebra.space(), p.line->z) << ", checks " << yes(p.line->ok()) << "\n";
    o.json["line_extension"] = Json{{"z", format_vector(m.algebra.space(), p.line->z)}, {"ok", p.line->ok()}};
    report_reconstruction(p.line->algebra, p.reconstruction, out, o);
  } else {
    report_reconstruction(m, p.reconstruction, out, o);
  }
  o.text << "quotient nilpotent length " << p.quotient_length << " <= " << p.bound << ": "
         << yes(p.quotient_length <= p.bound) << "\n";
  o.json["pipeline_ok"] = p.ok();
  if (!p.ok()) o.exit = 2;
}

void cmd_isotropic(const std::string& file, const std::string& form_file, const std::vector<std::string>& ideal,
                   const std::vector<std::string>& seed, Output& o) {
  const MetricAlgebra m = load_metric(file, form_file);
  const FormProperties fp = form_properties(m.algebra, m.gram);
  o.text << "algebra " << m.algebra.name() << ": n=" << m.algebra.arity() << ", dim " << dims(m.algebra.space())
         << "\n";
  o.text << "form: " << properties_line(fp) << "\n";
  o.json = Json{{"algebra", m.algebra.name()}, {"form_properties", properties_json(fp)}};
  bool ok = fp.all();

  const DualityReport d = centralizer_duality(m);
  o.text << "centralizer duality: C(V) = [g..g,V^perp]^perp " << yes(d.centralizers) << " (" << d.samples
         << " samples), g^m = C_m^perp " << yes(d.lower_central);
  if (d.nested) o.text << ", g^i in C_(k-i) " << yes(*d.nested);
  o.text << "\n";
  o.json["duality"] = Json{{"centralizers", d.centralizers}, {"samples", d.samples},
                           {"lower_central", d.lower_central},
                           {"nested", d.nested ? Json(*d.nested) : Json(nullptr)}};
  ok = ok && d.ok();

  if (!ideal.empty()) {
    const GradedSubspace i = subspace_by_names(m.algebra, ideal);
    const IsotropicIdealReport r = isotropic_ideal_abelian_check(m, i);
    o.text << "half-dimensional isotropic I: ideal " << yes(r.ideal) << ", abelian " << yes(r.abelian)
           << ", I = I^perp " << yes(r.self_orthogonal) << "\n";
    o.json["ideal"] = Json{{"ideal", r.ideal}, {"abelian", r.abelian}, {"self_orthogonal", r.self_orthogonal}};
    ok = ok && r.ok();
  }

  if (series(m.algebra).nilpotent_length) {
    const GradedSubspace w = seed.empty() ? nothing(m.algebra) : subspace_by_names(m.algebra, seed);
    const MaximalIsotropic mx = maximal_isotropic_stable(m, w);
    o.text << "maximal isotropic stable subspace: " << join(basis_strings(m.algebra.space(), mx.subspace), "; ")
           << "\n";
    o.text << "isotropic " << yes(mx.isotropic) << ", stable " << yes(mx.stable) << ", dim " << mx.subspace.dim()
           << " = [m/2] " << yes(mx.dimension);
    if (mx.perp_into) o.text << ", ad(W^perp) in W " << yes(*mx.perp_into);
    o.text << "\n";
    Json mj = subspace_json(m.algebra.space(), mx.subspace);
    mj["isotropic"] = mx.isotropic;
    mj["stable"] = mx.stable;
    mj["dimension"] = mx.dimension;
    mj["perp_into"] = mx.perp_into ? Json(*mx.perp_into) : Json(nullptr);
    o.json["maximal"] = mj;
    ok = ok && mx.ok();
  } else {
    o.text << "maximal isotropic stable subspace: skipped, algebra is not nilpotent\n";
    o.json["maximal"] = nullptr;
  }
  o.json["ok"] = ok;
  if (!ok) o.exit = 2;
}

void cmd_equivalence(const std::string& file, const std::string& t1, const std::string& t2, Output& o) {
  const NLieSuperalgebra g = load_valid(file);
  const Representation co = coadjoint(g);
  const Cochain a = cochain_from_json(co, read_json_file(t1));
  const Cochain b = cochain_from_json(co, read_json_file(t2));
  (void)build_tstar(g, a);
  (void)build_tstar(g, b);
  const EquivalenceResult r = tstar_equivalence(g, a, b);
  o.text << "algebra " << g.name() << "\n";
  o.json = Json{{"algebra", g.name()}, {"equivalent", r.theta_prime.has_value()}};
  if (!r.theta_prime) {
    o.text << "equivalent: no (theta1 - theta2 is not a coboundary)\n";
    o.json["theta_prime"] = nullptr;
    o.json["isometric"] = false;
    return;
  }
  const CochainSpace s0(co, 0);
  o.text << "equivalent: yes\n";
  o.text << "theta': " << cochain_to_json(co, *r.theta_prime)["entries"].size() << " entries\n";
  o.text << "induced form: " << (r.induced_form.is_zero() ? "zero" : "nonzero") << ", supersymmetric "
         << yes(r.induced_properties.supersymmetric) << ", invariant " << yes(r.induced_properties.invariant) << "\n";
  o.text << "isometrically equivalent: " << yes(r.isometric) << "\n";
  o.json["theta_prime"] = cochain_to_json(co, *r.theta_prime);
  o.json["induced_form"] = form_to_json(g.space(), r.induced_form);
  o.json["induced_supersymmetric"] = r.induced_properties.supersymmetric;
  o.json["induced_invariant"] = r.induced_properties.invariant;
  o.json["isometric"] = r.isometric;
  o.json["isometric_theta_prime"] = r.isometric_theta_prime ? cochain_to_json(co, *r.isometric_theta_prime) : Json(nullptr);
  if (!r.induced_properties.supersymmetric || !r.induced_properties.invariant) o.exit = 2;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"structure-constant workbench for first-class n-Lie superalgebras", "nlsa"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "emit a JSON report");

  std::string file, file2, file3, module = "trivial", parity = "both", theta, form, out, action;
  std::size_t degree = 1;
  bool compatible = false;
  std::vector<std::string> ideal, seed;

  auto* validate = app.add_subcommand("validate", "check grading, skew symmetry and the Filippov identity");
  validate->add_option("algebra", file, "algebra file")->required();
  auto* ser = app.add_subcommand("series", "derived, lower central and centralizer series");
  ser->add_option("algebra", file, "algebra file")->required();
  auto* coh = app.add_subcommand("cohomology", "dimensions of cochains, cocycles, coboundaries, cohomology");
  coh->add_option("algebra", file, "algebra file")->required();
  coh->add_option("--module", module, "trivial, adjoint or coadjoint");
  coh->add_option("--degree", degree, "cochain degree m");
  coh->add_option("--parity", parity, "even, odd or both");
  coh->add_flag("--wedge-compatible", compatible, "use the wedge-compatible subcomplex (m >= 1)");
  auto* ext = app.add_subcommand("extend", "abelian extension from a cocycle");
  ext->add_option("base", file, "base algebra file")->required();
  ext->add_option("fiber", file2, "abelian fiber algebra file")->required();
  ext->add_option("cocycle", file3, "cocycle file (values in the fiber)")->required();
  ext->add_option("--action", action, "action file (default: zero action)");
  ext->add_option("--out", out, "write the extension algebra here");
  auto* ts = app.add_subcommand("tstar", "T*-extension and its hyperbolic form");
  ts->add_option("algebra", file, "algebra file")->required();
  ts->add_option("--theta", theta, "cyclic cocycle file (default: zero)");
  ts->add_option("--out", out, "write PREFIX.json and PREFIX.form.json");
  auto* rec = app.add_subcommand("reconstruct", "isometry onto a T*-extension");
  rec->add_option("algebra", file, "algebra file")->required();
  rec->add_option("--form", form, "form file")->required();
  rec->add_option("--ideal", ideal, "basis names spanning a half-dimensional isotropic ideal")->delimiter(',');
  rec->add_option("--out", out, "write PREFIX.quotient.json and PREFIX.theta.json");
  auto* iso = app.add_subcommand("isotropic", "form diagnostics, centralizer duality, maximal isotropic ideals");
  iso->add_option("algebra", file, "algebra file")->required();
  iso->add_option("--form", form, "form file")->required();
  iso->add_option("--ideal", ideal, "basis names of a half-dimensional isotropic subspace")->delimiter(',');
  iso->add_option("--seed", seed, "basis names of an isotropic ideal to extend")->delimiter(',');
  auto* eq = app.add_subcommand("equivalence", "equivalence of two T*-extensions");
  eq->add_option("algebra", file, "algebra file")->required();
  eq->add_option("theta1", file2, "first cyclic cocycle file")->required();
  eq->add_option("theta2", file3, "second cyclic cocycle file")->required();

  CliResult result;
  std::ostringstream cout, cerr;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, cout, cerr);
    result.out = cout.str();
    result.err = cerr.str();
    result.exit = code == 0 ? 0 : 1;
    return result;
  }

  Output o;
  try {
    if (*validate) cmd_validate(file, o);
    if (*ser) cmd_series(file, o);
    if (*coh) cmd_cohomology(file, module, degree, parity, compatible, o);
    if (*ext) cmd_extend(file, file2, file3, action, out, o);
    if (*ts) cmd_tstar(file, theta, out, o);
    if (*rec) cmd_reconstruct(file, form, ideal, out, o);
    if (*iso) cmd_isotropic(file, form, ideal, seed, o);
    if (*eq) cmd_equivalence(file, file2, file3, o);
  } catch (const Error& e) {
    result.exit = exit_code(e.code());
    result.err = std::string(e.what()) + "\n";
    if (json) result.out = Json{{"error", to_string(e.code())}, {"message", e.what()}}.dump(2) + "\n";
    return result;
  } catch (const std::exception& e) {
    result.exit = 1;
    result.err = std::string(e.what()) + "\n";
    return result;
  }
  result.exit = o.exit;
  result.out = json ? o.json.dump(2) + "\n" : o.text.str();
  return result;
}

}  // namespace nlsa
