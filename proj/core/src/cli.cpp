#include "lnd/cli.hpp"

#include <json.hpp>

#include "lnd/certify.hpp"
#include "lnd/errors.hpp"
#include "lnd/invariants.hpp"
#include "lnd/parse.hpp"

namespace lnd {
namespace cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json images_json(const RingPtr& ring, const std::vector<Poly>& images,
                         bool skip_zero) {
  ordered_json out = ordered_json::object();
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    if (skip_zero && images[v].is_zero()) continue;
    out[ring->variable_name(v)] = images[v].to_string();
  }
  return out;
}

ordered_json derivation_json(const Derivation& d) {
  return images_json(d.ring(), d.images(), /*skip_zero=*/true);
}

ordered_json auto_json(const PolyAuto& u) {
  return images_json(u.ring(), u.images(), /*skip_zero=*/false);
}

std::string images_human(const ordered_json& images) {
  if (images.empty()) return "0";
  std::string out;
  for (auto it = images.begin(); it != images.end(); ++it) {
    if (!out.empty()) out += ", ";
    out += it.key() + " -> " + it.value().get<std::string>();
  }
  return out;
}

std::vector<Derivation> resolve_derivations(
    const SessionFile& session, const std::vector<std::string>& names) {
  std::vector<Derivation> ds;
  if (names.empty()) {
    for (const auto& [n, d] : session.derivations) ds.push_back(d);
    if (ds.empty())
      throw UsageError("cli", "the session declares no derivations");
    return ds;
  }
  for (const std::string& name : names) {
    const Derivation* d = session.find_derivation(name);
    if (!d)
      throw UsageError("cli", "unknown derivation \"" + name + "\"");
    ds.push_back(*d);
  }
  return ds;
}

const Derivation& resolve_one_derivation(const SessionFile& session,
                                         const std::string& name) {
  const Derivation* d = session.find_derivation(name);
  if (!d) throw UsageError("cli", "unknown derivation \"" + name + "\"");
  return *d;
}

const PolyAuto& resolve_auto(const SessionFile& session,
                             const std::string& name) {
  const PolyAuto* a = session.find_auto(name);
  if (!a) throw UsageError("cli", "unknown automorphism \"" + name + "\"");
  return *a;
}

Poly resolve_poly(const SessionFile& session, const std::string& name) {
  if (const Poly* p = session.find_poly(name)) return *p;
  if (auto idx = session.ring->variable_index(name))
    return Poly::variable(session.ring, *idx);
  throw UsageError("cli", "unknown polynomial \"" + name + "\"");
}

Poly resolve_f(const SessionFile& session, const RunOptions& options,
               const std::vector<Derivation>& ds) {
  if (options.f_name) return resolve_poly(session, *options.f_name);
  return kernel_generator(ds, options.max_degree);
}

struct Ctx {
  const SessionFile& session;
  const RunOptions& options;
  ordered_json result = ordered_json::object();
  std::string human;
  int exit_code = 0;

  void line(const std::string& s) { human += s + "\n"; }
};

ordered_json certificate_json(const NilpotencyCertificate& cert,
                              const RingPtr& ring) {
  ordered_json out = ordered_json::object();
  for (std::size_t v = 0; v < ring->nvars(); ++v)
    out[ring->variable_name(v)] = cert.nil_degree[v];
  return out;
}

ordered_json triangular_json(const TriangularReport& report) {
  ordered_json out;
  out["pass"] = report.pass;
  out["degree_bound"] = report.degree_bound;
  ordered_json pairs = ordered_json::array();
  for (const TriangularPairCheck& pc : report.pairs) {
    ordered_json p;
    p["i"] = pc.i;
    p["j"] = pc.j;
    p["bracket_in_span"] = pc.span_coefficients.has_value();
    if (pc.span_coefficients) {
      ordered_json cs = ordered_json::array();
      for (const Rat& c : *pc.span_coefficients) cs.push_back(rat_to_string(c));
      p["coefficients"] = cs;
    } else {
      p["coefficients"] = nullptr;
    }
    p["restricted_commutes"] = pc.restricted_commutes;
    pairs.push_back(std::move(p));
  }
  out["pairs"] = std::move(pairs);
  return out;
}

ordered_json fiber_report_json(const FiberReport& report) {
  ordered_json out;
  ordered_json factors = ordered_json::array();
  for (const FiberFactor& f : report.factors) {
    ordered_json j;
    j["factor"] = f.factor.to_string();
    j["multiplicity"] = f.multiplicity;
    j["irreducible_certified"] = f.irreducible_certified;
    factors.push_back(std::move(j));
  }
  out["factors"] = std::move(factors);
  ordered_json roots = ordered_json::array();
  for (const FiberRationalRoot& r : report.rational_roots) {
    ordered_json j;
    j["alpha"] = rat_to_string(r.alpha);
    j["multiplicity"] = r.multiplicity;
    j["witness_index"] = r.witness_index;
    roots.push_back(std::move(j));
  }
  out["rational_roots"] = std::move(roots);
  return out;
}

void fiber_report_human(Ctx& ctx, const FiberReport& report) {
  if (report.rational_roots.empty()) {
    ctx.line("  no rational degenerate fibers");
  } else {
    for (const FiberRationalRoot& r : report.rational_roots)
      ctx.line("  degenerate fiber alpha = " + rat_to_string(r.alpha) +
               " (multiplicity " + std::to_string(r.multiplicity) +
               ", witness i = " + std::to_string(r.witness_index) + ")");
  }
  for (const FiberFactor& f : report.factors)
    if (!f.irreducible_certified)
      ctx.line("  non-rational roots inside factor " + f.factor.to_string() +
               " (multiplicity " + std::to_string(f.multiplicity) + ")");
}

const std::vector<std::string> kAssumed = {
    "the coordinate ring is factorial (assumed, not verified)",
    "the unit group is Q* (assumed, not verified)",
};

ordered_json assumed_json() {
  ordered_json out = ordered_json::array();
  for (const std::string& s : kAssumed) out.push_back(s);
  return out;
}

// ---------------------------------------------------------------- commands

void cmd_check(Ctx& ctx, const std::vector<std::string>& names) {
  std::vector<std::string> resolved = names;
  if (resolved.empty())
    for (const auto& [n, d] : ctx.session.derivations) resolved.push_back(n);
  if (resolved.empty())
    throw UsageError("check", "the session declares no derivations");

  bool any_unknown = false;
  bool any_fail = false;
  std::vector<Derivation> ds;
  ordered_json items = ordered_json::array();
  for (const std::string& name : resolved) {
    const Derivation& d = resolve_one_derivation(ctx.session, name);
    ds.push_back(d);
    ordered_json item;
    item["name"] = name;
    auto cert = check_locally_nilpotent(d, ctx.options.max_power);
    if (cert) {
      item["nilpotency"] = certificate_json(*cert, d.ring());
      ctx.line("derivation " + name + ": locally nilpotent on generators, " +
               "nil degrees " + images_human(item["nilpotency"]));
    } else {
      item["nilpotency"] = nullptr;
      any_unknown = true;
      ctx.line("derivation " + name + ": Unknown (no certificate within " +
               std::to_string(ctx.options.max_power) + " applications)");
    }
    item["induces_on_quotient"] = true;  // enforced at construction
    items.push_back(std::move(item));
  }
  ctx.result["derivations"] = std::move(items);

  TriangularReport tri = triangular_basis_check(ds, ctx.options.max_degree);
  ctx.result["triangular"] = triangular_json(tri);
  any_fail = any_fail || !tri.pass;
  ctx.line(std::string("triangular basis check: ") +
           (tri.pass ? "pass" : "FAIL"));
  for (const TriangularPairCheck& pc : tri.pairs) {
    std::string span_note = pc.span_coefficients
                                ? "bracket in span of earlier basis"
                                : "bracket NOT in span of earlier basis";
    ctx.line("  pair (" + std::to_string(pc.i) + "," + std::to_string(pc.j) +
             "): " + span_note + "; restricted commutation " +
             (pc.restricted_commutes ? "holds" : "FAILS"));
  }

  ctx.exit_code = any_fail ? 1 : (any_unknown ? 2 : 0);
}

void cmd_bracket(Ctx& ctx, const std::vector<std::string>& names) {
  if (names.size() != 2)
    throw UsageError("bracket", "usage: bracket D E");
  const Derivation& d = resolve_one_derivation(ctx.session, names[0]);
  const Derivation& e = resolve_one_derivation(ctx.session, names[1]);
  Derivation bracket = lie_bracket(d, e);
  ctx.result["bracket_images"] = derivation_json(bracket);
  ctx.line("[" + names[0] + "," + names[1] + "] = " +
           images_human(ctx.result["bracket_images"]));

  std::vector<std::string> basis_names = ctx.options.span;
  if (basis_names.empty()) {
    for (const auto& [n, unused] : ctx.session.derivations)
      if (n != names[0] && n != names[1]) basis_names.push_back(n);
  }
  std::vector<Derivation> basis;
  for (const std::string& n : basis_names)
    basis.push_back(resolve_one_derivation(ctx.session, n));
  auto coefficients = k_span_membership(bracket, basis);

  ordered_json span;
  span["basis"] = basis_names;
  if (coefficients) {
    ordered_json cs = ordered_json::array();
    for (const Rat& c : *coefficients) cs.push_back(rat_to_string(c));
    span["coefficients"] = cs;
    std::string human_cs;
    for (const Rat& c : *coefficients) {
      if (!human_cs.empty()) human_cs += ", ";
      human_cs += rat_to_string(c);
    }
    ctx.line("lies in the span of the other derivations with coefficients (" +
             human_cs + ")");
  } else {
    span["coefficients"] = nullptr;
    ctx.line("does not lie in the span of the other derivations");
  }
  ctx.result["span"] = std::move(span);
}

void cmd_span(Ctx& ctx, const std::vector<std::string>& names) {
  if (names.empty())
    throw UsageError("span", "usage: span E [B1 B2 ...]");
  const Derivation& e = resolve_one_derivation(ctx.session, names[0]);
  std::vector<Derivation> basis;
  std::vector<std::string> basis_names(names.begin() + 1, names.end());
  for (const std::string& n : basis_names)
    basis.push_back(resolve_one_derivation(ctx.session, n));
  auto coefficients = k_span_membership(e, basis);
  ctx.result["basis"] = basis_names;
  if (coefficients) {
    ordered_json cs = ordered_json::array();
    std::string human_cs;
    for (const Rat& c : *coefficients) {
      cs.push_back(rat_to_string(c));
      if (!human_cs.empty()) human_cs += ", ";
      human_cs += rat_to_string(c);
    }
    ctx.result["coefficients"] = cs;
    ctx.line(names[0] + " lies in the span with coefficients (" + human_cs +
             ")");
  } else {
    ctx.result["coefficients"] = nullptr;
    ctx.line(names[0] + " does not lie in the span");
    ctx.exit_code = 1;
  }
}

void cmd_exp(Ctx& ctx, const std::vector<std::string>& names) {
  if (names.size() != 1) throw UsageError("exp", "usage: exp D [--t r]");
  const Derivation& d = resolve_one_derivation(ctx.session, names[0]);
  auto cert = check_locally_nilpotent(d, ctx.options.max_power);
  if (!cert)
    throw InconclusiveError(
        "exp", "no nilpotency certificate for " + names[0] + " within " +
                   std::to_string(ctx.options.max_power) +
                   " applications (raise --max-power)");
  PolyAuto u = exp_derivation(d, ctx.options.t, *cert);
  ctx.result["t"] = rat_to_string(ctx.options.t);
  ctx.result["certificate"] = certificate_json(*cert, d.ring());
  ctx.result["auto_images"] = auto_json(u);
  ctx.line("exp(" + rat_to_string(ctx.options.t) + "*" + names[0] + "): " +
           images_human(ctx.result["auto_images"]));
}

void cmd_log(Ctx& ctx, const std::vector<std::string>& names) {
  if (names.size() != 1)
    throw UsageError("log", "usage: log U [--max-iter n]");
  const PolyAuto& u = resolve_auto(ctx.session, names[0]);
  Derivation d = log_automorphism(u, ctx.options.max_iter);
  ctx.result["derivation_images"] = derivation_json(d);
  ctx.line("log(" + names[0] + "): " +
           images_human(ctx.result["derivation_images"]));
}

void cmd_compose(Ctx& ctx, const std::vector<std::string>& names) {
  if (names.size() != 2) throw UsageError("compose", "usage: compose U V");
  const PolyAuto& u = resolve_auto(ctx.session, names[0]);
  const PolyAuto& v = resolve_auto(ctx.session, names[1]);
  PolyAuto w = compose_autos(u, v);
  ctx.result["auto_images"] = auto_json(w);
  ctx.line("compose(" + names[0] + "," + names[1] + "): " +
           images_human(ctx.result["auto_images"]));
}

void cmd_invariants(Ctx& ctx, const std::vector<std::string>& names) {
  std::vector<Derivation> ds = resolve_derivations(ctx.session, names);
  InvariantBasis basis = invariant_space(ds, ctx.options.max_degree);
  ctx.result["degree_bound"] = basis.degree_bound;
  ctx.result["dimension"] = basis.basis.size();
  ordered_json list = ordered_json::array();
  for (const Poly& p : basis.basis) list.push_back(p.to_string());
  ctx.result["basis"] = std::move(list);
  ctx.line("invariants up to degree " + std::to_string(basis.degree_bound) +
           ": dimension " + std::to_string(basis.basis.size()));
  for (const Poly& p : basis.basis) ctx.line("  " + p.to_string());
}

void cmd_kernel(Ctx& ctx, const std::vector<std::string>& names) {
  std::vector<Derivation> ds = resolve_derivations(ctx.session, names);
  Poly f = kernel_generator(ds, ctx.options.max_degree);
  ctx.result["f"] = f.to_string();
  ctx.result["degree_bound"] = ctx.options.max_degree;
  ctx.line("kernel generator f = " + f.to_string() + " (degree bound " +
           std::to_string(ctx.options.max_degree) + ")");
}

void cmd_preslice(Ctx& ctx, const std::vector<std::string>& names) {
  if (!ctx.options.index || *ctx.options.index < 1)
    throw UsageError("preslice", "--index I (1-based) is required");
  std::vector<Derivation> ds = resolve_derivations(ctx.session, names);
  Poly f = resolve_f(ctx.session, ctx.options, ds);
  PresliceResult pr = preslice_search(
      static_cast<std::size_t>(*ctx.options.index), ds, f, ctx.options.max_degree);
  ctx.result["index"] = pr.index;
  ctx.result["f"] = f.to_string();
  ctx.result["p"] = pr.p.to_string();
  ctx.result["q"] = pr.q.to_string();
  ctx.result["q_of_f"] = unipoly_at(pr.q, f).to_string();
  ctx.result["degree_bound"] = pr.degree_bound_used;
  ctx.line("preslice i = " + std::to_string(pr.index) + " (f = " +
           f.to_string() + ", bound " + std::to_string(pr.degree_bound_used) +
           ")");
  ctx.line("  p = " + pr.p.to_string());
  ctx.line("  q = " + pr.q.to_string() + "  (t stands for f)");
}

void cmd_fibers(Ctx& ctx, const std::vector<std::string>& names) {
  std::vector<Derivation> ds = resolve_derivations(ctx.session, names);
  Poly f = resolve_f(ctx.session, ctx.options, ds);
  std::vector<UniPoly> qs;
  ordered_json preslices = ordered_json::array();
  for (std::size_t i = 1; i <= ds.size(); ++i) {
    PresliceResult pr = preslice_search(i, ds, f, ctx.options.max_degree);
    ordered_json j;
    j["index"] = pr.index;
    j["p"] = pr.p.to_string();
    j["q"] = pr.q.to_string();
    preslices.push_back(std::move(j));
    qs.push_back(pr.q);
  }
  FiberReport report = degenerate_fibers(qs);
  ctx.result["f"] = f.to_string();
  ctx.result["preslices"] = std::move(preslices);
  ctx.result["fiber_report"] = fiber_report_json(report);

  ctx.line("degenerate-fiber analysis for f = " + f.to_string());
  for (std::size_t i = 0; i < qs.size(); ++i)
    ctx.line("  q_" + std::to_string(i + 1) + " = " + qs[i].to_string());
  fiber_report_human(ctx, report);

  if (ctx.options.oracle) {
    ordered_json oracle = ordered_json::array();
    UniPoly product = UniPoly::constant(Rat(1));
    for (const UniPoly& q : qs) product = product * q;
    for (long a = -3; a <= 3; ++a) {
      Rat alpha(a);
      bool dependent =
          fiber_dependence_check(ds, f, alpha, ctx.options.max_degree);
      bool vanishes = product.evaluate(alpha) == 0;
      ordered_json j;
      j["alpha"] = rat_to_string(alpha);
      j["dependent"] = dependent;
      j["product_vanishes"] = vanishes;
      j["agree"] = dependent == vanishes;
      oracle.push_back(std::move(j));
      ctx.line("  oracle alpha = " + rat_to_string(alpha) +
               ": dependence " + (dependent ? "yes" : "no") +
               ", product vanishes " + (vanishes ? "yes" : "no") +
               (dependent == vanishes ? "" : "  [MISMATCH]"));
    }
    ctx.result["oracle"] = std::move(oracle);
  }
}

void cmd_descent(Ctx& ctx, const std::vector<std::string>& names) {
  if (names.size() < 2)
    throw UsageError("descent",
                     "usage: descent P D1 [D2 ...] --gens s2,s3,...");
  Poly p = resolve_poly(ctx.session, names[0]);
  std::vector<Derivation> ds;
  for (std::size_t i = 1; i < names.size(); ++i)
    ds.push_back(resolve_one_derivation(ctx.session, names[i]));
  std::vector<Poly> gens;
  for (const std::string& g : ctx.options.gens)
    gens.push_back(resolve_poly(ctx.session, g));
  std::vector<Poly> trace;
  Poly slice = slice_descent(p, ds, gens, ctx.options.max_degree, &trace);
  ordered_json steps = ordered_json::array();
  for (const Poly& step : trace) steps.push_back(step.to_string());
  ctx.result["start"] = p.to_string();
  ctx.result["steps"] = std::move(steps);
  ctx.result["descent_steps"] = trace.size();
  ctx.result["slice"] = slice.to_string();
  ctx.line("descent from p = " + p.to_string() + " (" +
           std::to_string(trace.size()) + " steps)");
  for (const Poly& step : trace) ctx.line("  -> " + step.to_string());
  ctx.line("slice = " + slice.to_string());
}

void cmd_rectify(Ctx& ctx, const std::vector<std::string>& names) {
  std::vector<Derivation> ds = resolve_derivations(ctx.session, names);
  std::vector<Poly> coords = rectify_full(ds, ctx.options.max_degree);
  ordered_json list = ordered_json::array();
  for (const Poly& s : coords) list.push_back(s.to_string());
  ctx.result["coordinates"] = std::move(list);
  if (!ds[0].ring()->has_relation() && ds[0].ring()->nvars() == ds.size()) {
    Poly det = jacobian_det(coords);
    ctx.result["jacobian"] = det.to_string();
    ctx.line("jacobian = " + det.to_string());
  } else {
    ctx.result["jacobian"] = nullptr;
  }
  ctx.result["assumed_hypotheses"] = assumed_json();
  std::string human_coords;
  for (const Poly& s : coords) {
    if (!human_coords.empty()) human_coords += ", ";
    human_coords += s.to_string();
  }
  ctx.human = "rectified coordinates: (" + human_coords + ")\n" + ctx.human;
}

void cmd_certify(Ctx& ctx, const std::vector<std::string>& names) {
  std::vector<Derivation> ds = resolve_derivations(ctx.session, names);
  CertifyOutcome outcome = certify_coordinate(ds, ctx.options.max_degree);
  ctx.result["f"] = outcome.f.to_string();
  ordered_json preslices = ordered_json::array();
  for (const PresliceResult& pr : outcome.preslices) {
    ordered_json j;
    j["index"] = pr.index;
    j["p"] = pr.p.to_string();
    j["q"] = pr.q.to_string();
    preslices.push_back(std::move(j));
  }
  ctx.result["preslices"] = std::move(preslices);
  ctx.result["degree_bound"] = ctx.options.max_degree;

  if (outcome.certificate) {
    const CoordinateCertificate& cert = *outcome.certificate;
    ordered_json jc;
    jc["f"] = cert.f.to_string();
    ordered_json slices = ordered_json::array();
    for (const Poly& s : cert.slices) slices.push_back(s.to_string());
    jc["slices"] = std::move(slices);
    jc["jacobian"] =
        cert.jacobian ? ordered_json(rat_to_string(*cert.jacobian))
                      : ordered_json(nullptr);
    jc["bounds_used"] = cert.bounds_used;
    jc["assumed_hypotheses"] = assumed_json();
    ctx.result["certificate"] = std::move(jc);
    ctx.result["fiber_report"] = nullptr;

    ctx.line("coordinate certificate found (bound " +
             std::to_string(cert.bounds_used) + ")");
    ctx.line("  f = " + cert.f.to_string());
    for (std::size_t i = 0; i < cert.slices.size(); ++i)
      ctx.line("  s_" + std::to_string(i + 1) + " = " +
               cert.slices[i].to_string());
    if (cert.jacobian)
      ctx.line("  jacobian(s_1,...,s_n,f) = " + rat_to_string(*cert.jacobian));
    for (const std::string& h : kAssumed) ctx.line("  assumed: " + h);
  } else {
    ctx.result["certificate"] = nullptr;
    ctx.result["fiber_report"] = fiber_report_json(*outcome.fibers);
    ctx.line("no certificate: some q_i is nonconstant, so finitely many "
             "fibers degenerate");
    ctx.line("  f = " + outcome.f.to_string());
    for (const PresliceResult& pr : outcome.preslices)
      ctx.line("  q_" + std::to_string(pr.index) + " = " + pr.q.to_string());
    fiber_report_human(ctx, *outcome.fibers);
    ctx.exit_code = 1;
  }
}

void cmd_fiber_rectify(Ctx& ctx, const std::vector<std::string>& names) {
  if (!ctx.options.alpha)
    throw UsageError("fiber-rectify", "--alpha R is required");
  if (!ctx.options.f_name)
    throw UsageError("fiber-rectify", "--f VAR is required");
  std::vector<Derivation> ds = resolve_derivations(ctx.session, names);
  Poly f = resolve_poly(ctx.session, *ctx.options.f_name);
  FiberRectification fr =
      fiber_rectify(ds, f, *ctx.options.alpha, ctx.options.max_degree);

  ctx.result["alpha"] = rat_to_string(fr.alpha);
  ctx.result["fiber_ring"] = fr.fiber_ring->description();
  ctx.result["eliminated_variable"] =
      fr.eliminated_variable ? ordered_json(*fr.eliminated_variable)
                             : ordered_json(nullptr);
  ctx.result["eliminated_value"] =
      fr.eliminated_value ? ordered_json(fr.eliminated_value->to_string())
                          : ordered_json(nullptr);
  ordered_json induced = ordered_json::array();
  for (const Derivation& d : fr.induced)
    induced.push_back(derivation_json(d));
  ctx.result["induced"] = std::move(induced);
  ordered_json coords = ordered_json::array();
  for (const Poly& s : fr.coordinates) coords.push_back(s.to_string());
  ctx.result["coordinates"] = std::move(coords);

  ctx.line("fiber at alpha = " + rat_to_string(fr.alpha) + ": " +
           fr.fiber_ring->description());
  if (fr.eliminated_variable)
    ctx.line("  eliminated " + *fr.eliminated_variable + " = " +
             fr.eliminated_value->to_string());
  for (std::size_t i = 0; i < fr.induced.size(); ++i)
    ctx.line("  induced D_" + std::to_string(i + 1) + ": " +
             images_human(derivation_json(fr.induced[i])));
  std::string human_coords;
  for (const Poly& s : fr.coordinates) {
    if (!human_coords.empty()) human_coords += ", ";
    human_coords += s.to_string();
  }
  ctx.line("  coordinates: (" + human_coords + ")");
}

void cmd_mates(Ctx& ctx, const std::vector<std::string>& names) {
  if (names.size() != 1) throw UsageError("mates", "usage: mates F");
  const PolyAuto& f_map = resolve_auto(ctx.session, names[0]);
  PolyAuto certified = f_map.with_certification();
  std::vector<Derivation> mates = mates_to_derivations(certified);
  ctx.result["jacobian"] =
      rat_to_string(*certified.constant_jacobian());
  ordered_json list = ordered_json::array();
  for (const Derivation& d : mates) list.push_back(derivation_json(d));
  ctx.result["derivations"] = std::move(list);
  ctx.line("jacobian = " + ctx.result["jacobian"].get<std::string>());
  for (std::size_t i = 0; i < mates.size(); ++i)
    ctx.line("  D_" + std::to_string(i + 1) + ": " +
             images_human(derivation_json(mates[i])));
}

}  // namespace

Report run_command(const std::string& command,
                   const std::vector<std::string>& names,
                   const RunOptions& options, const SessionFile& session) {
  ordered_json envelope;
  envelope["command"] = command;
  {
    ordered_json inputs;
    inputs["session"] = options.in_path;
    inputs["digest"] = session.digest;
    inputs["names"] = names;
    envelope["inputs"] = std::move(inputs);
  }
  {
    ordered_json opt;
    opt["max_degree"] = options.max_degree;
    opt["max_power"] = options.max_power;
    opt["max_iter"] = options.max_iter;
    opt["t"] = rat_to_string(options.t);
    opt["alpha"] = options.alpha ? ordered_json(rat_to_string(*options.alpha))
                                 : ordered_json(nullptr);
    opt["f"] = options.f_name ? ordered_json(*options.f_name)
                              : ordered_json(nullptr);
    opt["gens"] = options.gens;
    envelope["options"] = std::move(opt);
  }
  {
    ordered_json conventions;
    conventions["ring"] = session.ring->description();
    conventions["monomial_order"] =
        std::string(order_name(session.ring->order()));
    conventions["bracket"] = kBracketConvention;
    conventions["compose"] = kComposeConvention;
    conventions["q_normalization"] = "q_i monic as a polynomial in f";
    envelope["conventions"] = std::move(conventions);
  }

  Ctx ctx{session, options};
  try {
    if (command == "check") {
      cmd_check(ctx, names);
    } else if (command == "bracket") {
      cmd_bracket(ctx, names);
    } else if (command == "span") {
      cmd_span(ctx, names);
    } else if (command == "exp") {
      cmd_exp(ctx, names);
    } else if (command == "log") {
      cmd_log(ctx, names);
    } else if (command == "compose") {
      cmd_compose(ctx, names);
    } else if (command == "invariants") {
      cmd_invariants(ctx, names);
    } else if (command == "kernel") {
      cmd_kernel(ctx, names);
    } else if (command == "preslice") {
      cmd_preslice(ctx, names);
    } else if (command == "fibers") {
      cmd_fibers(ctx, names);
    } else if (command == "descent") {
      cmd_descent(ctx, names);
    } else if (command == "rectify") {
      cmd_rectify(ctx, names);
    } else if (command == "certify") {
      cmd_certify(ctx, names);
    } else if (command == "fiber-rectify") {
      cmd_fiber_rectify(ctx, names);
    } else if (command == "mates") {
      cmd_mates(ctx, names);
    } else {
      throw UsageError("cli", "unknown command \"" + command + "\"");
    }
    envelope["result"] = std::move(ctx.result);
    switch (ctx.exit_code) {
      case 0: envelope["status"] = "ok"; break;
      case 1: envelope["status"] = "domain-error"; break;
      case 2: envelope["status"] = "inconclusive"; break;
      default: envelope["status"] = "usage-error"; break;
    }
    envelope["error"] = nullptr;
  } catch (const Error& err) {
    ctx.exit_code = err.exit_code();
    envelope["result"] = std::move(ctx.result);
    switch (err.kind()) {
      case ErrorKind::Domain: envelope["status"] = "domain-error"; break;
      case ErrorKind::Inconclusive: envelope["status"] = "inconclusive"; break;
      case ErrorKind::Usage: envelope["status"] = "usage-error"; break;
    }
    ordered_json je;
    je["stage"] = err.stage();
    je["message"] = err.what();
    envelope["error"] = std::move(je);
    ctx.line(std::string("error[") + err.stage() + "]: " + err.what());
  }

  Report report;
  report.exit_code = ctx.exit_code;
  report.machine = envelope.dump(2) + "\n";
  report.human = ctx.human;
  return report;
}

}  // namespace cli
}  // namespace lnd
