#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <sstream>

#include "thresholds/asymptotic.hpp"
#include "thresholds/errors.hpp"
#include "thresholds/frobenius.hpp"
#include "thresholds/lct0.hpp"
#include "thresholds/newton.hpp"
#include "thresholds/redmodp.hpp"
#include "thresholds/testideal.hpp"

namespace thresholds::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  bool strict = false;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> p;
  std::optional<unsigned> e;
  std::optional<std::string> lambda;
  std::optional<std::uint64_t> mmax;
  std::optional<std::uint64_t> grid;
  std::optional<std::uint64_t> pmax;
  std::string poly;
  std::string ideal;
  std::string monomial;
  std::string diagonal;
  std::string family;
  std::string primes;
  std::string point;
  std::string weights;
  std::vector<std::string> halfspaces;
  Budget budget;
};

struct Outcome {
  Json json;
  std::string text;
  bool certified = true;
};

std::string frac(const Rational& q) { return to_fraction_string(q); }

Json interval_json(const RationalInterval& iv) { return Json{{"lo", frac(iv.lo)}, {"hi", frac(iv.hi)}}; }

Json threshold_json(const ThresholdResult& t) {
  return Json{{"lo", frac(t.lo())}, {"hi", frac(t.hi())}, {"certified", t.certified()}, {"method", to_string(t.method())}};
}

Json ideal_json(const PolyIdeal& a) {
  Json gens = Json::array();
  for (const auto& g : a.generators()) gens.push_back(render(g));
  return gens;
}

std::string ideal_text(const PolyIdeal& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.generators().size(); ++i) s += (i ? ", " : "") + render(a.generators()[i]);
  return s + ")";
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<std::uint64_t> split_u64(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& item : split(text, ',')) {
    Rational q = parse_rational(item);
    if (q.get_den() != 1 || q < 0) throw PreconditionError("expected a nonnegative integer, got '" + item + "'");
    out.push_back(to_u64(q.get_num()));
  }
  return out;
}

std::vector<Rational> split_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_rational(item));
  return out;
}

Field prime_field(const Options& o) {
  if (!o.p) throw PreconditionError("--p is required");
  return Field::prime(*o.p);
}

PolyIdeal read_ideal(const Options& o, const Field& field) {
  int given = !o.poly.empty() + !o.ideal.empty() + !o.monomial.empty();
  if (given != 1) throw PreconditionError("give exactly one of --poly, --ideal, --monomial");
  const std::string& text = !o.poly.empty() ? o.poly : !o.ideal.empty() ? o.ideal : o.monomial;
  Ring ring = infer_ring({text}, field);
  if (!o.poly.empty()) return PolyIdeal(ring, {parse_polynomial(text, ring)});
  PolyIdeal a = parse_ideal(text, ring);
  if (!o.monomial.empty() && !a.is_monomial()) throw PreconditionError("--monomial expects monomial generators");
  return a;
}

Rational read_lambda(const Options& o, const char* fallback) {
  Rational lambda = parse_rational(o.lambda ? *o.lambda : fallback);
  if (lambda < 0) throw PreconditionError("--lambda must be nonnegative");
  return lambda;
}

Outcome cmd_lct(const Options& o) {
  Outcome out;
  if (!o.monomial.empty()) {
    MonomialIdeal a = parse_monomial_ideal(o.monomial);
    ExtendedRational v = lct_monomial(a);
    out.json = {{"lct", v.is_infinite() ? "inf" : frac(v.value())}, {"method", "linear-program"}, {"ideal", a.str()}};
    out.text = v.str() + "\n";
  } else if (!o.diagonal.empty()) {
    ThresholdResult t = lct_closed_form(Diagonal{split_u64(o.diagonal)});
    out.json = {{"lct", frac(t.value())}, {"method", to_string(t.method())}};
    out.text = to_string(t.value()) + "\n";
  } else if (!o.poly.empty()) {
    Ring ring = infer_ring({o.poly}, Field::rationals());
    Polynomial f = parse_polynomial(o.poly, ring);
    ExtendedRational v = lct_of_polynomial(f);
    out.json = {{"lct", v.is_infinite() ? "inf" : frac(v.value())}, {"polynomial", render(f)}};
    out.text = v.str() + "\n";
  } else {
    throw PreconditionError("lct needs --monomial, --diagonal or --poly");
  }
  return out;
}

Outcome cmd_fpt(const Options& o) {
  Field field = prime_field(o);
  PolyIdeal a = read_ideal(o, field);
  FrobeniusContext ctx{field.characteristic(), a.ring().nvars(), o.e.value_or(4)};
  FptReport r = fpt_enclosure(a, ctx, o.budget);
  Outcome out;
  out.certified = r.threshold.certified();
  Json nus = Json::array();
  std::string nu_text;
  for (auto v : r.nu.values) {
    nus.push_back(v);
    nu_text += " " + std::to_string(v);
  }
  out.json = {{"ideal", ideal_json(a)},
              {"p", ctx.p},
              {"e_max", ctx.e_max},
              {"fpt", threshold_json(r.threshold)},
              {"family", r.family.empty() ? Json(nullptr) : Json(r.family)},
              {"nu", nus},
              {"enclosure", interval_json(r.enclosure)}};
  std::ostringstream text;
  if (r.threshold.is_exact())
    text << "fpt = " << to_string(r.threshold.value());
  else
    text << "fpt in " << r.threshold.str();
  text << " (" << (r.family.empty() ? "" : r.family + ", ") << (r.threshold.certified() ? "certified" : "uncertified")
       << ")\n";
  text << "nu(1.." << ctx.e_max << "):" << nu_text << "\n";
  text << "enclosure: [" << to_string(r.enclosure.lo) << ", " << to_string(r.enclosure.hi) << "]\n";
  out.text = text.str();
  return out;
}

Outcome cmd_nu(const Options& o) {
  Field field = prime_field(o);
  PolyIdeal a = read_ideal(o, field);
  unsigned e = o.e.value_or(1);
  std::uint64_t v = nu(a, e, o.budget);
  Outcome out;
  out.json = {{"ideal", ideal_json(a)}, {"p", field.characteristic()}, {"e", e}, {"nu", v}};
  out.text = std::to_string(v) + "\n";
  return out;
}

Outcome cmd_tau(const Options& o) {
  Field field = prime_field(o);
  PolyIdeal a = read_ideal(o, field);
  Rational lambda = read_lambda(o, "1");
  TauResult r = tau(a, lambda, o.e.value_or(5), o.budget);
  Outcome out;
  out.certified = r.stabilized;
  Json chain = Json::array();
  for (const auto& I : r.chain) chain.push_back(ideal_json(I));
  out.json = {{"ideal", ideal_json(a)}, {"p", field.characteristic()}, {"lambda", frac(lambda)},
              {"tau", ideal_json(r.ideal)}, {"stabilized", r.stabilized},
              {"stable_at", r.stabilized ? Json(r.stable_at) : Json(nullptr)}, {"chain", chain}};
  out.text = "tau = " + ideal_text(r.ideal) + "\n" +
             (r.stabilized ? "stable from e = " + std::to_string(r.stable_at) : std::string("not stabilized")) + "\n";
  return out;
}

Outcome cmd_fjump(const Options& o) {
  Field field = prime_field(o);
  PolyIdeal a = read_ideal(o, field);
  Rational lambda_max = read_lambda(o, "1");
  std::uint64_t grid = o.grid.value_or(default_grid(field.characteristic()));
  JumpingReport r = fjump_scan(a, lambda_max, grid, o.e.value_or(5), o.budget);
  Outcome out;
  out.certified = r.exactness == JumpExactness::Certified;
  Json jumps = Json::array();
  std::ostringstream text;
  for (const auto& j : r.jumps) {
    jumps.push_back({{"lambda", frac(j.lambda)}, {"before", ideal_json(j.before)}, {"after", ideal_json(j.after)},
                     {"pinned", j.pinned}});
    text << to_string(j.lambda) << "\t" << ideal_text(j.before) << " -> " << ideal_text(j.after)
         << (j.pinned ? "\tpinned" : "") << "\n";
  }
  std::string exactness = r.exactness == JumpExactness::Certified ? "certified" : "grid-resolution";
  out.json = {{"ideal", ideal_json(a)}, {"p", field.characteristic()}, {"lambda_max", frac(lambda_max)},
              {"grid", grid}, {"exactness", exactness}, {"all_stabilized", r.all_stabilized}, {"jumps", jumps}};
  text << "grid 1/" << grid << ", " << exactness << (r.all_stabilized ? "" : ", some tau not stabilized") << "\n";
  out.text = text.str();
  return out;
}

Outcome cmd_newton(const Options& o) {
  if (o.monomial.empty()) throw PreconditionError("newton needs --monomial");
  MonomialIdeal a = parse_monomial_ideal(o.monomial);
  Outcome out;
  ExtendedRational lct = lct_monomial(a);
  out.json = {{"ideal", a.str()}, {"lct", lct.is_infinite() ? "inf" : frac(lct.value())}};
  std::ostringstream text;
  text << "ideal: " << a.str() << "\nlct: " << lct.str() << "\n";
  if (!lct.is_infinite()) {
    Rational arn = diagonal_hit(a);
    out.json["arnold_multiplicity"] = frac(arn);
    text << "arnold multiplicity: " << to_string(arn) << "\n";
  }
  if (a.is_proper() && a.is_m_primary()) {
    Integer mult = multiplicity_monomial(a);
    bool amgm = check_amgm(a);
    out.json["multiplicity"] = frac(Rational(mult));
    out.json["amgm"] = amgm;
    text << "multiplicity: " << mult.get_str() << "\namgm: " << (amgm ? "holds" : "FAILS") << "\n";
  }
  if (!o.point.empty()) {
    RationalPoint q = parse_point(o.point);
    if (q.size() != a.nvars()) throw PreconditionError("--point has the wrong dimension");
    bool inside = contains_point(NewtonPolyhedron(a), q);
    out.json["point_inside"] = inside;
    text << "point " << o.point << ": " << (inside ? "inside" : "outside") << "\n";
  }
  if (!o.weights.empty()) {
    RationalPoint v(split_rationals(o.weights));
    Rational val = monomial_valuation(v, a);
    out.json["valuation"] = frac(val);
    text << "valuation: " << to_string(val) << "\n";
  }
  out.text = text.str();
  return out;
}

GradedMonomialSequence read_sequence(const Options& o) {
  std::string family = o.family.empty() ? "hyperbola" : o.family;
  if (family == "hyperbola") return HyperbolaQ{};
  if (family == "powers") {
    if (o.monomial.empty()) throw PreconditionError("--family powers needs --monomial");
    return PowersOf{parse_monomial_ideal(o.monomial)};
  }
  if (family == "polyhedral") {
    if (o.halfspaces.empty()) throw PreconditionError("--family polyhedral needs --halfspace \"c1,...,cn>=b\"");
    PolyhedralQ q{0, {}};
    for (const auto& h : o.halfspaces) {
      auto ge = h.find(">=");
      if (ge == std::string::npos) throw PreconditionError("half-space '" + h + "' must read c1,...,cn>=b");
      HalfSpace hs{split_rationals(h.substr(0, ge)), parse_rational(h.substr(ge + 2))};
      if (q.nvars == 0) q.nvars = hs.normal.size();
      q.constraints.push_back(std::move(hs));
    }
    return q;
  }
  throw PreconditionError("unknown sequence family '" + family + "' (hyperbola, powers, polyhedral)");
}

Outcome cmd_asym(const Options& o) {
  GradedMonomialSequence s = read_sequence(o);
  std::uint64_t m_max = o.mmax.value_or(2048);
  const bool hyperbola = std::holds_alternative<HyperbolaQ>(s);
  const bool valuation = !o.weights.empty();
  std::optional<GoldenRatioReport> golden;
  AsymptoticEstimate est;
  std::string reference = "exact";
  if (valuation) {
    est = val_asym(s, RationalPoint(split_rationals(o.weights)), m_max, o.budget);
    if (hyperbola && est.convergence == Convergence::ClosedForm) reference = "2*sqrt(alpha*beta)-alpha";
  } else if (hyperbola && m_max >= 16) {
    golden = golden_ratio_demo(m_max, o.budget);
    est = golden->estimate;
    reference = "(sqrt(5)-1)/2";
  } else {
    est = arn_asym(s, m_max, o.budget);
    if (hyperbola) reference = "(sqrt(5)-1)/2";
  }
  Outcome out;
  Json values = Json::array();
  std::ostringstream text;
  text << "m\t" << (valuation ? "val(a_m)/m" : "Arn(a_m)/m") << "\tapprox\n";
  for (const auto& [m, v] : est.values) {
    values.push_back({{"m", m}, {"value", frac(v)}, {"approx", decimal(v, 12)}});
    text << m << "\t" << to_string(v) << "\t" << decimal(v, 12) << "\n";
  }
  Json summary = {{"limit_lo", frac(est.limit.lo)}, {"limit_hi", frac(est.limit.hi)}, {"reference", reference}};
  out.json = {{"quantity", valuation ? "valuation" : "arnold_multiplicity"},
              {"convergence", to_string(est.convergence)},
              {"summary", summary},
              {"min_so_far", frac(est.min_so_far)},
              {"fitted_constant", frac(est.fitted_constant)},
              {"values", values}};
  if (golden) {
    out.json["tolerance"] = frac(golden->tolerance);
    out.json["within_tolerance"] = golden->within_tolerance;
    out.certified = golden->within_tolerance;
  }
  text << summary.dump() << "\n";
  out.text = text.str();
  return out;
}

Outcome cmd_compare(const Options& o) {
  std::string family = o.family.empty() ? "cusp" : o.family;
  ComparisonInput input = LctFamilyInput{Node{}};
  if (family == "cusp") {
    input = LctFamilyInput{Diagonal{{2, 3}}};
  } else if (family == "diagonal") {
    if (o.diagonal.empty()) throw PreconditionError("--family diagonal needs --diagonal \"a1,...,an\"");
    input = LctFamilyInput{Diagonal{split_u64(o.diagonal)}};
  } else if (family == "monomial") {
    if (o.monomial.empty()) throw PreconditionError("--family monomial needs --monomial");
    input = LctFamilyInput{Monomial{parse_monomial_ideal(o.monomial)}};
  } else if (family == "cubic") {
    std::string text = o.poly.empty() ? "x^3+y^3+z^3" : o.poly;
    Ring ring(3, Field::integers(), VariableNames::Letters);
    input = CubicCone{parse_polynomial(text, ring)};
  } else if (family != "node") {
    throw PreconditionError("unknown comparison family '" + family + "' (cusp, diagonal, monomial, cubic, node)");
  }
  std::vector<std::uint64_t> primes = o.primes.empty() ? primes_up_to(o.pmax.value_or(100)) : split_u64(o.primes);
  auto rows = compare_family(input, primes, o.e.value_or(3), o.budget);
  Outcome out;
  Json arr = Json::array();
  for (const auto& r : rows) {
    if (!r.excluded && !r.fpt.certified()) out.certified = false;
    arr.push_back({{"p", r.p},
                   {"fpt", threshold_json(r.fpt)},
                   {"lct0", frac(r.lct0)},
                   {"relation", to_string(r.relation)},
                   {"modulus", r.modulus ? Json(*r.modulus) : Json(nullptr)},
                   {"residue", r.residue ? Json(*r.residue) : Json(nullptr)},
                   {"degenerate", r.degenerate},
                   {"excluded", r.excluded},
                   {"family", r.family}});
  }
  out.json = {{"label", "evidence"}, {"family", family}, {"rows", arr}};
  out.text = comparison_table(rows) + "(finite evidence over the listed primes)\n";
  return out;
}

Outcome cmd_ordinary(const Options& o) {
  Field field = prime_field(o);
  if (o.poly.empty()) throw PreconditionError("ordinary needs --poly with a ternary cubic form");
  Ring ring(3, field, VariableNames::Letters);
  Polynomial f = parse_polynomial(o.poly, ring);
  bool ordinary = is_ordinary_cubic(f);
  Rational fpt = fpt_cubic_cone(f);
  Outcome out;
  out.json = {{"polynomial", render(f)}, {"p", field.characteristic()}, {"ordinary", ordinary}, {"fpt", frac(fpt)}};
  out.text = std::string(ordinary ? "ordinary" : "supersingular") + "\nfpt = " + to_string(fpt) + "\n";
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& budget_spec) {
  Options o;
  CLI::App app{"Exact singularity thresholds: lct, F-pure thresholds, test ideals"};
  app.name("thresholds");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--strict", o.strict, "Exit with status 3 on budget or uncertified outcomes");
  app.add_option("--seed", o.seed, "Random seed, echoed in reports");

  auto add_ideal = [&](CLI::App* c) {
    c->add_option("--poly", o.poly, "Polynomial generator");
    c->add_option("--ideal", o.ideal, "Comma-separated generators");
    c->add_option("--monomial", o.monomial, "Comma-separated monomial generators");
  };
  auto* lct = app.add_subcommand("lct", "Log canonical threshold at the origin");
  add_ideal(lct);
  lct->add_option("--diagonal", o.diagonal, "Exponents a1,...,an of x1^a1 + ... + xn^an");
  auto* fpt = app.add_subcommand("fpt", "F-pure threshold enclosure");
  add_ideal(fpt);
  auto* nu = app.add_subcommand("nu", "Largest i with a^i outside m^[p^e]");
  add_ideal(nu);
  auto* tau = app.add_subcommand("tau", "Test ideal tau(a^lambda)");
  add_ideal(tau);
  auto* fjump = app.add_subcommand("fjump", "F-jumping numbers on a grid");
  add_ideal(fjump);
  auto* newton = app.add_subcommand("newton", "Newton polyhedron invariants of a monomial ideal");
  newton->add_option("--monomial", o.monomial, "Comma-separated monomial generators");
  newton->add_option("--point", o.point, "Point to test for membership, e.g. 1/2,1");
  newton->add_option("--weights", o.weights, "Weights of a monomial valuation");
  auto* asym = app.add_subcommand("asym", "Asymptotic invariants of graded monomial sequences");
  asym->add_option("--family", o.family, "hyperbola, powers or polyhedral");
  asym->add_option("--monomial", o.monomial, "Ideal for --family powers");
  asym->add_option("--halfspace", o.halfspaces, "Constraint c1,...,cn>=b for --family polyhedral");
  asym->add_option("--weights", o.weights, "Valuation weights instead of the Arnold multiplicity");
  auto* compare = app.add_subcommand("compare", "lct versus fpt of reductions mod p");
  compare->add_option("--family", o.family, "cusp, diagonal, monomial, cubic or node");
  compare->add_option("--diagonal", o.diagonal, "Exponents for --family diagonal");
  compare->add_option("--monomial", o.monomial, "Ideal for --family monomial");
  compare->add_option("--poly", o.poly, "Integer cubic form for --family cubic");
  compare->add_option("--primes", o.primes, "Comma-separated primes");
  compare->add_option("--pmax", o.pmax, "All primes up to this bound (default 100)");
  auto* ordinary = app.add_subcommand("ordinary", "Ordinarity of a plane cubic over F_p");
  ordinary->add_option("--poly", o.poly, "Ternary cubic form");

  for (auto* c : {fpt, nu, tau, fjump, ordinary}) c->add_option("--p", o.p, "Prime characteristic");
  for (auto* c : {fpt, nu, tau, fjump, compare}) c->add_option("--e", o.e, "Frobenius exponent or horizon");
  for (auto* c : {tau, fjump}) c->add_option("--lambda", o.lambda, "Exponent as num/den");
  fjump->add_option("--grid", o.grid, "Grid denominator");
  asym->add_option("--mmax", o.mmax, "Largest m sampled (default 2048)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return InputError;
  }

  try {
    if (budget_spec) o.budget = Budget::from_spec(*budget_spec);
    CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    Outcome result;
    if (name == "lct") result = cmd_lct(o);
    else if (name == "fpt") result = cmd_fpt(o);
    else if (name == "nu") result = cmd_nu(o);
    else if (name == "tau") result = cmd_tau(o);
    else if (name == "fjump") result = cmd_fjump(o);
    else if (name == "newton") result = cmd_newton(o);
    else if (name == "asym") result = cmd_asym(o);
    else if (name == "compare") result = cmd_compare(o);
    else result = cmd_ordinary(o);

    if (o.format == "json") {
      Json doc = {{"schema", 1}, {"command", name}, {"seed", o.seed}};
      for (auto& [k, v] : result.json.items()) doc[k] = v;
      doc["certified"] = result.certified;
      out << doc.dump(2) << "\n";
    } else {
      out << result.text;
    }
    return o.strict && !result.certified ? StrictFailure : Ok;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return o.strict ? StrictFailure : Failure;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return InputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return InputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return Failure;
  }
}

}  // namespace thresholds::cli
