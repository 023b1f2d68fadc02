#include "thresholds/redmodp.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "parallel.hpp"
#include "thresholds/errors.hpp"

namespace thresholds {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct Model {
  std::vector<Polynomial> generators;  // over Z
  Rational lct0;
  std::string family;
  std::optional<std::uint64_t> modulus;
  std::uint64_t smallest_prime = 2;  // closed forms hold from this prime on
  bool cubic = false;
};

Ring integer_ring(std::size_t n) {
  return Ring(n, Field::integers(), n <= 3 ? VariableNames::Letters : VariableNames::Indexed);
}

Model build_model(const ComparisonInput& input) {
  if (const auto* cubic = std::get_if<CubicCone>(&input)) {
    const Polynomial& f = cubic->form;
    if (f.ring().nvars() != 3 || f.is_zero() || !f.is_homogeneous() || f.total_degree() != 3)
      throw PreconditionError("cubic cone needs a ternary cubic form");
    return Model{{f}, Rational(1), "cubic cone", std::nullopt, 5, true};
  }
  const auto& family = std::get<LctFamilyInput>(input);
  Model model{integer_model(family), lct_closed_form(family).value(), "", std::nullopt, 2, false};
  std::visit(overloaded{[&](const Diagonal& d) {
                          std::vector<std::uint64_t> sorted = d.exponents;
                          std::sort(sorted.begin(), sorted.end());
                          std::uint64_t product = 1;
                          for (auto a : sorted) product = ExponentVector::checked_mul(product, a);
                          model.modulus = product;
                          model.family = "diagonal";
                          if (sorted == std::vector<std::uint64_t>{2, 3}) {
                            model.family = "cusp";
                            model.smallest_prime = 5;
                          }
                        },
                        [&](const Monomial&) { model.family = "monomial"; },
                        [&](const Node&) { model.family = "node"; },
                        [&](const SmoothSubscheme&) { model.family = "smooth subscheme"; },
                        [&](const HomogeneousIsolated&) {}},
             family);
  return model;
}

ComparisonRow compare_at(const Model& model, std::uint64_t p, unsigned e_max, const Budget& budget) {
  const Ring& zring = model.generators.front().ring();
  Ring ring = zring.with_field(Field::prime(p));
  std::vector<Polynomial> reduced;
  bool degenerate = false;
  for (const auto& g : model.generators) {
    Reduction r = reduce_mod_p(g, p);
    degenerate = degenerate || r.degenerate;
    if (!r.polynomial.is_zero()) reduced.push_back(std::move(r.polynomial));
  }
  PolyIdeal ideal(ring, std::move(reduced));

  ComparisonRow row{p, ThresholdResult::exact(0, Method::NuLimit, false), model.lct0, Relation::Inconclusive,
                    model.modulus, std::nullopt, degenerate, p < model.smallest_prime, model.family};
  if (model.modulus) row.residue = p % *model.modulus;
  if (ideal.is_zero() || !ideal.inside_maximal_ideal()) {
    row.degenerate = true;
    return row;
  }
  FptReport report = fpt_enclosure(ideal, FrobeniusContext{p, ring.nvars(), e_max}, budget);
  row.fpt = report.threshold;
  if (model.cubic && !row.excluded && report.family.empty() && ideal.generators().size() == 1) {
    Rational value = fpt_cubic_cone(ideal.generators().front());
    if (report.enclosure.contains(value)) row.fpt = ThresholdResult::exact(value, Method::ClosedForm, true);
  }
  if (row.excluded || !row.fpt.certified()) return row;
  if (row.fpt.value() == row.lct0)
    row.relation = Relation::Equal;
  else if (row.fpt.value() < row.lct0)
    row.relation = Relation::FptLess;
  return row;
}

}  // namespace

Reduction reduce_mod_p(const Polynomial& f, std::uint64_t p) {
  Field target = Field::prime(p);
  if (f.ring().field().is_prime_field()) throw PreconditionError("reduction mod p needs integer coefficients");
  std::vector<Term> terms;
  bool degenerate = false;
  for (const auto& t : f.terms()) {
    Rational c = f.ring().field().to_rational(t.coefficient);
    if (c.get_den() != 1) throw PreconditionError("reduction mod p needs integer coefficients");
    Coefficient image = target.from_integer(c.get_num());
    if (target.is_zero(image)) {
      degenerate = true;
      continue;
    }
    terms.push_back({t.exponents, image});
  }
  return {Polynomial::from_sorted_terms(f.ring().with_field(target), std::move(terms)), degenerate};
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Equal: return "equal";
    case Relation::FptLess: return "fpt-less";
    case Relation::Inconclusive: return "inconclusive";
  }
  return "";
}

std::vector<Polynomial> integer_model(const LctFamilyInput& family) {
  validate(family);
  return std::visit(
      overloaded{[](const Diagonal& d) {
                   Ring ring = integer_ring(d.exponents.size());
                   Polynomial f(ring);
                   for (std::size_t i = 0; i < d.exponents.size(); ++i) {
                     ExponentVector u(d.exponents.size());
                     u.set(i, d.exponents[i]);
                     f = f + Polynomial::monomial(ring, u, ring.field().one());
                   }
                   return std::vector<Polynomial>{f};
                 },
                 [](const Monomial& m) {
                   Ring ring = integer_ring(m.ideal.nvars());
                   std::vector<Polynomial> gens;
                   for (const auto& u : m.ideal.generators())
                     gens.push_back(Polynomial::monomial(ring, u, ring.field().one()));
                   return gens;
                 },
                 [](const Node&) {
                   Ring ring = integer_ring(2);
                   return std::vector<Polynomial>{Polynomial::monomial(ring, {1, 1}, ring.field().one())};
                 },
                 [](const SmoothSubscheme& s) {
                   Ring ring = integer_ring(s.n);
                   std::vector<Polynomial> gens;
                   for (std::size_t i = 0; i < s.r; ++i) gens.push_back(Polynomial::variable(ring, i));
                   return gens;
                 },
                 [](const HomogeneousIsolated&) -> std::vector<Polynomial> {
                   throw UnsupportedFamily("homogeneous family has no canonical integer model; pass an explicit cubic form");
                 }},
      family);
}

std::vector<ComparisonRow> compare_family(const ComparisonInput& input, const std::vector<std::uint64_t>& primes,
                                          unsigned e_max, const Budget& budget) {
  Model model = build_model(input);
  std::vector<std::uint64_t> sorted = primes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (auto p : sorted) Field::prime(p);
  return detail::parallel_map(sorted.size(), [&](std::size_t i) { return compare_at(model, sorted[i], e_max, budget); });
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

std::string comparison_table(const std::vector<ComparisonRow>& rows) {
  std::vector<std::vector<std::string>> cells{{"p", "fpt", "lct0", "relation", "N", "p mod N", "notes"}};
  for (const auto& r : rows) {
    std::string notes;
    if (r.excluded) notes += "excluded ";
    if (r.degenerate) notes += "degenerate ";
    if (!r.fpt.certified()) notes += "uncertified";
    if (!notes.empty() && notes.back() == ' ') notes.pop_back();
    cells.push_back({std::to_string(r.p), r.fpt.str(), to_string(r.lct0), to_string(r.relation),
                     r.modulus ? std::to_string(*r.modulus) : "-", r.residue ? std::to_string(*r.residue) : "-",
                     notes});
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells)
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    std::ostringstream line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      line << std::left << std::setw(static_cast<int>(width[j])) << row[j] << "  ";
    }
    std::string text = line.str();
    text.erase(text.find_last_not_of(' ') + 1);
    out << text << '\n';
  }
  return out.str();
}

}  // namespace thresholds
