#include "thresholds/asymptotic.hpp"

#include <algorithm>
#include <sstream>

#include "parallel.hpp"
#include "thresholds/errors.hpp"
#include "thresholds/lp.hpp"

namespace thresholds {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Rational exponent_rational(Exponent x) { return Rational(Integer(static_cast<unsigned long>(x))); }

MonomialIdeal hyperbola_term(std::uint64_t m) {
  // (u1 + m) u2 >= m^2: for each u2 = b the least u1 is ceil(m^2/b) - m.
  std::vector<ExponentVector> gens;
  Integer m2 = Integer(static_cast<unsigned long>(m)) * Integer(static_cast<unsigned long>(m));
  for (std::uint64_t b = 1; b <= m; ++b) {
    Integer a = ceil(make_rational(m2, Integer(static_cast<unsigned long>(b)))) - Integer(static_cast<unsigned long>(m));
    gens.push_back(ExponentVector{to_u64(a < 0 ? Integer(0) : a), b});
  }
  return MonomialIdeal(2, std::move(gens));
}

MonomialIdeal polyhedral_term(const PolyhedralQ& q, std::uint64_t m, const Budget& budget) {
  const std::size_t n = q.nvars;
  const Rational scale = exponent_rational(m);
  // A minimal lattice point never exceeds, in coordinate i, what the
  // constraints involving x_i need on their own.
  std::vector<Exponent> box(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& h : q.constraints)
      if (sgn(h.normal[i]) > 0 && sgn(h.bound) > 0)
        box[i] = std::max<Exponent>(box[i], to_u64(ceil(scale * h.bound / h.normal[i])));
  std::size_t points = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    points *= box[i] + 1;
    if (points > budget.max_products) throw BudgetExceeded("lattice box for a_m exceeds the product budget");
  }
  std::vector<ExponentVector> gens;
  ExponentVector u(n);
  while (true) {
    // Least last coordinate completing u.
    bool feasible = true;
    Rational need = 0;
    for (const auto& h : q.constraints) {
      Rational rest = scale * h.bound;
      for (std::size_t j = 0; j + 1 < n; ++j) rest -= h.normal[j] * exponent_rational(u[j]);
      if (sgn(rest) <= 0) continue;
      if (sgn(h.normal[n - 1]) == 0) {
        feasible = false;
        break;
      }
      need = std::max(need, Rational(rest / h.normal[n - 1]));
    }
    if (feasible) {
      ExponentVector v = u;
      v.set(n - 1, to_u64(ceil(need)));
      gens.push_back(std::move(v));
    }
    std::size_t j = 0;
    while (j + 1 < n && u[j] == box[j]) u.set(j++, 0);
    if (j + 1 >= n) break;
    u.set(j, u[j] + 1);
  }
  return MonomialIdeal(n, std::move(gens));
}

RationalInterval point(const Rational& x) { return {x, x}; }

Rational distance(const Rational& x, const RationalInterval& iv) {
  if (x < iv.lo) return iv.lo - x;
  if (x > iv.hi) return x - iv.hi;
  return 0;
}

bool is_rational_square(const Rational& x) {
  return mpz_perfect_square_p(x.get_num_mpz_t()) && mpz_perfect_square_p(x.get_den_mpz_t());
}

Rational exact_sqrt(const Rational& x) {
  Integer num, den;
  mpz_sqrt(num.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), x.get_den_mpz_t());
  return make_rational(num, den);
}

template <typename Sample>
AsymptoticEstimate collect(std::uint64_t m_max, RationalInterval limit, Convergence convergence, Sample sample) {
  auto schedule = sample_schedule(m_max);
  auto values = detail::parallel_map(schedule.size(), [&](std::size_t i) -> Rational { return sample(schedule[i]); });
  AsymptoticEstimate est;
  est.limit = std::move(limit);
  est.convergence = convergence;
  est.fitted_constant = 0;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const Rational& v = values[i];
    if (i == 0 || v < est.min_so_far) est.min_so_far = v;
    est.fitted_constant = std::max(est.fitted_constant, Rational(exponent_rational(schedule[i]) * distance(v, est.limit)));
    est.values.emplace_back(schedule[i], v);
  }
  return est;
}

}  // namespace

std::size_t dimension(const GradedMonomialSequence& s) {
  return std::visit(overloaded{[](const PowersOf& x) { return x.ideal.nvars(); },
                               [](const PolyhedralQ& x) { return x.nvars; },
                               [](const HyperbolaQ&) { return std::size_t{2}; }},
                    s);
}

void validate(const GradedMonomialSequence& s) {
  if (const auto* q = std::get_if<PolyhedralQ>(&s)) {
    if (q->nvars == 0) throw PreconditionError("polyhedral Q needs at least one variable");
    for (const auto& h : q->constraints) {
      if (h.normal.size() != q->nvars) throw PreconditionError("half-space normal has the wrong dimension");
      bool zero = true;
      for (const auto& c : h.normal) {
        if (sgn(c) < 0) throw PreconditionError("half-space normals must be nonnegative so Q is upward closed");
        if (sgn(c) > 0) zero = false;
      }
      if (zero && sgn(h.bound) > 0) throw PreconditionError("degenerate Q: a constraint 0 >= b > 0 is empty");
    }
  }
}

MonomialIdeal sequence_term(const GradedMonomialSequence& s, std::uint64_t m, const Budget& budget) {
  validate(s);
  if (m == 0) throw PreconditionError("graded sequences are indexed from m = 1");
  return std::visit(overloaded{[&](const PowersOf& x) { return power(x.ideal, m); },
                               [&](const PolyhedralQ& x) { return polyhedral_term(x, m, budget); },
                               [&](const HyperbolaQ&) { return hyperbola_term(m); }},
                    s);
}

bool check_graded(const GradedMonomialSequence& s, std::uint64_t p, std::uint64_t q, const Budget& budget) {
  MonomialIdeal ap = sequence_term(s, p, budget);
  MonomialIdeal aq = sequence_term(s, q, budget);
  MonomialIdeal apq = sequence_term(s, p + q, budget);
  for (const auto& u : ap.generators())
    for (const auto& v : aq.generators())
      if (!apq.contains(u + v)) return false;
  return true;
}

std::vector<std::uint64_t> sample_schedule(std::uint64_t m_max) {
  if (m_max == 0) throw PreconditionError("m_max must be positive");
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m <= std::min<std::uint64_t>(32, m_max); ++m) out.push_back(m);
  for (std::uint64_t m = 64; m <= m_max; m *= 2) out.push_back(m);
  if (out.back() != m_max) out.push_back(m_max);
  return out;
}

std::string to_string(Convergence c) {
  switch (c) {
    case Convergence::Exact: return "exact";
    case Convergence::ClosedForm: return "closed-form";
    case Convergence::FiniteSamples: return "finite-samples";
  }
  return "";
}

RationalInterval golden_ratio_enclosure() {
  RationalInterval root5 = sqrt_enclosure(5);
  return {(root5.lo - 1) / 2, (root5.hi - 1) / 2};
}

AsymptoticEstimate arn_asym(const GradedMonomialSequence& s, std::uint64_t m_max, const Budget& budget) {
  validate(s);
  auto sample = [&](std::uint64_t m) -> Rational { return diagonal_hit(sequence_term(s, m, budget)) / exponent_rational(m); };
  if (const auto* x = std::get_if<PowersOf>(&s))
    return collect(m_max, point(diagonal_hit(x->ideal)), Convergence::Exact, sample);
  if (const auto* q = std::get_if<PolyhedralQ>(&s)) {
    // min{t : (t,...,t) ∈ Q} is a one-variable LP: the largest ratio b / sum(c).
    Rational t = 0;
    for (const auto& h : q->constraints) {
      Rational total = 0;
      for (const auto& c : h.normal) total += c;
      if (sgn(total) > 0) t = std::max(t, Rational(h.bound / total));
    }
    return collect(m_max, point(t), Convergence::Exact, sample);
  }
  return collect(m_max, golden_ratio_enclosure(), Convergence::ClosedForm, sample);
}

AsymptoticEstimate val_asym(const GradedMonomialSequence& s, const RationalPoint& v, std::uint64_t m_max,
                            const Budget& budget) {
  validate(s);
  if (v.size() != dimension(s)) throw PreconditionError("weight vector has the wrong dimension");
  auto sample = [&](std::uint64_t m) -> Rational {
    return monomial_valuation(v, sequence_term(s, m, budget)) / exponent_rational(m);
  };
  if (const auto* x = std::get_if<PowersOf>(&s))
    return collect(m_max, point(monomial_valuation(v, x->ideal)), Convergence::Exact, sample);
  if (const auto* q = std::get_if<PolyhedralQ>(&s)) {
    lp::Program prog;
    prog.nvars = q->nvars;
    prog.objective = v.coords();
    for (const auto& h : q->constraints) prog.constraints.push_back({h.normal, lp::Relation::GreaterEqual, h.bound});
    auto sol = lp::solve(prog);
    if (sol.status != lp::Status::Optimal) throw PreconditionError("degenerate Q: valuation LP has no optimum");
    return collect(m_max, point(sol.value), Convergence::Exact, sample);
  }
  // min over the hyperbola of alpha u1 + beta u2: the interior critical point
  // u1 = sqrt(beta/alpha) - 1 exists when beta >= alpha, otherwise u1 = 0.
  const Rational& alpha = v[0];
  const Rational& beta = v[1];
  if (beta < alpha) return collect(m_max, point(beta), Convergence::Exact, sample);
  Rational product = alpha * beta;
  if (is_rational_square(product))
    return collect(m_max, point(2 * exact_sqrt(product) - alpha), Convergence::Exact, sample);
  RationalInterval root = sqrt_enclosure(product);
  return collect(m_max, {2 * root.lo - alpha, 2 * root.hi - alpha}, Convergence::ClosedForm, sample);
}

std::string decimal(const Rational& q, unsigned digits) {
  Integer scale = ipow(10, digits);
  Integer scaled = floor(abs(q) * scale);
  std::string body = scaled.get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  if (digits == 0) body.pop_back();
  return (sgn(q) < 0 ? "-" : "") + body;
}

std::string GoldenRatioReport::table() const {
  std::ostringstream out;
  out << "m\tArn(a_m)/m\n";
  for (const auto& [m, v] : estimate.values) out << m << '\t' << decimal(v, 12) << '\n';
  return out.str();
}

GoldenRatioReport golden_ratio_demo(std::uint64_t m_max, const Budget& budget) {
  if (m_max < 16) throw PreconditionError("golden ratio demo needs m_max >= 16");
  GoldenRatioReport report;
  report.estimate = arn_asym(HyperbolaQ{}, m_max, budget);
  report.tolerance = std::max(Rational(1, 200), Rational(Integer(1), Integer(static_cast<unsigned long>(m_max))));
  const Rational& est = report.estimate.estimate();
  const auto& eta = report.estimate.limit;
  report.within_tolerance = abs(est - eta.lo) < report.tolerance && abs(est - eta.hi) < report.tolerance;
  return report;
}

}  // namespace thresholds
