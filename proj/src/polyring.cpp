#include "thresholds/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_map>

#include "thresholds/errors.hpp"

namespace thresholds {

// ---------------------------------------------------------------------------
// Exponent vectors

Exponent ExponentVector::checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) throw BudgetExceeded("exponent overflow");
  return a + b;
}

Exponent ExponentVector::checked_mul(Exponent a, Exponent b) {
  if (a != 0 && b > std::numeric_limits<Exponent>::max() / a)
    throw BudgetExceeded("exponent overflow");
  return a * b;
}

void ExponentVector::set(std::size_t i, Exponent value) {
  degree_ -= e_[i];
  e_[i] = value;
  degree_ = checked_add(degree_, value);
}

bool ExponentVector::divides(const ExponentVector& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = ExponentVector::checked_add(r.e_[i], b.e_[i]);
  r.degree_ = ExponentVector::checked_add(a.degree_, b.degree_);
  return r;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

ExponentVector ExponentVector::scaled(Exponent k) const {
  ExponentVector r = *this;
  for (auto& x : r.e_) x = checked_mul(x, k);
  r.degree_ = checked_mul(degree_, k);
  return r;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.set(i, std::max(a[i], b[i]));
  return r;
}

bool grevlex_greater(const ExponentVector& a, const ExponentVector& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool lex_greater(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

std::size_t ExponentHash::operator()(const ExponentVector& u) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Exponent x : u) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Fields

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t k, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (k) {
    if (k & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    k >>= 1;
  }
  return r;
}

std::uint64_t reduce_mod(const Integer& z, std::uint64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 32))
    throw PreconditionError("characteristic " + std::to_string(p) + " is not a prime below 2^32");
  Integer z(static_cast<unsigned long>(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    throw PreconditionError(std::to_string(p) + " is not prime");
  return Field(FieldKind::PrimeField, p);
}

Coefficient Field::zero() const { return from_integer(0); }
Coefficient Field::one() const { return from_integer(1); }

Coefficient Field::from_integer(const Integer& z) const {
  switch (kind_) {
    case FieldKind::Rationals: return Rational(z);
    case FieldKind::Integers: return z;
    case FieldKind::PrimeField: return Residue{reduce_mod(z, p_)};
  }
  return z;
}

Coefficient Field::from_rational(const Rational& q) const {
  switch (kind_) {
    case FieldKind::Rationals: return q;
    case FieldKind::Integers:
      if (q.get_den() != 1) throw PreconditionError("coefficient " + q.get_str() + " is not an integer");
      return q.get_num();
    case FieldKind::PrimeField: {
      std::uint64_t den = reduce_mod(q.get_den(), p_);
      if (den == 0)
        throw PreconditionError("coefficient " + q.get_str() + " has no image in F_" + std::to_string(p_));
      return Residue{mulmod(reduce_mod(q.get_num(), p_), powmod(den, p_ - 2, p_), p_)};
    }
  }
  return q;
}

bool Field::is_zero(const Coefficient& c) const {
  switch (kind_) {
    case FieldKind::Rationals: return std::get<Rational>(c) == 0;
    case FieldKind::Integers: return std::get<Integer>(c) == 0;
    case FieldKind::PrimeField: return std::get<Residue>(c).value == 0;
  }
  return false;
}

bool Field::is_one(const Coefficient& c) const {
  switch (kind_) {
    case FieldKind::Rationals: return std::get<Rational>(c) == 1;
    case FieldKind::Integers: return std::get<Integer>(c) == 1;
    case FieldKind::PrimeField: return std::get<Residue>(c).value == 1 % p_;
  }
  return false;
}

Coefficient Field::add(const Coefficient& a, const Coefficient& b) const {
  switch (kind_) {
    case FieldKind::Rationals: return Rational(std::get<Rational>(a) + std::get<Rational>(b));
    case FieldKind::Integers: return Integer(std::get<Integer>(a) + std::get<Integer>(b));
    case FieldKind::PrimeField: {
      std::uint64_t s = std::get<Residue>(a).value + std::get<Residue>(b).value;
      return Residue{s >= p_ ? s - p_ : s};
    }
  }
  return a;
}

Coefficient Field::sub(const Coefficient& a, const Coefficient& b) const { return add(a, neg(b)); }

Coefficient Field::mul(const Coefficient& a, const Coefficient& b) const {
  switch (kind_) {
    case FieldKind::Rationals: return Rational(std::get<Rational>(a) * std::get<Rational>(b));
    case FieldKind::Integers: return Integer(std::get<Integer>(a) * std::get<Integer>(b));
    case FieldKind::PrimeField:
      return Residue{mulmod(std::get<Residue>(a).value, std::get<Residue>(b).value, p_)};
  }
  return a;
}

Coefficient Field::neg(const Coefficient& a) const {
  switch (kind_) {
    case FieldKind::Rationals: return Rational(-std::get<Rational>(a));
    case FieldKind::Integers: return Integer(-std::get<Integer>(a));
    case FieldKind::PrimeField: {
      std::uint64_t v = std::get<Residue>(a).value;
      return Residue{v == 0 ? 0 : p_ - v};
    }
  }
  return a;
}

Coefficient Field::inv(const Coefficient& a) const {
  if (is_zero(a)) throw PreconditionError("inverse of zero");
  switch (kind_) {
    case FieldKind::Rationals: return Rational(1 / std::get<Rational>(a));
    case FieldKind::Integers: {
      const Integer& z = std::get<Integer>(a);
      if (z == 1 || z == -1) return z;
      throw PreconditionError("integer " + z.get_str() + " is not a unit");
    }
    case FieldKind::PrimeField: return Residue{powmod(std::get<Residue>(a).value, p_ - 2, p_)};
  }
  return a;
}

Coefficient Field::pow(const Coefficient& a, std::uint64_t k) const {
  Coefficient r = one();
  Coefficient base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return r;
}

Rational Field::to_rational(const Coefficient& c) const {
  switch (kind_) {
    case FieldKind::Rationals: return std::get<Rational>(c);
    case FieldKind::Integers: return Rational(std::get<Integer>(c));
    case FieldKind::PrimeField:
      return Rational(Integer(static_cast<unsigned long>(std::get<Residue>(c).value)));
  }
  return 0;
}

std::string Field::to_string(const Coefficient& c) const { return to_rational(c).get_str(); }

std::string Field::name() const {
  switch (kind_) {
    case FieldKind::Rationals: return "QQ";
    case FieldKind::Integers: return "ZZ";
    case FieldKind::PrimeField: return "GF(" + std::to_string(p_) + ")";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Rings

Ring::Ring(std::size_t nvars, Field field, VariableNames names)
    : nvars_(nvars), field_(field), names_(names) {
  if (nvars == 0) throw PreconditionError("a ring needs at least one variable");
  if (names_ == VariableNames::Letters && nvars > 3) names_ = VariableNames::Indexed;
}

std::string Ring::variable_name(std::size_t i) const {
  if (names_ == VariableNames::Letters) return std::string(1, "xyz"[i]);
  return "x" + std::to_string(i + 1);
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b))
    throw RingMismatch("ring mismatch: " + std::to_string(a.nvars()) + " variables over " +
                       a.field().name() + " vs " + std::to_string(b.nvars()) + " variables over " +
                       b.field().name());
}

// ---------------------------------------------------------------------------
// Polynomials

namespace {

struct GrevlexDesc {
  bool operator()(const Term& a, const Term& b) const {
    return grevlex_greater(a.exponents, b.exponents);
  }
};

}  // namespace

Polynomial Polynomial::constant(const Ring& ring, const Coefficient& c) {
  return monomial(ring, ExponentVector(ring.nvars()), c);
}

Polynomial Polynomial::monomial(const Ring& ring, ExponentVector u, const Coefficient& c) {
  if (u.size() != ring.nvars()) throw PreconditionError("exponent vector length does not match ring");
  Polynomial f(ring);
  if (!ring.field().is_zero(c)) f.terms_.push_back({std::move(u), c});
  return f;
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t i) {
  if (i >= ring.nvars()) throw PreconditionError("variable index out of range");
  ExponentVector u(ring.nvars());
  u.set(i, 1);
  return monomial(ring, std::move(u), ring.field().one());
}

Polynomial Polynomial::from_terms(const Ring& ring, std::vector<Term> terms) {
  const Field& F = ring.field();
  for (const auto& t : terms)
    if (t.exponents.size() != ring.nvars())
      throw PreconditionError("exponent vector length does not match ring");
  std::sort(terms.begin(), terms.end(), GrevlexDesc{});
  Polynomial f(ring);
  for (auto& t : terms) {
    if (!f.terms_.empty() && f.terms_.back().exponents == t.exponents) {
      f.terms_.back().coefficient = F.add(f.terms_.back().coefficient, t.coefficient);
    } else {
      if (!f.terms_.empty() && F.is_zero(f.terms_.back().coefficient)) f.terms_.pop_back();
      f.terms_.push_back(std::move(t));
    }
  }
  if (!f.terms_.empty() && F.is_zero(f.terms_.back().coefficient)) f.terms_.pop_back();
  return f;
}

Polynomial Polynomial::from_sorted_terms(const Ring& ring, std::vector<Term> terms) {
  Polynomial f(ring);
  f.terms_ = std::move(terms);
  return f;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponents.is_zero());
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.exponents.degree() != terms_.front().exponents.degree()) return false;
  return true;
}

Exponent Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().exponents.degree();
}

Exponent Polynomial::order() const {
  return terms_.empty() ? 0 : terms_.back().exponents.degree();
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.front();
}

Coefficient Polynomial::coefficient(const ExponentVector& u) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), u, [](const Term& t, const ExponentVector& v) {
    return grevlex_greater(t.exponents, v);
  });
  if (it != terms_.end() && it->exponents == u) return it->coefficient;
  return ring_.field().zero();
}

Coefficient Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().exponents.is_zero()) return terms_.back().coefficient;
  return ring_.field().zero();
}

Polynomial Polynomial::scaled(const Coefficient& c) const {
  const Field& F = ring_.field();
  Polynomial r(ring_);
  if (F.is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Coefficient v = F.mul(t.coefficient, c);
    if (!F.is_zero(v)) r.terms_.push_back({t.exponents, std::move(v)});
  }
  return r;
}

Polynomial Polynomial::shifted(const ExponentVector& u) const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.exponents + u, t.coefficient});
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_.field().inv(terms_.front().coefficient));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  const Field& F = a.ring_.field();
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    const Term& s = a.terms_[i];
    const Term& t = b.terms_[j];
    if (s.exponents == t.exponents) {
      Coefficient c = F.add(s.coefficient, t.coefficient);
      if (!F.is_zero(c)) out.push_back({s.exponents, std::move(c)});
      ++i;
      ++j;
    } else if (grevlex_greater(s.exponents, t.exponents)) {
      out.push_back(s);
      ++i;
    } else {
      out.push_back(t);
      ++j;
    }
  }
  out.insert(out.end(), a.terms_.begin() + i, a.terms_.end());
  out.insert(out.end(), b.terms_.begin() + j, b.terms_.end());
  return Polynomial::from_sorted_terms(a.ring_, std::move(out));
}

Polynomial operator-(const Polynomial& a) { return a.scaled(a.ring_.field().neg(a.ring_.field().one())); }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b, Budget{}); }

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].exponents == b.terms_[i].exponents) ||
        !(a.terms_[i].coefficient == b.terms_[i].coefficient))
      return false;
  return true;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b, const Budget& budget) {
  require_same_ring(a.ring(), b.ring());
  const Ring& ring = a.ring();
  const Field& F = ring.field();
  if (a.is_zero() || b.is_zero()) return Polynomial(ring);
  if (a.size() == 1) return b.shifted(a.terms()[0].exponents).scaled(a.terms()[0].coefficient);
  if (b.size() == 1) return a.shifted(b.terms()[0].exponents).scaled(b.terms()[0].coefficient);
  if (a.size() > budget.max_terms / b.size() + 1)
    throw BudgetExceeded("polynomial product needs " + std::to_string(a.size()) + " x " +
                         std::to_string(b.size()) + " term products");
  std::unordered_map<ExponentVector, Coefficient, ExponentHash> acc;
  acc.reserve(a.size() + b.size());
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      Coefficient c = F.mul(s.coefficient, t.coefficient);
      auto [it, inserted] = acc.try_emplace(s.exponents + t.exponents, c);
      if (!inserted) it->second = F.add(it->second, c);
    }
  }
  if (acc.size() > budget.max_terms)
    throw BudgetExceeded("polynomial product has more than " + std::to_string(budget.max_terms) + " terms");
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [u, c] : acc)
    if (!F.is_zero(c)) terms.push_back({u, std::move(c)});
  std::sort(terms.begin(), terms.end(), GrevlexDesc{});
  return Polynomial::from_sorted_terms(ring, std::move(terms));
}

namespace {

// C(k + t - 1, t - 1), the number of ways to split k among t terms, or
// limit + 1 once it passes limit.
std::uint64_t composition_count(std::uint64_t k, std::size_t t, std::uint64_t limit) {
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i < t; ++i) {
    c = c * (k + i) / i;
    if (c > limit) return limit + 1;
  }
  return static_cast<std::uint64_t>(c);
}

// f^k over F_p with k < p, term by term from the multinomial theorem; every
// k!/prod(k_i!) is a unit.
Polynomial multinomial_power(const Polynomial& f, std::uint64_t k) {
  const Ring& ring = f.ring();
  const Field& F = ring.field();
  const std::uint64_t p = F.characteristic();
  const auto& terms = f.terms();
  const std::size_t t = terms.size();
  std::vector<std::uint64_t> inv_fact(k + 1, 1);
  std::uint64_t fact = 1;
  for (std::uint64_t i = 1; i <= k; ++i) fact = mulmod(fact, i, p);
  inv_fact[k] = powmod(fact, p - 2, p);
  for (std::uint64_t i = k; i > 0; --i) inv_fact[i - 1] = mulmod(inv_fact[i], i, p);
  std::vector<std::vector<std::uint64_t>> powers(t, std::vector<std::uint64_t>(k + 1, 1));
  for (std::size_t j = 0; j < t; ++j) {
    std::uint64_t c = std::get<Residue>(terms[j].coefficient).value;
    for (std::uint64_t i = 1; i <= k; ++i) powers[j][i] = mulmod(powers[j][i - 1], c, p);
  }
  std::unordered_map<ExponentVector, std::uint64_t, ExponentHash> acc;
  auto walk = [&](auto&& self, std::size_t j, std::uint64_t left, const ExponentVector& u, std::uint64_t c) -> void {
    if (j + 1 == t) {
      std::uint64_t coef = mulmod(c, mulmod(inv_fact[left], powers[j][left], p), p);
      auto [it, inserted] = acc.try_emplace(u + terms[j].exponents.scaled(left), coef);
      if (!inserted) it->second = (it->second + coef) % p;
      return;
    }
    for (std::uint64_t r = 0; r <= left; ++r)
      self(self, j + 1, left - r, u + terms[j].exponents.scaled(r), mulmod(c, mulmod(inv_fact[r], powers[j][r], p), p));
  };
  walk(walk, 0, k, ExponentVector(ring.nvars()), fact);
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [u, c] : acc)
    if (c) out.push_back({u, Residue{c}});
  std::sort(out.begin(), out.end(), GrevlexDesc{});
  return Polynomial::from_sorted_terms(ring, std::move(out));
}

// g^p over F_p: coefficients are fixed by Frobenius, exponents scale.
Polynomial frobenius_image(const Polynomial& g) {
  const std::uint64_t p = g.ring().field().characteristic();
  std::vector<Term> out;
  out.reserve(g.size());
  for (const auto& t : g.terms()) out.push_back({t.exponents.scaled(p), t.coefficient});
  return Polynomial::from_sorted_terms(g.ring(), std::move(out));
}

}  // namespace

Polynomial pow(const Polynomial& f, std::uint64_t k, const Budget& budget) {
  const Ring& ring = f.ring();
  if (k == 0) return Polynomial::constant(ring, ring.field().one());
  if (f.is_zero()) return f;
  if (f.is_monomial()) {
    const Term& t = f.terms()[0];
    return Polynomial::monomial(ring, t.exponents.scaled(k), ring.field().pow(t.coefficient, k));
  }
  if (ring.field().is_prime_field()) {
    const std::uint64_t p = ring.field().characteristic();
    if (k >= p) return multiply(pow(f, k % p, budget), frobenius_image(pow(f, k / p, budget)), budget);
    if (composition_count(k, f.size(), budget.max_terms / 8) <= budget.max_terms / 8) return multinomial_power(f, k);
  }
  Polynomial result = Polynomial::constant(ring, ring.field().one());
  Polynomial base = f;
  while (true) {
    if (k & 1) result = multiply(result, base, budget);
    k >>= 1;
    if (!k) break;
    base = multiply(base, base, budget);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Parsing and rendering

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : s_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial f = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip();
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Polynomial f = term();
    if (negate) f = -f;
    while (true) {
      if (accept('+'))
        f = f + term();
      else if (accept('-'))
        f = f - term();
      else
        return f;
    }
  }

  Polynomial term() {
    Polynomial f = factor();
    while (accept('*')) f = multiply(f, factor(), Budget{});
    return f;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      Integer k = digits();
      if (k > Integer("1000000000")) {
        pos_ = start;
        fail("exponent too large");
      }
      base = pow(base, k.get_ui());
    }
    return base;
  }

  Integer digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial f = expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      Integer num = digits();
      Rational q(num);
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        Integer den = digits();
        if (den == 0) fail("zero denominator");
        q = make_rational(num, den);
      }
      try {
        return Polynomial::constant(ring_, ring_.field().from_rational(q));
      } catch (const PreconditionError& e) {
        pos_ = start;
        fail(std::string("coefficient not in field: ") + e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      ++pos_;
      std::size_t index = 0;
      if (c == 'x' && pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        Integer k = digits();
        if (k == 0 || k > Integer(static_cast<unsigned long>(ring_.nvars()))) {
          pos_ = start;
          fail("unknown variable x" + k.get_str());
        }
        index = k.get_ui() - 1;
      } else if (c == 'x' || c == 'y' || c == 'z') {
        index = static_cast<std::size_t>(c - 'x');
        if (index >= ring_.nvars()) {
          pos_ = start;
          fail(std::string("unknown variable ") + c);
        }
      } else {
        pos_ = start;
        fail(std::string("unknown variable ") + c);
      }
      return Polynomial::variable(ring_, index);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) { return Parser(text, ring).parse(); }

std::string render(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const Ring& ring = f.ring();
  const Field& F = ring.field();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational c = F.to_rational(t.coefficient);
    bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring.variable_name(i);
      if (t.exponents[i] > 1) mono += "^" + std::to_string(t.exponents[i]);
    }
    if (mono.empty())
      out += c.get_str();
    else if (c == 1)
      out += mono;
    else
      out += c.get_str() + "*" + mono;
  }
  return out;
}

Ring infer_ring(const std::vector<std::string_view>& texts, Field field, std::size_t min_vars) {
  std::size_t n = min_vars;
  bool letters = false, indexed = false;
  for (auto text : texts) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (!std::isalpha(static_cast<unsigned char>(c))) continue;
      if (c == 'x' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
        std::size_t j = i + 1;
        std::size_t k = 0;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
          k = k * 10 + static_cast<std::size_t>(text[j] - '0');
          if (k > 1000) throw ParseError("variable index too large", i);
          ++j;
        }
        n = std::max(n, k);
        indexed = true;
        i = j - 1;
      } else if (c == 'x' || c == 'y' || c == 'z') {
        n = std::max<std::size_t>(n, static_cast<std::size_t>(c - 'x') + 1);
        letters = true;
      } else {
        throw ParseError(std::string("unknown variable ") + c, i);
      }
    }
  }
  if (n == 0) n = 1;
  return Ring(n, field, letters && !indexed ? VariableNames::Letters : VariableNames::Indexed);
}

// ---------------------------------------------------------------------------
// Coefficients of powers

std::uint64_t multinomial_mod_p(const std::vector<std::uint64_t>& parts, std::uint64_t p) {
  std::vector<std::uint64_t> rest = parts;
  std::uint64_t total = 0;
  for (auto x : rest) total += x;
  std::uint64_t result = 1 % p;
  while (total > 0) {
    std::uint64_t kd = total % p;
    std::uint64_t digit_sum = 0;
    std::uint64_t denom = 1;
    for (auto& x : rest) {
      std::uint64_t d = x % p;
      digit_sum += d;
      for (std::uint64_t i = 2; i <= d; ++i) denom = mulmod(denom, i, p);
      x /= p;
    }
    // A carry in the base-p addition of the parts makes the coefficient vanish.
    if (digit_sum != kd) return 0;
    std::uint64_t numer = 1;
    for (std::uint64_t i = 2; i <= kd; ++i) numer = mulmod(numer, i, p);
    result = mulmod(result, mulmod(numer, powmod(denom, p - 2, p), p), p);
    total /= p;
  }
  return result;
}

namespace {

Integer multinomial_exact(const std::vector<std::uint64_t>& parts) {
  Integer r = 1;
  unsigned long running = 0;
  for (auto c : parts) {
    running += c;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), running, c);
    r *= b;
  }
  return r;
}

}  // namespace

Coefficient monomial_coefficient(const Polynomial& f, std::uint64_t k, const ExponentVector& u,
                                 const Budget& budget) {
  const Ring& ring = f.ring();
  const Field& F = ring.field();
  if (u.size() != ring.nvars()) throw PreconditionError("exponent vector length does not match ring");
  if (k == 0) return u.is_zero() ? F.one() : F.zero();
  const auto& terms = f.terms();
  if (terms.empty()) return F.zero();
  // Degree bookkeeping prunes most branches early.
  Coefficient total = F.zero();
  std::vector<std::uint64_t> counts(terms.size(), 0);
  std::size_t visited = 0;

  std::function<void(std::size_t, std::uint64_t, const ExponentVector&)> walk =
      [&](std::size_t idx, std::uint64_t remaining, const ExponentVector& rem) {
        if (++visited > budget.max_products)
          throw BudgetExceeded("multinomial enumeration exceeded " + std::to_string(budget.max_products) +
                               " steps");
        const ExponentVector& e = terms[idx].exponents;
        if (idx + 1 == terms.size()) {
          if (!(e.scaled(remaining) == rem)) return;
          counts[idx] = remaining;
          Coefficient mult = F.is_prime_field()
                                 ? Coefficient(Residue{multinomial_mod_p(counts, F.characteristic())})
                                 : F.from_integer(multinomial_exact(counts));
          if (F.is_zero(mult)) return;
          Coefficient prod = mult;
          for (std::size_t t = 0; t < terms.size(); ++t)
            if (counts[t]) prod = F.mul(prod, F.pow(terms[t].coefficient, counts[t]));
          total = F.add(total, prod);
          return;
        }
        std::uint64_t cap = remaining;
        for (std::size_t i = 0; i < e.size(); ++i)
          if (e[i] > 0) cap = std::min<std::uint64_t>(cap, rem[i] / e[i]);
        for (std::uint64_t c = 0; c <= cap; ++c) {
          counts[idx] = c;
          walk(idx + 1, remaining - c, rem - e.scaled(c));
        }
        counts[idx] = 0;
      };
  if (u.degree() < f.order() * k && f.order() > 0) return F.zero();
  walk(0, k, u);
  return total;
}

// ---------------------------------------------------------------------------
// Frobenius basis decomposition

std::uint64_t frobenius_modulus(std::uint64_t p, unsigned e, const Budget& budget) {
  if (e == 0) throw PreconditionError("Frobenius exponent e must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > budget.max_frobenius_power / p)
      throw BudgetExceeded("p^e = " + std::to_string(p) + "^" + std::to_string(e) + " exceeds cap " +
                           std::to_string(budget.max_frobenius_power));
    q *= p;
  }
  return q;
}

FrobeniusComponents frobenius_decompose(const Polynomial& h, unsigned e, const Budget& budget) {
  const Ring& ring = h.ring();
  if (!ring.field().is_prime_field())
    throw PreconditionError("Frobenius decomposition needs coefficients in F_p");
  const std::uint64_t q = frobenius_modulus(ring.field().characteristic(), e, budget);
  std::map<ExponentVector, std::vector<Term>> parts;
  const std::size_t n = ring.nvars();
  for (const auto& t : h.terms()) {
    ExponentVector w(n), base(n);
    for (std::size_t i = 0; i < n; ++i) {
      w.set(i, t.exponents[i] % q);
      base.set(i, t.exponents[i] / q);
    }
    // Frobenius fixes F_p, so the coefficient is its own p^e-th root.
    parts[w].push_back({std::move(base), t.coefficient});
  }
  FrobeniusComponents out;
  for (auto& [w, terms] : parts) {
    Polynomial u = Polynomial::from_terms(ring, std::move(terms));
    if (!u.is_zero()) out.emplace(w, std::move(u));
  }
  return out;
}

}  // namespace thresholds
