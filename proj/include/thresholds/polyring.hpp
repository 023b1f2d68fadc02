#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "thresholds/budget.hpp"
#include "thresholds/rational.hpp"

namespace thresholds {

using Exponent = std::uint64_t;

// Exponent vector u of the monomial x^u = x_1^{u_1} ... x_n^{u_n}.
// Entries are machine words; every arithmetic step is overflow checked.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<Exponent> init) : e_(init.begin(), init.end()) {
    for (Exponent x : e_) degree_ = checked_add(degree_, x);
  }
  template <typename It>
  ExponentVector(It first, It last) : e_(first, last) {
    for (Exponent x : e_) degree_ = checked_add(degree_, x);
  }

  std::size_t size() const { return e_.size(); }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  Exponent degree() const { return degree_; }
  bool is_zero() const { return degree_ == 0; }
  void set(std::size_t i, Exponent value);

  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  // this | other, componentwise <=.
  bool divides(const ExponentVector& other) const;

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  // Requires b | a.
  friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);
  ExponentVector scaled(Exponent k) const;

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.e_ == b.e_;
  }
  // Plain lexicographic order on the entries; used for map keys only.
  friend bool operator<(const ExponentVector& a, const ExponentVector& b) { return a.e_ < b.e_; }

  static Exponent checked_add(Exponent a, Exponent b);
  static Exponent checked_mul(Exponent a, Exponent b);

 private:
  boost::container::small_vector<Exponent, 4> e_;
  Exponent degree_ = 0;
};

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);

// Graded reverse lexicographic: true when a is strictly larger than b.
bool grevlex_greater(const ExponentVector& a, const ExponentVector& b);
bool lex_greater(const ExponentVector& a, const ExponentVector& b);

struct ExponentHash {
  std::size_t operator()(const ExponentVector& u) const noexcept;
};

struct Residue {
  std::uint64_t value = 0;
  friend bool operator==(Residue a, Residue b) { return a.value == b.value; }
};

// One coefficient; which alternative is live is fixed by the ring's field.
using Coefficient = std::variant<Rational, Integer, Residue>;

enum class FieldKind { Rationals, Integers, PrimeField };

class Field {
 public:
  static Field rationals() { return Field(FieldKind::Rationals, 0); }
  static Field integers() { return Field(FieldKind::Integers, 0); }
  // Throws PreconditionError unless p is a prime below 2^32.
  static Field prime(std::uint64_t p);

  FieldKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }

  Coefficient zero() const;
  Coefficient one() const;
  Coefficient from_integer(const Integer& z) const;
  // Throws PreconditionError when the value has no image in this field.
  Coefficient from_rational(const Rational& q) const;

  bool is_zero(const Coefficient& c) const;
  bool is_one(const Coefficient& c) const;
  Coefficient add(const Coefficient& a, const Coefficient& b) const;
  Coefficient sub(const Coefficient& a, const Coefficient& b) const;
  Coefficient mul(const Coefficient& a, const Coefficient& b) const;
  Coefficient neg(const Coefficient& a) const;
  // Not available over the integers.
  Coefficient inv(const Coefficient& a) const;
  Coefficient pow(const Coefficient& a, std::uint64_t k) const;

  // Exact rational value (residues map to their representative in [0, p)).
  Rational to_rational(const Coefficient& c) const;
  std::string to_string(const Coefficient& c) const;
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  Field(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  FieldKind kind_;
  std::uint64_t p_;
};

enum class VariableNames { Letters, Indexed };

// Ring context k[x_1..x_n]. Naming only affects rendering.
class Ring {
 public:
  Ring(std::size_t nvars, Field field, VariableNames names = VariableNames::Indexed);

  std::size_t nvars() const { return nvars_; }
  const Field& field() const { return field_; }
  VariableNames names() const { return names_; }
  std::string variable_name(std::size_t i) const;
  Ring with_field(Field field) const { return Ring(nvars_, field, names_); }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.nvars_ == b.nvars_ && a.field_ == b.field_;
  }

 private:
  std::size_t nvars_;
  Field field_;
  VariableNames names_;
};

struct Term {
  ExponentVector exponents;
  Coefficient coefficient;
};

// Sparse polynomial. Terms are kept strictly decreasing in grevlex order with
// no zero coefficients, so structural equality is polynomial equality.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const Ring& ring, const Coefficient& c);
  static Polynomial monomial(const Ring& ring, ExponentVector u, const Coefficient& c);
  static Polynomial variable(const Ring& ring, std::size_t i);
  // Sorts, combines equal exponents and drops zeros.
  static Polynomial from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_homogeneous() const;
  // Degree of the zero polynomial is 0 by convention.
  Exponent total_degree() const;
  // Smallest total degree of a term (order of vanishing at the origin).
  Exponent order() const;
  const Term& leading_term() const;
  Coefficient coefficient(const ExponentVector& u) const;
  Coefficient constant_term() const;

  Polynomial scaled(const Coefficient& c) const;
  Polynomial shifted(const ExponentVector& u) const;  // multiply by x^u
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Raw access for algorithms that build sorted term lists themselves.
  static Polynomial from_sorted_terms(const Ring& ring, std::vector<Term> terms);

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

void require_same_ring(const Ring& a, const Ring& b);

Polynomial multiply(const Polynomial& a, const Polynomial& b, const Budget& budget);
Polynomial pow(const Polynomial& f, std::uint64_t k, const Budget& budget = {});

// Polynomial grammar: variables x, y, z or x1..xn; integer literals with an
// optional "/den"; operators + - * ^; parentheses; whitespace ignored.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);
std::string render(const Polynomial& f);

// Smallest ring containing every variable mentioned in the texts. Letters map
// x, y, z to 1..3 variables; indexed names xk need k variables.
Ring infer_ring(const std::vector<std::string_view>& texts, Field field, std::size_t min_vars = 0);

// Coefficient of x^u in f^k, from the multinomial expansion over the terms of
// f. Over F_p, multinomial coefficients are reduced with Lucas' theorem.
Coefficient monomial_coefficient(const Polynomial& f, std::uint64_t k, const ExponentVector& u,
                                 const Budget& budget = {});

// Multinomial coefficient k! / (c_1! ... c_r!) mod p via base-p digits.
std::uint64_t multinomial_mod_p(const std::vector<std::uint64_t>& parts, std::uint64_t p);

using FrobeniusComponents = std::map<ExponentVector, Polynomial>;

// Writes h = sum_w u_w^{p^e} x^w over basis monomials x^w with every entry in
// [0, p^e - 1]; returns the nonzero components u_w keyed by w.
FrobeniusComponents frobenius_decompose(const Polynomial& h, unsigned e,
                                        const Budget& budget = {});

// p^e with the budget's cap applied.
std::uint64_t frobenius_modulus(std::uint64_t p, unsigned e, const Budget& budget);

}  // namespace thresholds
