#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "thresholds/polyring.hpp"
#include "thresholds/rational.hpp"

namespace thresholds {

// Ideal generated by monomials, stored by its minimal generating set (no
// generator divides another), sorted, so equal ideals compare equal.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t nvars, std::vector<ExponentVector> generators);

  std::size_t nvars() const { return nvars_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }

  // False for the unit ideal (1).
  bool is_proper() const;
  // Some pure power of every variable is a generator.
  bool is_m_primary() const;
  // min over generators of the total degree.
  Exponent order() const;
  bool contains(const ExponentVector& u) const;

  // Ideal with every generator exponent multiplied by r (the Newton polyhedron scales by r).
  MonomialIdeal scaled(Exponent r) const;

  std::string str(VariableNames names = VariableNames::Letters) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
  }

 private:
  std::size_t nvars_;
  std::vector<ExponentVector> gens_;
};

// a ⊆ b, decided on generators by divisibility.
bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, std::uint64_t k);
// Ideal in the polynomial ring on the variables of a followed by those of b.
MonomialIdeal disjoint_sum(const MonomialIdeal& a, const MonomialIdeal& b);

// "x^2, y^3" or "x1*x2, x3^4"; min_vars pads the ambient ring.
MonomialIdeal parse_monomial_ideal(std::string_view text, std::size_t min_vars = 0);

// Point of the nonnegative orthant.
class RationalPoint {
 public:
  explicit RationalPoint(std::vector<Rational> coords);
  static RationalPoint diagonal(std::size_t n, const Rational& t);

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

 private:
  std::vector<Rational> coords_;
};

RationalPoint parse_point(std::string_view text);

// P(a) = conv(generators) + R^n_{>=0}, held implicitly by its generators.
class NewtonPolyhedron {
 public:
  explicit NewtonPolyhedron(const MonomialIdeal& a) : nvars_(a.nvars()), gens_(a.generators()) {}

  std::size_t nvars() const { return nvars_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }

 private:
  std::size_t nvars_;
  std::vector<ExponentVector> gens_;
};

// q = sum mu_i u_i + r with mu a convex combination and r >= 0; exact LP.
bool contains_point(const NewtonPolyhedron& polyhedron, const RationalPoint& q);

// Smallest t with (t,...,t) in P(a); the Arnold multiplicity of a.
Rational diagonal_hit(const MonomialIdeal& a);

// max{lambda : (1,...,1) in lambda P(a)} = 1/diagonal_hit(a); infinite for the unit ideal.
ExtendedRational lct_monomial(const MonomialIdeal& a);

// min over generators u of <u, v>.
Rational monomial_valuation(const RationalPoint& v, const MonomialIdeal& a);

// n! times the volume of the region of the orthant below P(a); requires a m-primary.
Integer multiplicity_monomial(const MonomialIdeal& a);

// e(a) * lct(a)^n >= n^n.
bool check_amgm(const MonomialIdeal& a);

}  // namespace thresholds
