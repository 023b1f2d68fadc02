#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thresholds/budget.hpp"
#include "thresholds/newton.hpp"
#include "thresholds/polyring.hpp"

namespace thresholds {

enum class MonomialOrder { Grevlex, Lex };

// Ideal of F_p[x_1..x_n] given by generators, optionally carrying its reduced
// grevlex Groebner basis. Values are immutable; standardized() returns a copy
// whose generators are the basis.
class PolyIdeal {
 public:
  PolyIdeal(Ring ring, std::vector<Polynomial> generators);

  static PolyIdeal unit(const Ring& ring);
  static PolyIdeal zero(const Ring& ring);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_monomial() const;
  // Every generator vanishes at the origin.
  bool inside_maximal_ideal() const;
  // Largest total degree among the generators.
  Exponent max_generator_degree() const;

  bool has_basis() const { return static_cast<bool>(basis_); }
  // Reduced grevlex basis; computes it if absent (not cached on this value).
  std::vector<Polynomial> basis(const Budget& budget = {}) const;
  PolyIdeal standardized(const Budget& budget = {}) const;

  std::string str() const;

 private:
  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<const std::vector<Polynomial>> basis_;
};

PolyIdeal parse_ideal(std::string_view text, const Ring& ring);

// Leading exponent of a nonzero polynomial under the given order.
const ExponentVector& leading_exponent(const Polynomial& f, MonomialOrder order);

// Reduced Groebner basis (monic, sorted by decreasing leading monomial) via
// Buchberger with the normal selection strategy and both Buchberger criteria.
std::vector<Polynomial> groebner_basis(const PolyIdeal& ideal, MonomialOrder order = MonomialOrder::Grevlex,
                                       const Budget& budget = {});

// Fully reduced remainder of g modulo a Groebner basis.
Polynomial normal_form(const Polynomial& g, const std::vector<Polynomial>& basis,
                       MonomialOrder order = MonomialOrder::Grevlex);

bool member(const Polynomial& g, const PolyIdeal& ideal, const Budget& budget = {});
// inner ⊆ outer.
bool contains(const PolyIdeal& outer, const PolyIdeal& inner, const Budget& budget = {});
bool equal(const PolyIdeal& a, const PolyIdeal& b, const Budget& budget = {});

PolyIdeal operator+(const PolyIdeal& a, const PolyIdeal& b);
PolyIdeal multiply(const PolyIdeal& a, const PolyIdeal& b, const Budget& budget = {});
PolyIdeal multiply(const Polynomial& f, const PolyIdeal& a, const Budget& budget = {});
// Generated by the generator powers g^q.
PolyIdeal frobenius_power(const PolyIdeal& ideal, std::uint64_t q, const Budget& budget = {});
// a^k by repeated squaring, standardizing between steps.
PolyIdeal power(const PolyIdeal& ideal, std::uint64_t k, const Budget& budget = {});

PolyIdeal from_monomial_ideal(const MonomialIdeal& a, const Ring& ring);
// The monomial ideal when every generator is a single term.
std::optional<MonomialIdeal> as_monomial_ideal(const PolyIdeal& a);

}  // namespace thresholds
