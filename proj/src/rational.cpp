#include "thresholds/rational.hpp"

#include <cctype>

#include "thresholds/errors.hpp"

namespace thresholds {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational", 0);
  auto slash = s.find('/');
  auto parse_int = [&](const std::string& part, std::size_t offset) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) throw ParseError("expected digits in rational", offset);
    for (std::size_t j = i; j < part.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(part[j])))
        throw ParseError("unexpected character in rational", offset + j);
    return Integer(part[0] == '+' ? part.substr(1) : part);
  };
  if (slash == std::string::npos) return Rational(parse_int(s, 0));
  Integer num = parse_int(s.substr(0, slash), 0);
  Integer den = parse_int(s.substr(slash + 1), slash + 1);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return make_rational(num, den);
}

std::uint64_t to_u64(const Integer& z) {
  if (z < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 64)
    throw PreconditionError("integer " + z.get_str() + " does not fit in 64 bits");
  std::uint64_t r = 0;
  mpz_export(&r, nullptr, -1, sizeof(r), 0, 0, z.get_mpz_t());
  return r;
}

RationalInterval sqrt_enclosure(const Rational& x, unsigned digits) {
  if (x < 0) throw PreconditionError("square root of a negative rational");
  if (x == 0) return {Rational(0), Rational(0)};
  Rational tol = make_rational(1, ipow(10, digits));
  // Newton from above: hi_{k+1} = (hi_k + x/hi_k)/2 stays >= sqrt(x).
  Rational hi = x > 1 ? x : Rational(1);
  while (true) {
    Rational lo = x / hi;
    if (hi - lo < tol) return {lo, hi};
    hi = (hi + lo) / 2;
    // Keep the denominators from doubling every step.
    Integer scale = ipow(10, digits + 5);
    Rational rounded = make_rational(ceil(hi * scale), scale);
    if (rounded * rounded >= x) hi = rounded;
  }
}

const Rational& ExtendedRational::value() const {
  if (!value_) throw PreconditionError("threshold is infinite");
  return *value_;
}

}  // namespace thresholds
