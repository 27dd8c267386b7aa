#pragma once

/**
 * @file homfly.hpp
 * @brief HOMFLY values of torus links from the skein recurrence and from the
 *        closed torus-knot formula, q-factorial combinatorics, and the
 *        Alexander/Conway specializations.
 *
 * Conventions (fixed once, documented in the README): the skein relation is
 *   a J(under) - a^-1 J(over) = (q - q^-1) J(smoothing),   J(unknot) = 1,
 * which for T(2, n) gives J_n = -a z J_{n-1} + a^2 J_{n-2} with z = q - q^-1,
 * J_0 = (a - a^-1) z^-1 and J_1 = 1. Gaussian factorials follow
 * [0]! = 1, [r]! = (1 - q^{2r}) [r-1]!.
 */

#include <string>
#include <vector>

#include "linksing/laurent.hpp"
#include "linksing/semigroup.hpp"

namespace linksing {

struct TorusLinkId {
  int k = 1;
  int n = 1;

  bool is_knot() const;  // gcd(k, n) == 1
  int milnor() const { return (k - 1) * (n - 1); }
};

/// J(T(2, n)) in the (a, z) basis; n = 0 is the two-component unlink and the
/// even cases carry a z^-1 pole.
ZPoly t2_skein(int n);

/// q-form of t2_skein; defined for odd n (knots), where no pole survives.
LaurentPoly t2_skein_q(int n);

/// [r]! = prod_{s=1}^r (1 - q^{2s}); memoized behind a thread-safe cache.
const LaurentPoly& q_factorial(int r);

/// Gaussian binomial [b]! / ([c]! [b-c]!) by exact division.
LaurentPoly q_binomial(int b, int c);

/// Checks sum_{r=0}^s q^{r(r-1)} binom(s, r)_{q^2} t^r = prod_{r=0}^{s-1} (1 + q^{2r} t),
/// with the a-slot standing in for t.
bool newton_identity_holds(int s);

/// HOMFLY of the (k, n) torus knot by the closed formula: all denominators
/// are cleared into one product and removed by a single exact division, so a
/// NotDivisible escape flags a convention error immediately.
LaurentPoly jones_torus(int k, int n);

/// Alexander polynomial in t, normalized inside 1 + t Z[t]; palindromic of
/// degree equal to the Milnor number for the semigroups arising here.
class AlexanderPoly {
 public:
  explicit AlexanderPoly(std::vector<Int> coeffs);  // ascending, coeffs[0] == 1

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Int& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  bool is_palindromic() const;
  bool operator==(const AlexanderPoly& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string() const;  // ascending powers of t

 private:
  std::vector<Int> coeffs_;
};

/// (1 - t) sum_{g in Gamma} t^g, evaluated exactly through the finite gap
/// set; a polynomial of degree 2*delta for the valuation semigroups of plane
/// branches.
AlexanderPoly alexander_from_semigroup(const NumSemigroup& sg);

/// Specializes a knot HOMFLY at a = -1, normalizes by (-q)^{-milnor}, checks
/// that only even q-powers in [-2*milnor, 0] survive, and reads t = q^-2
/// (equivalent to t = q^2 by palindromy). Throws ParityError otherwise.
AlexanderPoly alexander_from_homfly(const LaurentPoly& J, int milnor);

}  // namespace linksing
