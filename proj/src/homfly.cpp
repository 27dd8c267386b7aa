#include "linksing/homfly.hpp"

#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace linksing {

bool TorusLinkId::is_knot() const { return std::gcd(k, n) == 1; }

ZPoly t2_skein(int n) {
  if (n < 0) throw std::invalid_argument("t2_skein: n must be nonnegative");
  ZPoly prev = ZPoly::a_minus_a_inv().shifted(0, -1);  // (a - a^-1) z^-1
  if (n == 0) return prev;
  ZPoly cur = ZPoly::one();
  for (int i = 2; i <= n; ++i) {
    // J_i = -a z J_{i-1} + a^2 J_{i-2}
    ZPoly next = cur.shifted(1, 1, -1) + prev.shifted(2, 0);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

LaurentPoly t2_skein_q(int n) { return from_z_poly(t2_skein(n)); }

const LaurentPoly& q_factorial(int r) {
  if (r < 0) throw std::invalid_argument("q_factorial: negative argument");
  static std::mutex mu;
  static std::vector<LaurentPoly> cache{LaurentPoly::one()};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= r) {
    int s = static_cast<int>(cache.size());
    LaurentPoly factor = LaurentPoly::one() - LaurentPoly::monomial(1, 0, 2 * s);
    cache.push_back(cache.back() * factor);
  }
  return cache[static_cast<std::size_t>(r)];
}

LaurentPoly q_binomial(int b, int c) {
  if (c < 0 || c > b)
    throw std::invalid_argument("q_binomial: need 0 <= c <= b");
  return exact_div(q_factorial(b), q_factorial(c) * q_factorial(b - c));
}

bool newton_identity_holds(int s) {
  LaurentPoly lhs;
  for (int r = 0; r <= s; ++r)
    lhs += q_binomial(s, r).shifted(r, r * (r - 1));
  LaurentPoly rhs = LaurentPoly::one();
  for (int r = 0; r < s; ++r)
    rhs *= LaurentPoly::one() + LaurentPoly::monomial(1, 1, 2 * r);
  return lhs == rhs;
}

LaurentPoly jones_torus(int k, int n) {
  if (k < 1 || n < 1)
    throw std::invalid_argument("jones_torus: k and n must be at least 1");
  if (std::gcd(k, n) != 1)
    throw NotCoprime("jones_torus: gcd(k, n) = " + std::to_string(std::gcd(k, n)));

  const LaurentPoly a2 = LaurentPoly::monomial(1, 2, 0);
  // numerator (1 - q^2) sum_j (-1)^j q^{2 e_j} binom(k-1, j)_{q^2}
  //                            prod_{i=j+1-k}^{j} (q^{2i} - a^2)
  LaurentPoly sum;
  for (int j = 0; j <= k - 1; ++j) {
    const int e = j * n + (k - 1 - j) * (k - j) / 2;
    LaurentPoly term = q_binomial(k - 1, j).shifted(0, 2 * e);
    if (j % 2 == 1) term = -term;
    for (int i = j + 1 - k; i <= j; ++i)
      term *= LaurentPoly::monomial(1, 0, 2 * i) - a2;
    sum += term;
  }
  LaurentPoly numerator =
      (LaurentPoly::one() - LaurentPoly::monomial(1, 0, 2)) * sum;
  LaurentPoly denominator =
      (LaurentPoly::one() - LaurentPoly::monomial(1, 0, 2 * k)) *
      (LaurentPoly::one() - a2) * q_factorial(k - 1);

  const int mu = (k - 1) * (n - 1);
  return exact_div(numerator, denominator).shifted(mu, -mu);
}

AlexanderPoly::AlexanderPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty() || coeffs_.front() != 1)
    throw std::logic_error("AlexanderPoly: constant term must be 1");
}

bool AlexanderPoly::is_palindromic() const {
  const std::size_t d = coeffs_.size();
  for (std::size_t i = 0; i < d; ++i)
    if (coeffs_[i] != coeffs_[d - 1 - i]) return false;
  return true;
}

std::string AlexanderPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int mag = abs(c);
    if (mag != 1 || i == 0) os << mag.str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

AlexanderPoly alexander_from_semigroup(const NumSemigroup& sg) {
  // (1 - t) sum_{g in Gamma} t^g = (1 - t) sum_{g < c} t^g + t^c
  const int c = sg.conductor();
  std::vector<Int> coeffs(static_cast<std::size_t>(c) + 1, 0);
  for (int g : sg.members_below(c)) {
    coeffs[static_cast<std::size_t>(g)] += 1;
    coeffs[static_cast<std::size_t>(g) + 1] -= 1;
  }
  coeffs[static_cast<std::size_t>(c)] += 1;
  AlexanderPoly result(std::move(coeffs));
  if (result.degree() != sg.milnor())
    throw std::logic_error(
        "alexander_from_semigroup: degree differs from the Milnor number; "
        "the semigroup is not symmetric");
  return result;
}

AlexanderPoly alexander_from_homfly(const LaurentPoly& J, int milnor) {
  LaurentPoly conway = substitute(J, Subst::a_to_minus_one);
  // multiply by (-q)^{-milnor} and read off t = q^-2
  LaurentPoly normalized = conway.shifted(0, -milnor, (milnor % 2 == 0) ? 1 : -1);
  std::vector<Int> coeffs(static_cast<std::size_t>(milnor) + 1, 0);
  for (const auto& [k, c] : normalized.terms()) {
    if (k.a != 0)
      throw std::logic_error("alexander_from_homfly: a-power survived a = -1");
    if (k.x % 2 != 0)
      throw ParityError("alexander_from_homfly: odd q-power " +
                        std::to_string(k.x) + " after normalization");
    if (k.x > 0 || k.x < -2 * milnor)
      throw ParityError("alexander_from_homfly: q-power " + std::to_string(k.x) +
                        " outside [-2*milnor, 0]; wrong Milnor number?");
    coeffs[static_cast<std::size_t>(-k.x / 2)] = c;
  }
  if (coeffs.front() != 1)
    throw ParityError("alexander_from_homfly: constant term is not 1; "
                      "wrong Milnor number?");
  return AlexanderPoly(std::move(coeffs));
}

}  // namespace linksing
