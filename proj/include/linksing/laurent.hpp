#pragma once

/**
 * @file laurent.hpp
 * @brief Exact Laurent polynomials in two formal variables with big-integer
 *        coefficients, plus the substitutions and basis changes used by the
 *        invariant calculations.
 *
 * Two concrete instantiations are used throughout:
 *   - LaurentPoly: variables (a, q), the home of every HOMFLY-type value;
 *   - ZPoly:       variables (a, z) with z = q - q^-1, the skein-native basis.
 *
 * Coefficients are arbitrary-precision integers. Zero coefficients are never
 * stored. Canonical printing order is descending a-exponent, then descending
 * second-variable exponent, so rendered strings are usable as golden values.
 */

#include <cctype>
#include <compare>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "linksing/errors.hpp"
#include "linksing/numeric.hpp"

namespace linksing {

struct ExpKey {
  int a = 0;  // exponent of a
  int x = 0;  // exponent of the second variable (q, z, ...)
  auto operator<=>(const ExpKey&) const = default;
};

struct QVarTag {
  static constexpr char symbol = 'q';
};
struct ZVarTag {
  static constexpr char symbol = 'z';
};

/// Exact bivariate Laurent polynomial over Z. The tag fixes the printed name
/// of the second variable and makes the q-basis and z-basis distinct types.
template <class VarTag>
class BivarPoly {
 public:
  using TermMap = std::map<ExpKey, Int>;

  BivarPoly() = default;

  static BivarPoly zero() { return BivarPoly(); }

  static BivarPoly constant(Int c) { return monomial(std::move(c), 0, 0); }

  static BivarPoly monomial(Int c, int a_exp, int x_exp) {
    BivarPoly p;
    if (c != 0) p.terms_[ExpKey{a_exp, x_exp}] = std::move(c);
    return p;
  }

  static BivarPoly one() { return constant(1); }

  /// a - a^-1; shows up in every unlink normalization.
  static BivarPoly a_minus_a_inv() {
    return monomial(1, 1, 0) + monomial(-1, -1, 0);
  }

  /// x - x^-1 in the second variable (q - q^-1 for the q-basis).
  static BivarPoly x_minus_x_inv() {
    return monomial(1, 0, 1) + monomial(-1, 0, -1);
  }

  bool is_zero() const { return terms_.empty(); }

  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == ExpKey{0, 0} &&
           terms_.begin()->second == 1;
  }

  std::size_t term_count() const { return terms_.size(); }

  const TermMap& terms() const { return terms_; }

  Int coeff(int a_exp, int x_exp) const {
    auto it = terms_.find(ExpKey{a_exp, x_exp});
    return it == terms_.end() ? Int(0) : it->second;
  }

  void add_term(int a_exp, int x_exp, const Int& c) {
    if (c == 0) return;
    ExpKey k{a_exp, x_exp};
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BivarPoly& operator+=(const BivarPoly& o) {
    if (this == &o) {
      for (auto& [k, c] : terms_) c += c;
      return *this;
    }
    for (const auto& [k, c] : o.terms_) add_term(k.a, k.x, c);
    return *this;
  }

  BivarPoly& operator-=(const BivarPoly& o) {
    if (this == &o) {
      terms_.clear();
      return *this;
    }
    for (const auto& [k, c] : o.terms_) add_term(k.a, k.x, -c);
    return *this;
  }

  friend BivarPoly operator+(BivarPoly l, const BivarPoly& r) { return l += r; }
  friend BivarPoly operator-(BivarPoly l, const BivarPoly& r) { return l -= r; }

  BivarPoly operator-() const {
    BivarPoly p;
    for (const auto& [k, c] : terms_) p.terms_[k] = -c;
    return p;
  }

  friend BivarPoly operator*(const BivarPoly& l, const BivarPoly& r) {
    BivarPoly p;
    for (const auto& [lk, lc] : l.terms_)
      for (const auto& [rk, rc] : r.terms_)
        p.add_term(lk.a + rk.a, lk.x + rk.x, lc * rc);
    return p;
  }

  BivarPoly& operator*=(const BivarPoly& o) { return *this = *this * o; }

  friend BivarPoly operator*(const BivarPoly& l, const Int& c) {
    BivarPoly p;
    if (c == 0) return p;
    for (const auto& [k, v] : l.terms_) p.terms_[k] = v * c;
    return p;
  }

  friend BivarPoly operator*(const Int& c, const BivarPoly& r) { return r * c; }

  /// Multiply by the monomial c * a^da * x^dx.
  BivarPoly shifted(int da, int dx, const Int& c = 1) const {
    BivarPoly p;
    if (c == 0) return p;
    for (const auto& [k, v] : terms_) p.terms_[ExpKey{k.a + da, k.x + dx}] = v * c;
    return p;
  }

  BivarPoly pow(int e) const {
    if (e < 0)
      throw std::invalid_argument("BivarPoly::pow: negative exponent");
    BivarPoly r = one();
    BivarPoly b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  bool operator==(const BivarPoly& o) const { return terms_ == o.terms_; }

  int a_min() const { return min_over([](const ExpKey& k) { return k.a; }); }
  int a_max() const { return max_over([](const ExpKey& k) { return k.a; }); }
  int x_min() const { return min_over([](const ExpKey& k) { return k.x; }); }
  int x_max() const { return max_over([](const ExpKey& k) { return k.x; }); }

  /// Canonical rendering: descending a-exponent, then descending x-exponent.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const Int& c = it->second;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      Int mag = abs(c);
      bool has_var = it->first.a != 0 || it->first.x != 0;
      bool printed = false;
      if (mag != 1 || !has_var) {
        os << mag.str();
        printed = true;
      }
      if (it->first.a != 0) {
        if (printed) os << "*";
        os << "a";
        if (it->first.a != 1) os << "^" << it->first.a;
        printed = true;
      }
      if (it->first.x != 0) {
        if (printed) os << "*";
        os << VarTag::symbol;
        if (it->first.x != 1) os << "^" << it->first.x;
      }
    }
    return os.str();
  }

  /// Parses the grammar produced by to_string: signed terms of `c*a^i*X^j`
  /// factors joined with '*', exponents optional, whitespace tolerated.
  static BivarPoly parse(const std::string& text);

 private:
  template <class F>
  int min_over(F f) const {
    if (terms_.empty())
      throw std::logic_error("BivarPoly: zero polynomial has no degree");
    bool init = false;
    int m = 0;
    for (const auto& [k, c] : terms_) {
      int v = f(k);
      if (!init || v < m) m = v;
      init = true;
    }
    return m;
  }

  template <class F>
  int max_over(F f) const {
    if (terms_.empty())
      throw std::logic_error("BivarPoly: zero polynomial has no degree");
    bool init = false;
    int m = 0;
    for (const auto& [k, c] : terms_) {
      int v = f(k);
      if (!init || v > m) m = v;
      init = true;
    }
    return m;
  }

  TermMap terms_;
};

using LaurentPoly = BivarPoly<QVarTag>;  // variables a, q
using ZPoly = BivarPoly<ZVarTag>;        // variables a, z = q - q^-1

/// Exact division in Z[a^{+-1}, x^{+-1}]: returns h with h*y = x.
/// Throws NotDivisible when no exact quotient exists.
template <class VarTag>
BivarPoly<VarTag> exact_div(const BivarPoly<VarTag>& x,
                            const BivarPoly<VarTag>& y) {
  using P = BivarPoly<VarTag>;
  if (y.is_zero()) throw NotDivisible("exact_div: division by zero");
  if (x.is_zero()) return P::zero();

  // Shift both operands into the ordinary polynomial ring; monomials are
  // units so this changes the quotient only by a monomial we restore at the end.
  const int xa = x.a_min(), xx = x.x_min();
  const int ya = y.a_min(), yx = y.x_min();
  P f = x.shifted(-xa, -xx);
  P g = y.shifted(-ya, -yx);

  // Leading-term elimination in lex order (a, then x). For any true quotient
  // the running remainder stays divisible, so a failed step is conclusive.
  P q;
  const auto& glead = *g.terms().rbegin();
  while (!f.is_zero()) {
    const auto& flead = *f.terms().rbegin();
    int da = flead.first.a - glead.first.a;
    int dx = flead.first.x - glead.first.x;
    if (da < 0 || dx < 0)
      throw NotDivisible("exact_div: leading monomial not divisible");
    Int c = flead.second / glead.second;
    if (c * glead.second != flead.second)
      throw NotDivisible("exact_div: leading coefficient not divisible");
    q.add_term(da, dx, c);
    f -= g.shifted(da, dx, c);
  }
  return q.shifted(xa - ya, xx - yx);
}

/// Substitution rules on (a, q) values.
enum class Subst {
  a_to_minus_one,
  a_to_q,
  a_to_q_squared,
  q_to_minus_inv_q,
  q_to_one,
  a_to_zero,
};

LaurentPoly substitute(const LaurentPoly& p, Subst rule);

/// Rewrites p in the basis {a^i z^j : j >= 0}, z = q - q^-1, by triangular
/// elimination from the top q-degree down. Throws NotRepresentable when p is
/// not symmetric under q -> -1/q.
ZPoly to_z_poly(const LaurentPoly& p);

/// Variant for values with a z-pole of order at most `pole_order`, whose
/// q-form is therefore not Laurent: `p` is read as the pole-cleared product
/// value * z^pole_order, and the z-exponents are shifted back down. Needed
/// for links with more than one component, which carry z^-1.
ZPoly to_z_poly(const LaurentPoly& p, int pole_order);

/// Expands z = q - q^-1. Requires all z-exponents nonnegative.
LaurentPoly from_z_poly(const ZPoly& p);

namespace detail {

template <class VarTag>
BivarPoly<VarTag> parse_bivar(const std::string& text) {
  using P = BivarPoly<VarTag>;
  P result;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_int = [&]() -> long long {
    skip_ws();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw std::invalid_argument("polynomial parse: expected integer in '" + text + "'");
    return std::stoll(text.substr(start, i - start));
  };

  skip_ws();
  if (i == text.size()) throw std::invalid_argument("polynomial parse: empty input");
  bool any = false;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (any) {
      throw std::invalid_argument("polynomial parse: expected '+' or '-' in '" + text + "'");
    }
    // one term: factors joined by '*'
    Int coef = sign;
    int a_exp = 0, x_exp = 0;
    bool saw_factor = false;
    while (true) {
      skip_ws();
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        coef *= Int(parse_int());
        saw_factor = true;
      } else if (i < text.size() && (text[i] == 'a' || text[i] == VarTag::symbol)) {
        char v = text[i];
        ++i;
        int e = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          e = static_cast<int>(parse_int());
        }
        (v == 'a' ? a_exp : x_exp) += e;
        saw_factor = true;
      } else {
        throw std::invalid_argument("polynomial parse: unexpected character in '" + text + "'");
      }
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!saw_factor)
      throw std::invalid_argument("polynomial parse: empty term in '" + text + "'");
    result.add_term(a_exp, x_exp, coef);
    any = true;
  }
  if (!any) throw std::invalid_argument("polynomial parse: no terms in '" + text + "'");
  return result;
}

}  // namespace detail

template <class VarTag>
BivarPoly<VarTag> BivarPoly<VarTag>::parse(const std::string& text) {
  // "0" renders the zero polynomial
  const std::size_t b = text.find_first_not_of(" \t");
  if (b != std::string::npos &&
      text.substr(b, text.find_last_not_of(" \t") - b + 1) == "0")
    return BivarPoly::zero();
  return detail::parse_bivar<VarTag>(text);
}

}  // namespace linksing
