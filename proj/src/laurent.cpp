#include "linksing/laurent.hpp"

namespace linksing {

LaurentPoly substitute(const LaurentPoly& p, Subst rule) {
  LaurentPoly out;
  for (const auto& [k, c] : p.terms()) {
    switch (rule) {
      case Subst::a_to_minus_one:
        out.add_term(0, k.x, (k.a % 2 == 0) ? c : -c);
        break;
      case Subst::a_to_q:
        out.add_term(0, k.x + k.a, c);
        break;
      case Subst::a_to_q_squared:
        out.add_term(0, k.x + 2 * k.a, c);
        break;
      case Subst::q_to_minus_inv_q:
        out.add_term(k.a, -k.x, (k.x % 2 == 0) ? c : -c);
        break;
      case Subst::q_to_one:
        out.add_term(k.a, 0, c);
        break;
      case Subst::a_to_zero:
        if (k.a < 0)
          throw std::invalid_argument("substitute: a := 0 with negative a-power");
        if (k.a == 0) out.add_term(0, k.x, c);
        break;
    }
  }
  return out;
}

namespace {

// z^j expanded in q, j >= 0.
LaurentPoly z_power_in_q(int j) {
  static const LaurentPoly z = LaurentPoly::x_minus_x_inv();
  return z.pow(j);
}

}  // namespace

ZPoly to_z_poly(const LaurentPoly& p) { return to_z_poly(p, 0); }

ZPoly to_z_poly(const LaurentPoly& p, int pole_order) {
  if (pole_order < 0) throw std::invalid_argument("to_z_poly: negative pole order");

  // Split by a-exponent; each univariate piece is handled from its top
  // q-degree d down, subtracting coeff * z^d at every step. The input is
  // read as (value * z^pole_order), so the z-exponents shift back down.
  std::map<int, std::map<int, Int>> by_a;
  for (const auto& [k, c] : p.terms()) by_a[k.a][k.x] = c;

  ZPoly out;
  for (auto& [a_exp, column] : by_a) {
    while (!column.empty()) {
      auto top = column.rbegin();
      const int d = top->first;
      const Int c = top->second;
      if (d < 0)
        throw NotRepresentable("to_z_poly: not in the span of {a^i z^j, j >= 0}");
      out.add_term(a_exp, d - pole_order, c);
      const LaurentPoly zd = z_power_in_q(d);
      for (const auto& [qe, zc] : zd.terms()) {
        auto [it, inserted] = column.try_emplace(qe.x, -c * zc);
        if (!inserted) {
          it->second -= c * zc;
          if (it->second == 0) column.erase(it);
        }
      }
    }
  }
  return out;
}

LaurentPoly from_z_poly(const ZPoly& p) {
  LaurentPoly out;
  for (const auto& [k, c] : p.terms()) {
    if (k.x < 0)
      throw NotRepresentable("from_z_poly: negative z-power has no Laurent expansion");
    out += z_power_in_q(k.x).shifted(k.a, 0, c);
  }
  return out;
}

}  // namespace linksing
