#include "linksing/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace linksing {

namespace {

void require_a_only(const LaurentPoly& p) {
  for (const auto& [k, c] : p.terms())
    if (k.x != 0)
      throw std::logic_error("TruncSeries: coefficient carries a q-power");
}

}  // namespace

TruncSeries TruncSeries::from_poly(const LaurentPoly& p, int trunc) {
  TruncSeries s(trunc);
  for (const auto& [k, c] : p.terms())
    if (k.x < trunc) s.coeffs_[k.x].add_term(k.a, 0, c);
  return s;
}

LaurentPoly TruncSeries::coeff(int q_exp) const {
  if (q_exp >= trunc_)
    throw std::out_of_range("TruncSeries::coeff: exponent at or above truncation");
  auto it = coeffs_.find(q_exp);
  return it == coeffs_.end() ? LaurentPoly::zero() : it->second;
}

void TruncSeries::add_coeff(int q_exp, const LaurentPoly& c) {
  if (q_exp >= trunc_ || c.is_zero()) return;
  require_a_only(c);
  auto [it, inserted] = coeffs_.try_emplace(q_exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  TruncSeries s(std::min(trunc_, o.trunc_));
  for (const auto& [e, c] : coeffs_) s.add_coeff(e, c);
  for (const auto& [e, c] : o.coeffs_) s.add_coeff(e, c);
  return s;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  TruncSeries s(std::min(trunc_, o.trunc_));
  for (const auto& [e, c] : coeffs_) s.add_coeff(e, c);
  for (const auto& [e, c] : o.coeffs_) s.add_coeff(e, -c);
  return s;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  // Exactness window: a product coefficient at e needs both factors known on
  // every split e = e1 + e2 with e1 >= min_q, e2 >= o.min_q.
  int t = std::min(trunc_, o.trunc_);
  t = std::min(t, trunc_ + o.min_q());
  t = std::min(t, o.trunc_ + min_q());
  TruncSeries s(t);
  for (const auto& [e1, c1] : coeffs_) {
    for (const auto& [e2, c2] : o.coeffs_) {
      if (e1 + e2 >= t) break;
      s.add_coeff(e1 + e2, c1 * c2);
    }
  }
  return s;
}

TruncSeries TruncSeries::mul_poly(const LaurentPoly& p) const {
  if (p.is_zero()) return TruncSeries(trunc_);
  TruncSeries s(trunc_ + p.x_min());
  for (const auto& [k, pc] : p.terms()) {
    for (const auto& [e, c] : coeffs_) {
      if (e + k.x >= s.trunc_) break;
      s.add_coeff(e + k.x, c.shifted(k.a, 0, pc));
    }
  }
  return s;
}

TruncSeries TruncSeries::mul_geometric(int m) const {
  if (m <= 0) throw std::invalid_argument("mul_geometric: exponent must be positive");
  TruncSeries s(trunc_);
  // c'_e = c_e + c'_{e-m}, swept upward from the lowest known exponent.
  for (int e = min_q(); e < trunc_; ++e) {
    LaurentPoly v;
    if (auto it = coeffs_.find(e); it != coeffs_.end()) v = it->second;
    if (auto it = s.coeffs_.find(e - m); it != s.coeffs_.end()) v += it->second;
    if (!v.is_zero()) s.coeffs_[e] = std::move(v);
  }
  return s;
}

TruncSeries TruncSeries::expand(const LaurentPoly& num, const std::vector<int>& denom_ms,
                                int trunc) {
  TruncSeries s = from_poly(num, trunc);
  for (int m : denom_ms) s = s.mul_geometric(m);
  return s;
}

LaurentPoly TruncSeries::lift(int deg_bound, int margin) const {
  if (trunc_ < deg_bound + margin)
    throw NotStabilized("lift: truncation below requested bound plus margin");
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) {
    if (e > deg_bound)
      throw NotStabilized("lift: nonzero coefficient at q^" + std::to_string(e) +
                          " above degree bound " + std::to_string(deg_bound));
    for (const auto& [k, v] : c.terms()) out.add_term(k.a, e, v);
  }
  return out;
}

TruncSeries TruncSeries::substitute(Subst rule) const {
  switch (rule) {
    case Subst::a_to_minus_one:
    case Subst::a_to_zero: {
      TruncSeries s(trunc_);
      for (const auto& [e, c] : coeffs_) s.add_coeff(e, linksing::substitute(c, rule));
      return s;
    }
    case Subst::a_to_q:
    case Subst::a_to_q_squared: {
      // a^j q^e -> q^{e+wj}; with j >= 0 every output exponent below trunc
      // draws only on known input exponents.
      const int w = rule == Subst::a_to_q ? 1 : 2;
      TruncSeries s(trunc_);
      for (const auto& [e, c] : coeffs_) {
        for (const auto& [k, v] : c.terms()) {
          if (k.a < 0)
            throw std::invalid_argument(
                "TruncSeries::substitute: negative a-power under a := q");
          if (e + w * k.a < trunc_)
            s.add_coeff(e + w * k.a, LaurentPoly::constant(v));
        }
      }
      return s;
    }
    default:
      throw std::invalid_argument("TruncSeries::substitute: rule not applicable");
  }
}

TruncSeries TruncSeries::divide_exact(const LaurentPoly& divisor) const {
  require_a_only(divisor);
  TruncSeries s(trunc_);
  for (const auto& [e, c] : coeffs_) s.add_coeff(e, exact_div(c, divisor));
  return s;
}

std::optional<int> TruncSeries::first_mismatch(const TruncSeries& o) const {
  const int t = std::min(trunc_, o.trunc_);
  auto a = coeffs_.begin();
  auto b = o.coeffs_.begin();
  while (a != coeffs_.end() || b != o.coeffs_.end()) {
    int ea = a != coeffs_.end() ? a->first : t;
    int eb = b != o.coeffs_.end() ? b->first : t;
    int e = std::min(ea, eb);
    if (e >= t) break;
    const LaurentPoly* ca = (ea == e) ? &a->second : nullptr;
    const LaurentPoly* cb = (eb == e) ? &b->second : nullptr;
    if (ca && cb) {
      if (!(*ca == *cb)) return e;
      ++a, ++b;
    } else if (ca) {
      if (!ca->is_zero()) return e;
      ++a;
    } else {
      if (!cb->is_zero()) return e;
      ++b;
    }
  }
  return std::nullopt;
}

std::string TruncSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (e != 0) os << "*q^" << e;
  }
  if (first) os << "0";
  os << " [mod q^" << trunc_ << "]";
  return os.str();
}

}  // namespace linksing
