#pragma once

/**
 * @file series.hpp
 * @brief Truncated q-series with exact a-polynomial coefficients.
 *
 * A TruncSeries represents sum_{e >= min_q} c_e(a) q^e known exactly for all
 * e < trunc(). Every generating function of Hilbert-scheme type lives here.
 * Arithmetic tracks the truncation order conservatively, so agreement of two
 * series is only ever asserted below the common truncation.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linksing/laurent.hpp"

namespace linksing {

class TruncSeries {
 public:
  explicit TruncSeries(int trunc) : trunc_(trunc) {}

  /// Series view of an exact polynomial: terms at or above trunc are outside
  /// the window and dropped.
  static TruncSeries from_poly(const LaurentPoly& p, int trunc);

  int trunc() const { return trunc_; }
  int min_q() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
  bool is_zero_below_trunc() const { return coeffs_.empty(); }

  /// Coefficient of q^e as a polynomial in a alone; e must lie below trunc.
  LaurentPoly coeff(int q_exp) const;

  const std::map<int, LaurentPoly>& coeffs() const { return coeffs_; }

  void add_coeff(int q_exp, const LaurentPoly& c);

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;

  /// Exact multiplication by a Laurent polynomial in a and q. A negative
  /// minimal q-degree of p lowers the truncation accordingly.
  TruncSeries mul_poly(const LaurentPoly& p) const;

  /// Multiplication by 1/(1 - q^m), m > 0.
  TruncSeries mul_geometric(int m) const;

  /// num / prod (1 - q^{m_i}) as a series modulo q^trunc.
  static TruncSeries expand(const LaurentPoly& num, const std::vector<int>& denom_ms,
                            int trunc);

  /// Recovers a Laurent polynomial from a stabilized series: asserts that all
  /// coefficients with q-degree in (deg_bound, trunc) vanish.
  /// Throws NotStabilized when the margin is too small or tail terms survive.
  LaurentPoly lift(int deg_bound, int margin = kDefaultLiftMargin) const;

  /// Coefficient-wise substitution; only the a-rules are meaningful here.
  TruncSeries substitute(Subst rule) const;

  /// Exact coefficient-wise division by a polynomial in a (e.g. 1 - a^2).
  TruncSeries divide_exact(const LaurentPoly& divisor) const;

  /// First q-exponent below the common truncation where the two series
  /// disagree, or nullopt when they agree on the whole common window.
  std::optional<int> first_mismatch(const TruncSeries& o) const;

  bool equals_below_common(const TruncSeries& o) const {
    return !first_mismatch(o).has_value();
  }

  std::string to_string() const;

  static constexpr int kDefaultLiftMargin = 20;

 private:
  int trunc_;
  std::map<int, LaurentPoly> coeffs_;  // q-exponent -> nonzero polynomial in a
};

}  // namespace linksing
