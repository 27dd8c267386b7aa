#pragma once

/**
 * @file semigroup.hpp
 * @brief Numerical semigroups, their N-modules, and valuation semigroups of
 *        subrings of power series.
 *
 * NumSemigroup is a cofinite additive sub-semigroup of N. GammaModule is a
 * sub-N-module Delta containing 0 with Delta + Gamma <= Delta; these index the
 * isomorphism classes of semigroup ideals up to shift. PowerSeriesQ supplies
 * the exact-rational series arithmetic used to compute valuation semigroups of
 * rings like C[[t^4, t^6 + t^7]].
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linksing/errors.hpp"
#include "linksing/numeric.hpp"

namespace linksing {

class NumSemigroup {
 public:
  /// Builds the semigroup generated by positive integers with gcd 1.
  /// The stored generating set is re-minimalized; gaps, conductor, delta and
  /// the Milnor number 2*delta are computed by a sieve certified by a run of
  /// consecutive members of length >= the least generator.
  static NumSemigroup from_generators(const std::vector<int>& gens);

  const std::vector<int>& generators() const { return generators_; }
  const std::vector<int>& gaps() const { return gaps_; }
  int conductor() const { return conductor_; }
  int delta() const { return delta_; }
  int milnor() const { return milnor_; }
  int min_generator() const { return generators_.front(); }

  bool contains(int x) const;

  /// Members in [0, bound), ascending.
  std::vector<int> members_below(int bound) const;

  bool operator==(const NumSemigroup& o) const {
    return generators_ == o.generators_;
  }

 private:
  NumSemigroup() = default;
  std::vector<int> generators_;  // unique minimal generating set, sorted
  std::vector<int> gaps_;        // complement of the semigroup in N, sorted
  int conductor_ = 0;
  int delta_ = 0;
  int milnor_ = 0;
};

/// Shift set {i >= 0 : i + Delta <= Gamma}: a finite exceptional list below
/// the threshold, plus everything from the threshold on.
struct ShiftSet {
  std::vector<int> exceptional;
  int threshold = 0;

  bool contains(int i) const;
};

class GammaModule {
 public:
  /// Delta = Gamma union `added_gaps`; validates 0-membership and closure.
  GammaModule(NumSemigroup parent, std::vector<int> added_gaps);

  /// Module generated by the given elements (each in Gamma or a gap): the
  /// closure of {g + Gamma} over all g. 0 is always adjoined.
  static GammaModule from_generators(const NumSemigroup& parent,
                                     const std::vector<int>& gens);

  const NumSemigroup& parent() const { return parent_; }

  /// Delta \ Gamma, sorted.
  const std::vector<int>& added_gaps() const { return added_gaps_; }

  /// The unique minimal generating set, starting with 0.
  const std::vector<int>& min_generators() const { return min_generators_; }

  /// #(N \ Delta).
  int extra_gap_count() const {
    return parent_.delta() - static_cast<int>(added_gaps_.size());
  }

  /// #(Delta \ Gamma).
  int added_gap_count() const { return static_cast<int>(added_gaps_.size()); }

  bool contains(int x) const;

 private:
  NumSemigroup parent_;
  std::vector<int> added_gaps_;
  std::vector<int> min_generators_;
};

/// All Gamma-submodules of N containing 0, ordered lexicographically by
/// minimal generator list.
std::vector<GammaModule> semigroup_modules(const NumSemigroup& sg);

/// {i >= 0 : i + Delta <= Gamma}; threshold equals the conductor.
ShiftSet module_shifts(const NumSemigroup& sg, const GammaModule& mod);

/// #(Gamma \ (i + Delta)) for i + Delta <= Gamma, via the length identity
/// i - #(Delta \ Gamma), cross-checked against the direct set difference.
/// Throws NotContained when the shift containment fails.
int module_colength(const NumSemigroup& sg, const GammaModule& mod, int shift);

/// Truncated power series in t over exact rationals; exponents in [0, trunc).
class PowerSeriesQ {
 public:
  explicit PowerSeriesQ(int trunc) : trunc_(trunc) {}

  static PowerSeriesQ monomial(const Rat& c, int exp, int trunc);

  /// Parses sums of `c*t^k` with integer or rational c, e.g. "t^6 + t^7" or
  /// "2*t^3 - 1/2*t^5".
  static PowerSeriesQ parse(const std::string& text, int trunc);

  int trunc() const { return trunc_; }
  const std::map<int, Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int e) const;
  void add_term(int e, const Rat& c);

  /// Lowest exponent with nonzero coefficient, if any appears below trunc.
  std::optional<int> valuation() const;

  PowerSeriesQ operator+(const PowerSeriesQ& o) const;
  PowerSeriesQ operator-(const PowerSeriesQ& o) const;
  PowerSeriesQ operator*(const PowerSeriesQ& o) const;
  PowerSeriesQ scaled(const Rat& c) const;

  std::string to_string() const;

 private:
  int trunc_;
  std::map<int, Rat> coeffs_;
};

/// Valuation semigroup of the subring generated by the given series
/// elements: all monomials in the generators of valuation < trunc are formed
/// and Gaussian-eliminated by leading exponent over exact rationals; achieved
/// valuations are read off the pivots. Stability must be certified by a run
/// of consecutive achieved valuations of length >= the least valuation, and
/// by agreement with a rerun at trunc + 20; otherwise TruncationTooLow.
/// Generators are read as exact polynomials (zero beyond their support).
NumSemigroup semigroup_from_series(const std::vector<PowerSeriesQ>& gens, int trunc);

}  // namespace linksing
