#pragma once

/**
 * @file staircase.hpp
 * @brief Staircase enumeration of the monomial ideals of C[[t^k, t^n]] and
 *        the refined generating function sum q^{2l} (1-a^2)^m, both by direct
 *        enumeration and by the residue closed form.
 *
 * A staircase is a profile of row lengths s_0 <= s_1 <= ... <= s_{k-1} with
 * the wrap constraint s_{k-1} <= s_0 + n; the corresponding monomial ideal is
 * {t^{alpha k + beta n} : alpha >= s_{k-1-beta}}. The colength l is the box
 * count sum s_j, and the number of minimal generators m is the number of
 * strict inequalities in the cyclic chain, wrap included.
 */

#include <functional>
#include <map>
#include <vector>

#include "linksing/series.hpp"

namespace linksing {

struct Staircase {
  int k = 1;
  int n = 1;
  std::vector<int> steps;  // non-decreasing row lengths, steps.back() <= steps.front() + n

  long long length() const;      // number of boxes under the staircase
  int generator_count() const;   // strict inequalities in the cyclic chain
};

/// Streams every staircase for coprime (k, n) with length <= max_length, each
/// exactly once, in lexicographic order of the step profile.
/// Throws NotCoprime when gcd(k, n) != 1.
void enumerate_staircases(int k, int n, long long max_length,
                          const std::function<void(const Staircase&)>& visit);

/// sum over staircases with 2l < trunc of q^{2l} (1-a^2)^m.
TruncSeries staircase_series_direct(int k, int n, int trunc);

/// The same series from the residue closed form
///   1/(1-q^{2k}) * sum_{j=0}^{k-1} (-1)^j q^{2jn+j(j+1)} / ([j]! [k-1-j]!)
///                  * prod_{i=-j}^{k-1-j} (1 - a^2 q^{2i}),
/// with [r]! = prod_{s=1}^{r} (1 - q^{2s}).
TruncSeries staircase_series_residue(int k, int n, int trunc);

/// Histogram length -> (generator count -> number of staircases).
std::map<long long, std::map<int, long long>> staircase_histogram(int k, int n,
                                                                  long long max_length);

}  // namespace linksing
