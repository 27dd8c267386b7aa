#include "linksing/staircase.hpp"

#include <numeric>
#include <stdexcept>

namespace linksing {

long long Staircase::length() const {
  long long l = 0;
  for (int s : steps) l += s;
  return l;
}

int Staircase::generator_count() const {
  int m = 0;
  for (std::size_t j = 1; j < steps.size(); ++j)
    if (steps[j - 1] < steps[j]) ++m;
  if (steps.back() < steps.front() + n) ++m;
  return m;
}

namespace {

void check_staircase_args(int k, int n) {
  if (k < 1 || n < 1)
    throw std::invalid_argument("staircase: k and n must be at least 1");
  if (std::gcd(k, n) != 1)
    throw NotCoprime("staircase: gcd(k, n) = " + std::to_string(std::gcd(k, n)));
}

}  // namespace

void enumerate_staircases(int k, int n, long long max_length,
                          const std::function<void(const Staircase&)>& visit) {
  check_staircase_args(k, n);
  Staircase sc;
  sc.k = k;
  sc.n = n;
  sc.steps.assign(static_cast<std::size_t>(k), 0);

  // Depth-first over the step profile; remaining rows are at least as long
  // as the current one, which prunes on the running length.
  auto rec = [&](auto&& self, int idx, long long sum) -> void {
    if (idx == k) {
      visit(sc);
      return;
    }
    const int lo = idx == 0 ? 0 : sc.steps[idx - 1];
    const long long remaining = k - idx;
    for (int v = lo;; ++v) {
      if (idx > 0 && v > sc.steps[0] + n) break;  // wrap constraint
      long long s = sum + v;
      if (s + (remaining - 1) * static_cast<long long>(v) > max_length) break;
      sc.steps[idx] = v;
      self(self, idx + 1, s);
    }
  };
  if (max_length >= 0) rec(rec, 0, 0);
}

TruncSeries staircase_series_direct(int k, int n, int trunc) {
  check_staircase_args(k, n);
  std::vector<LaurentPoly> weight;  // (1 - a^2)^m for m = 0..k
  LaurentPoly one_minus_a2 =
      LaurentPoly::one() - LaurentPoly::monomial(1, 2, 0);
  weight.push_back(LaurentPoly::one());
  for (int m = 1; m <= k; ++m) weight.push_back(weight.back() * one_minus_a2);

  TruncSeries out(trunc);
  const long long lmax = trunc <= 0 ? -1 : (static_cast<long long>(trunc) - 1) / 2;
  enumerate_staircases(k, n, lmax, [&](const Staircase& sc) {
    out.add_coeff(static_cast<int>(2 * sc.length()),
                  weight[static_cast<std::size_t>(sc.generator_count())]);
  });
  return out;
}

TruncSeries staircase_series_residue(int k, int n, int trunc) {
  check_staircase_args(k, n);
  const LaurentPoly a2 = LaurentPoly::monomial(1, 2, 0);

  TruncSeries total(trunc);
  for (int j = 0; j <= k - 1; ++j) {
    // numerator (-1)^j q^{2jn + j(j+1)} prod_{i=-j}^{k-1-j} (1 - a^2 q^{2i})
    LaurentPoly num = LaurentPoly::monomial((j % 2 == 0) ? 1 : -1, 0,
                                            2 * j * n + j * (j + 1));
    for (int i = -j; i <= k - 1 - j; ++i)
      num *= LaurentPoly::one() - a2.shifted(0, 2 * i);

    // denominator [j]! [k-1-j]! (1 - q^{2k}), expanded geometrically
    std::vector<int> denoms;
    for (int d = 1; d <= j; ++d) denoms.push_back(2 * d);
    for (int d = 1; d <= k - 1 - j; ++d) denoms.push_back(2 * d);
    denoms.push_back(2 * k);
    total = total + TruncSeries::expand(num, denoms, trunc);
  }
  return total;
}

std::map<long long, std::map<int, long long>> staircase_histogram(int k, int n,
                                                                  long long max_length) {
  std::map<long long, std::map<int, long long>> hist;
  enumerate_staircases(k, n, max_length, [&](const Staircase& sc) {
    ++hist[sc.length()][sc.generator_count()];
  });
  return hist;
}

}  // namespace linksing
