#include "linksing/semigroup.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace linksing {

namespace {

// Minimal generating set of a semigroup from a membership predicate.
// Generators are bounded by conductor + least positive member.
template <class Contains>
std::vector<int> semigroup_min_gens(Contains&& member, int conductor, int least) {
  std::vector<int> gens;
  for (int x = 1; x <= conductor + least; ++x) {
    if (!member(x)) continue;
    bool decomposable = false;
    for (int m = 1; m < x && !decomposable; ++m)
      if (member(m) && member(x - m)) decomposable = true;
    if (!decomposable) gens.push_back(x);
  }
  return gens;
}

}  // namespace

NumSemigroup NumSemigroup::from_generators(const std::vector<int>& gens_in) {
  if (gens_in.empty())
    throw std::invalid_argument("NumSemigroup: empty generator list");
  std::vector<int> gens = gens_in;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.front() <= 0)
    throw std::invalid_argument("NumSemigroup: generators must be positive");
  int g = 0;
  for (int v : gens) g = std::gcd(g, v);
  if (g != 1)
    throw NotCofinite("NumSemigroup: generators have gcd " + std::to_string(g));

  // Sieve members and certify the conductor by a run of `least` consecutive
  // members; the bound is grown until the run appears.
  const int least = gens.front();
  long long bound = static_cast<long long>(gens.front()) *
                        (gens.size() > 1 ? gens[1] : gens.front()) +
                    gens.back() + 2;
  std::vector<char> member;
  int conductor = -1;
  while (conductor < 0) {
    member.assign(static_cast<std::size_t>(bound), 0);
    member[0] = 1;
    for (long long i = 1; i < bound; ++i)
      for (int v : gens)
        if (i >= v && member[static_cast<std::size_t>(i - v)]) {
          member[static_cast<std::size_t>(i)] = 1;
          break;
        }
    int run = 0;
    for (long long i = 0; i < bound; ++i) {
      run = member[static_cast<std::size_t>(i)] ? run + 1 : 0;
      if (run == least) {
        conductor = static_cast<int>(i) - least + 1;
        break;
      }
    }
    if (conductor < 0) {
      bound *= 2;
      if (bound > (1LL << 26))
        throw std::runtime_error("NumSemigroup: sieve bound exploded");
    }
  }

  NumSemigroup sg;
  for (int i = 0; i < conductor; ++i)
    if (!member[static_cast<std::size_t>(i)]) sg.gaps_.push_back(i);
  sg.conductor_ = conductor;
  sg.delta_ = static_cast<int>(sg.gaps_.size());
  sg.milnor_ = 2 * sg.delta_;
  sg.generators_ = semigroup_min_gens(
      [&](int x) { return x >= conductor || member[static_cast<std::size_t>(x)]; },
      conductor, least);
  return sg;
}

bool NumSemigroup::contains(int x) const {
  if (x < 0) return false;
  if (x >= conductor_) return true;
  return !std::binary_search(gaps_.begin(), gaps_.end(), x);
}

std::vector<int> NumSemigroup::members_below(int bound) const {
  std::vector<int> out;
  for (int x = 0; x < bound; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

bool ShiftSet::contains(int i) const {
  if (i >= threshold) return true;
  return std::binary_search(exceptional.begin(), exceptional.end(), i);
}

GammaModule::GammaModule(NumSemigroup parent, std::vector<int> added_gaps)
    : parent_(std::move(parent)), added_gaps_(std::move(added_gaps)) {
  std::sort(added_gaps_.begin(), added_gaps_.end());
  added_gaps_.erase(std::unique(added_gaps_.begin(), added_gaps_.end()),
                    added_gaps_.end());
  for (int s : added_gaps_)
    if (parent_.contains(s))
      throw std::invalid_argument("GammaModule: " + std::to_string(s) +
                                  " is already a member of the semigroup");
  // Closure under the parent's generators suffices for closure under Gamma.
  for (int s : added_gaps_)
    for (int g : parent_.generators())
      if (!contains(s + g))
        throw std::invalid_argument("GammaModule: set not closed at " +
                                    std::to_string(s + g));

  // Minimal generators: elements of Delta with no splitting x = d + gamma,
  // d in Delta, gamma a nonzero member of Gamma.
  const int limit = parent_.conductor() + parent_.min_generator();
  for (int x = 0; x <= limit; ++x) {
    if (!contains(x)) continue;
    bool decomposable = false;
    for (int gamma = 1; gamma <= x && !decomposable; ++gamma)
      if (parent_.contains(gamma) && contains(x - gamma)) decomposable = true;
    if (!decomposable) min_generators_.push_back(x);
  }
}

GammaModule GammaModule::from_generators(const NumSemigroup& parent,
                                         const std::vector<int>& gens) {
  std::set<int> added;
  auto add_orbit = [&](int g) {
    if (g < 0) throw std::invalid_argument("GammaModule: negative generator");
    for (int m : parent.members_below(std::max(parent.conductor() - g, 0)))
      if (!parent.contains(g + m)) added.insert(g + m);
    if (!parent.contains(g)) added.insert(g);
  };
  for (int g : gens) add_orbit(g);
  return GammaModule(parent,
                     std::vector<int>(added.begin(), added.end()));
}

bool GammaModule::contains(int x) const {
  if (parent_.contains(x)) return true;
  return std::binary_search(added_gaps_.begin(), added_gaps_.end(), x);
}

std::vector<GammaModule> semigroup_modules(const NumSemigroup& sg) {
  const auto& gaps = sg.gaps();
  const int n = static_cast<int>(gaps.size());
  if (n > 20)
    throw std::invalid_argument("semigroup_modules: too many gaps to enumerate");

  std::vector<GammaModule> out;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    std::vector<int> added;
    for (int b = 0; b < n; ++b)
      if (mask & (1UL << b)) added.push_back(gaps[b]);
    // Closure test: each added gap pushed by each generator stays inside.
    bool closed = true;
    auto in_delta = [&](int x) {
      return sg.contains(x) || std::binary_search(added.begin(), added.end(), x);
    };
    for (int s : added)
      for (int g : sg.generators())
        if (!in_delta(s + g)) {
          closed = false;
          break;
        }
    if (!closed) continue;
    out.emplace_back(sg, added);
  }
  std::sort(out.begin(), out.end(), [](const GammaModule& a, const GammaModule& b) {
    return a.min_generators() < b.min_generators();
  });
  return out;
}

ShiftSet module_shifts(const NumSemigroup& sg, const GammaModule& mod) {
  ShiftSet result;
  result.threshold = sg.conductor();
  for (int i = 0; i < sg.conductor(); ++i) {
    bool ok = true;
    // only x < conductor - i can land below the conductor
    for (int x = 0; x < sg.conductor() - i && ok; ++x)
      if (mod.contains(x) && !sg.contains(i + x)) ok = false;
    if (ok) result.exceptional.push_back(i);
  }
  return result;
}

int module_colength(const NumSemigroup& sg, const GammaModule& mod, int shift) {
  if (shift < 0 || !module_shifts(sg, mod).contains(shift))
    throw NotContained("module_colength: i + Delta not contained in Gamma");
  const int value = shift - mod.added_gap_count();

  // Direct count of Gamma \ (shift + Delta); both sets agree from
  // shift + conductor on.
  int direct = 0;
  for (int y = 0; y < shift + sg.conductor(); ++y)
    if (sg.contains(y) && !(y >= shift && mod.contains(y - shift))) ++direct;
  if (direct != value)
    throw std::logic_error("module_colength: length identity failed");
  return value;
}

PowerSeriesQ PowerSeriesQ::monomial(const Rat& c, int exp, int trunc) {
  PowerSeriesQ s(trunc);
  s.add_term(exp, c);
  return s;
}

Rat PowerSeriesQ::coeff(int e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

void PowerSeriesQ::add_term(int e, const Rat& c) {
  if (e < 0) throw std::invalid_argument("PowerSeriesQ: negative exponent");
  if (e >= trunc_ || c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

std::optional<int> PowerSeriesQ::valuation() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.begin()->first;
}

PowerSeriesQ PowerSeriesQ::operator+(const PowerSeriesQ& o) const {
  PowerSeriesQ s(std::min(trunc_, o.trunc_));
  for (const auto& [e, c] : coeffs_) s.add_term(e, c);
  for (const auto& [e, c] : o.coeffs_) s.add_term(e, c);
  return s;
}

PowerSeriesQ PowerSeriesQ::operator-(const PowerSeriesQ& o) const {
  PowerSeriesQ s(std::min(trunc_, o.trunc_));
  for (const auto& [e, c] : coeffs_) s.add_term(e, c);
  for (const auto& [e, c] : o.coeffs_) s.add_term(e, -c);
  return s;
}

PowerSeriesQ PowerSeriesQ::operator*(const PowerSeriesQ& o) const {
  PowerSeriesQ s(std::min(trunc_, o.trunc_));
  for (const auto& [e1, c1] : coeffs_) {
    for (const auto& [e2, c2] : o.coeffs_) {
      if (e1 + e2 >= s.trunc_) break;
      s.add_term(e1 + e2, c1 * c2);
    }
  }
  return s;
}

PowerSeriesQ PowerSeriesQ::scaled(const Rat& c) const {
  PowerSeriesQ s(trunc_);
  if (c == 0) return s;
  for (const auto& [e, v] : coeffs_) s.coeffs_[e] = v * c;
  return s;
}

std::string PowerSeriesQ::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (e != 0) os << "*t^" << e;
  }
  if (first) os << "0";
  return os.str();
}

PowerSeriesQ PowerSeriesQ::parse(const std::string& text, int trunc) {
  PowerSeriesQ out(trunc);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_uint = [&]() -> long long {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start)
      throw std::invalid_argument("series parse: expected integer in '" + text + "'");
    return std::stoll(text.substr(start, i - start));
  };

  skip_ws();
  if (i == text.size()) throw std::invalid_argument("series parse: empty input");
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
      throw std::invalid_argument("series parse: expected '+' or '-' in '" + text + "'");
    }
    Rat coef = sign;
    bool saw_coef = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      Int num(parse_uint());
      Int den(1);
      skip_ws();
      if (i < text.size() && text[i] == '/') {
        ++i;
        skip_ws();
        den = Int(parse_uint());
        if (den == 0) throw std::invalid_argument("series parse: zero denominator");
      }
      coef *= Rat(num, den);
      saw_coef = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    int exp = 0;
    if (i < text.size() && text[i] == 't') {
      ++i;
      exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        exp = static_cast<int>(parse_uint());
      }
    } else if (!saw_coef) {
      throw std::invalid_argument("series parse: expected coefficient or 't' in '" +
                                  text + "'");
    }
    out.add_term(exp, coef);
    any = true;
  }
  if (!any) throw std::invalid_argument("series parse: no terms in '" + text + "'");
  return out;
}

namespace {

// Row-echelon structure keyed by valuation; pivots are kept monic.
struct ValuationBasis {
  std::map<int, PowerSeriesQ> pivots;

  void reduce_and_insert(PowerSeriesQ s) {
    while (true) {
      auto v = s.valuation();
      if (!v) return;  // vanishes below the truncation window
      auto it = pivots.find(*v);
      if (it == pivots.end()) {
        pivots.emplace(*v, s.scaled(Rat(1) / s.coeff(*v)));
        return;
      }
      s = s - it->second.scaled(s.coeff(*v));
    }
  }
};

struct EliminationResult {
  std::vector<int> achieved;  // valuations < trunc, ascending
  int least = 0;              // smallest positive achieved valuation
  int conductor = -1;         // start of the certifying run, -1 if none
};

EliminationResult eliminate(const std::vector<PowerSeriesQ>& gens, int trunc) {
  std::vector<int> vals;
  for (const auto& g : gens) {
    auto v = g.valuation();
    if (!v || *v <= 0)
      throw std::invalid_argument(
          "semigroup_from_series: generators need positive valuation");
    vals.push_back(*v);
  }

  ValuationBasis basis;
  // All monomials in the generators with valuation below trunc, depth-first.
  auto dfs = [&](auto&& self, std::size_t idx, const PowerSeriesQ& cur,
                 long long val) -> void {
    if (idx == gens.size()) {
      basis.reduce_and_insert(cur);
      return;
    }
    PowerSeriesQ acc = cur;
    long long v = val;
    while (true) {
      self(self, idx + 1, acc, v);
      v += vals[idx];
      if (v >= trunc) break;
      acc = acc * gens[idx];
    }
  };
  dfs(dfs, 0, PowerSeriesQ::monomial(1, 0, trunc), 0);

  EliminationResult res;
  for (const auto& [v, s] : basis.pivots) res.achieved.push_back(v);
  int least = 0;
  for (int v : res.achieved)
    if (v > 0) {
      least = v;
      break;
    }
  if (least == 0)
    throw std::invalid_argument("semigroup_from_series: no positive valuation");
  res.least = least;

  int run = 0;
  for (int x = 0, idx = 0; x < trunc; ++x) {
    bool in = idx < static_cast<int>(res.achieved.size()) && res.achieved[idx] == x;
    if (in) ++idx;
    run = in ? run + 1 : 0;
    if (run == least) {
      res.conductor = x - least + 1;
      break;
    }
  }
  return res;
}

}  // namespace

NumSemigroup semigroup_from_series(const std::vector<PowerSeriesQ>& gens, int trunc) {
  if (gens.empty())
    throw std::invalid_argument("semigroup_from_series: empty generator list");
  std::vector<PowerSeriesQ> window;
  for (const auto& g : gens) {
    PowerSeriesQ w(trunc);
    for (const auto& [e, c] : g.coeffs()) w.add_term(e, c);
    window.push_back(std::move(w));
  }

  EliminationResult first = eliminate(window, trunc);
  if (first.conductor < 0)
    throw TruncationTooLow(
        "semigroup_from_series: no run of consecutive valuations certifies "
        "stability below t^" +
        std::to_string(trunc));

  int g = 0;
  for (int v : first.achieved) g = std::gcd(g, v);
  if (g != 1)
    throw NotCofinite("semigroup_from_series: achieved valuations have gcd " +
                      std::to_string(g));

  // Everything from the certified run on must have been achieved.
  {
    std::size_t idx = 0;
    while (idx < first.achieved.size() && first.achieved[idx] < first.conductor) ++idx;
    for (int x = first.conductor; x < trunc; ++x, ++idx)
      if (idx >= first.achieved.size() || first.achieved[idx] != x)
        throw std::logic_error("semigroup_from_series: run certificate violated");
  }

  // Closure sanity on the achieved set.
  for (int x : first.achieved)
    for (int y : first.achieved) {
      if (x + y >= trunc) break;
      if (!std::binary_search(first.achieved.begin(), first.achieved.end(), x + y))
        throw std::logic_error("semigroup_from_series: achieved set not closed");
    }

  auto min_gens = [&](const EliminationResult& r) {
    auto member = [&](int x) {
      return x >= r.conductor ||
             std::binary_search(r.achieved.begin(), r.achieved.end(), x);
    };
    int conductor = 0;
    for (int x = 0; x < r.conductor; ++x)
      if (!member(x)) conductor = x + 1;
    return semigroup_min_gens(member, conductor, r.least);
  };
  std::vector<int> gens1 = min_gens(first);

  // Rerun with a deeper window; a changed answer means the first window lied.
  // Generators are taken as exact polynomials (zero beyond their support).
  {
    std::vector<PowerSeriesQ> deeper;
    for (const auto& g2 : gens) {
      PowerSeriesQ w(trunc + 20);
      for (const auto& [e, c] : g2.coeffs()) w.add_term(e, c);
      deeper.push_back(std::move(w));
    }
    EliminationResult second = eliminate(deeper, trunc + 20);
    if (second.conductor < 0 || min_gens(second) != gens1)
      throw TruncationTooLow(
          "semigroup_from_series: semigroup changed when recomputed at a "
          "deeper truncation");
  }

  // Rebuild through the sieve and cross-check the gap sets.
  NumSemigroup sg = NumSemigroup::from_generators(gens1);
  for (int x = 0; x < std::min(trunc, sg.conductor()); ++x) {
    bool achieved =
        std::binary_search(first.achieved.begin(), first.achieved.end(), x);
    if (achieved != sg.contains(x))
      throw std::logic_error("semigroup_from_series: sieve disagrees with "
                             "elimination at " +
                             std::to_string(x));
  }
  return sg;
}

}  // namespace linksing
