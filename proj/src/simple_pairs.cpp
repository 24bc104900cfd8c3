#include "arq/simple_pairs.hpp"

#include <algorithm>
#include <functional>

namespace arq {

namespace {

int index_in(const std::vector<Root>& roots, const Root& r) {
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (roots[k] == r) return static_cast<int>(k);
  return -1;
}

Root weight(const CartanDatum& d, const std::vector<Root>& roots, const Multiplicity& m) {
  Root w = Root::Zero(d.rank);
  for (std::size_t k = 0; k < m.size(); ++k) w += m[k] * roots[k];
  return w;
}

bool b_less_raw(const Multiplicity& lower, const Multiplicity& upper) {
  std::size_t first = lower.size(), last = 0;
  for (std::size_t t = 0; t < lower.size(); ++t) {
    if (lower[t] == upper[t]) continue;
    if (first == lower.size()) first = t;
    last = t;
  }
  if (first == lower.size()) return false;
  return lower[first] < upper[first] && lower[last] < upper[last];
}

}  // namespace

std::vector<std::pair<Root, Root>> minimal_pairs(const CartanDatum& d, const Word& w,
                                                 const Root& gamma) {
  auto roots = inversion_roots(d, w);
  const int g = index_in(roots, gamma);
  if (g < 0) throw Error(ErrorKind::root_not_in_quiver, "gamma is not an inversion root");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < g; ++a)
    for (int b = g + 1; b < static_cast<int>(roots.size()); ++b)
      if (roots[a] + roots[b] == gamma) pairs.emplace_back(a, b);
  std::vector<std::pair<Root, Root>> out;
  for (auto [a, b] : pairs) {
    bool nested = std::any_of(pairs.begin(), pairs.end(), [&](auto p) {
      return a < p.first && p.second < b;
    });
    if (!nested) out.emplace_back(roots[a], roots[b]);
  }
  return out;
}

bool b_less(const CartanDatum& d, const Word& w, const Multiplicity& lower,
            const Multiplicity& upper) {
  auto roots = inversion_roots(d, w);
  if (lower.size() != roots.size() || upper.size() != roots.size())
    throw Error(ErrorKind::weight_mismatch, "sequences must have one entry per letter");
  if (weight(d, roots, lower) != weight(d, roots, upper))
    throw Error(ErrorKind::weight_mismatch, "sequences have different weights");
  return b_less_raw(lower, upper);
}

namespace {

// Vertex counts of a multiset, by position - 1.
std::vector<int> vertex_counts(const ARQuiver& q, const RootMultiset& m) {
  std::vector<int> counts(q.size(), 0);
  for (const Root& r : m) ++counts[q.position_of(r) - 1];
  return counts;
}

struct ReadingOrders {
  std::vector<std::vector<int>> orders;  // positions in reading order
  explicit ReadingOrders(const ARQuiver& q) {
    for (const Word& w : compatible_readings(q)) orders.push_back(reading_positions(q, w));
  }
  bool below(const std::vector<int>& lower, const std::vector<int>& upper) const {
    Multiplicity a(lower.size()), b(upper.size());
    for (const auto& order : orders) {
      for (std::size_t t = 0; t < order.size(); ++t) {
        a[t] = lower[order[t] - 1];
        b[t] = upper[order[t] - 1];
      }
      if (!b_less_raw(a, b)) return false;
    }
    return true;
  }
};

}  // namespace

bool class_b_less(const CommutationClass& c, const RootMultiset& lower, const RootMultiset& upper) {
  const ARQuiver& q = c.quiver();
  auto lo = vertex_counts(q, lower), up = vertex_counts(q, upper);
  Root wl = Root::Zero(c.datum().rank), wu = Root::Zero(c.datum().rank);
  for (const Root& r : lower) wl += r;
  for (const Root& r : upper) wu += r;
  if (wl != wu) throw Error(ErrorKind::weight_mismatch, "sequences have different weights");
  return ReadingOrders(q).below(lo, up);
}

SimplePairVerdict exhaustive_simple_pair(const CommutationClass& c, const Root& a, const Root& b,
                                         std::size_t budget) {
  const ARQuiver& q = c.quiver();
  const int pa = q.position_of(a), pb = q.position_of(b);
  if (pa == pb) throw Error(ErrorKind::weight_mismatch, "a pair needs two distinct roots");
  ReadingOrders readings(q);
  std::vector<int> upper(q.size(), 0);
  upper[pa - 1] = upper[pb - 1] = 1;

  // Vertices sorted by height so the search prunes early.
  std::vector<int> order(q.size());
  for (int k = 0; k < q.size(); ++k) order[k] = k + 1;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return height(q.at(x).root) > height(q.at(y).root) ||
           (height(q.at(x).root) == height(q.at(y).root) && x < y);
  });

  SimplePairVerdict verdict{true, SimpleReason::exhaustive, std::nullopt};
  std::vector<int> counts(q.size(), 0);
  std::size_t visited = 0;
  std::function<bool(std::size_t, Root)> rec = [&](std::size_t idx, Root rest) -> bool {
    if (rest.isZero()) {
      if (counts == upper) return false;
      if (++visited > budget)
        throw Error(ErrorKind::size_cap, "simple-pair search exceeded its budget");
      if (readings.below(counts, upper)) {
        RootMultiset m;
        for (int k = 1; k <= q.size(); ++k)
          for (int t = 0; t < counts[k - 1]; ++t) m.push_back(q.at(k).root);
        verdict = {false, SimpleReason::exhaustive, m};
        return true;
      }
      return false;
    }
    if (idx == order.size()) return false;
    const Root& r = q.at(order[idx]).root;
    int most = 0;
    for (Root t = rest - r; (t.array() >= 0).all(); t -= r) ++most;
    for (int c = most; c >= 0; --c) {
      counts[order[idx] - 1] = c;
      if (rec(idx + 1, rest - c * r)) return true;
    }
    counts[order[idx] - 1] = 0;
    return false;
  };
  rec(0, a + b);
  return verdict;
}

SimplePairVerdict is_class_simple_pair(const CommutationClass& c, const Root& a, const Root& b,
                                       std::size_t budget) {
  const ARQuiver& q = c.quiver();
  const int pa = q.position_of(a), pb = q.position_of(b);
  if (pa != pb && !q.has_path(pa, pb) && !q.has_path(pb, pa))
    return {true, SimpleReason::incomparable, std::nullopt};
  if (common_sectional_path(q, pa, pb)) return {true, SimpleReason::sectional, std::nullopt};
  return exhaustive_simple_pair(c, a, b, budget);
}

}  // namespace arq
