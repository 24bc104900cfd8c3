#include "arq/orientation.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace arq {

DynkinOrientation::DynkinOrientation(const CartanDatum& d,
                                     const std::vector<std::pair<int, int>>& arrows)
    : rank_(d.rank), edges_(d.edges), forward_(d.edges.size(), 0) {
  std::vector<char> seen(edges_.size(), 0);
  for (auto [s, t] : arrows) {
    auto e = std::minmax(s, t);
    auto it = std::find(edges_.begin(), edges_.end(), std::pair<int, int>(e.first, e.second));
    if (it == edges_.end())
      throw Error(ErrorKind::index_out_of_range, "arrow is not a diagram edge");
    auto k = it - edges_.begin();
    if (seen[k]) throw Error(ErrorKind::parse, "edge oriented twice");
    seen[k] = 1;
    forward_[k] = s < t;
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw Error(ErrorKind::parse, "orientation misses an edge");
}

std::vector<DynkinOrientation> DynkinOrientation::all(const CartanDatum& d) {
  std::vector<DynkinOrientation> out;
  const std::size_t m = d.edges.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<std::pair<int, int>> arrows;
    for (std::size_t k = 0; k < m; ++k) {
      auto [a, b] = d.edges[k];
      arrows.push_back(mask >> k & 1 ? std::pair{a, b} : std::pair{b, a});
    }
    out.emplace_back(d, arrows);
  }
  return out;
}

std::vector<std::pair<int, int>> DynkinOrientation::arrows() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    auto [a, b] = edges_[k];
    out.push_back(forward_[k] ? std::pair{a, b} : std::pair{b, a});
  }
  return out;
}

bool DynkinOrientation::points(int src, int dst) const {
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    auto [a, b] = edges_[k];
    if (a == src && b == dst) return forward_[k];
    if (b == src && a == dst) return !forward_[k];
  }
  return false;
}

bool DynkinOrientation::is_sink(int i) const {
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    auto [a, b] = edges_[k];
    if ((a == i && forward_[k]) || (b == i && !forward_[k])) return false;
  }
  return true;
}

bool DynkinOrientation::is_source(int i) const {
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    auto [a, b] = edges_[k];
    if ((a == i && !forward_[k]) || (b == i && forward_[k])) return false;
  }
  return true;
}

DynkinOrientation DynkinOrientation::reflected(int i) const {
  DynkinOrientation out = *this;
  for (std::size_t k = 0; k < edges_.size(); ++k)
    if (edges_[k].first == i || edges_[k].second == i) out.forward_[k] ^= 1;
  return out;
}

std::string DynkinOrientation::to_string() const {
  std::string s;
  for (auto [a, b] : arrows()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(a) + "->" + std::to_string(b);
  }
  return s;
}

bool is_adapted_to(const CartanDatum& d, const Word& w, const DynkinOrientation& q) {
  check_word(d, w);
  DynkinOrientation cur = q;
  for (int c : w) {
    if (!cur.is_sink(c)) return false;
    cur = cur.reflected(c);
  }
  return true;
}

std::optional<DynkinOrientation> is_adapted(const CartanDatum& d, const Word& w) {
  check_word(d, w);
  std::vector<int> first(d.rank + 1, 0);
  for (int k = static_cast<int>(w.size()); k >= 1; --k) first[w[k - 1]] = k;
  std::vector<std::pair<int, int>> arrows;
  for (auto [a, b] : d.edges) {
    int fa = first[a] ? first[a] : INT32_MAX;
    int fb = first[b] ? first[b] : INT32_MAX;
    // The letter used first must be a sink at that time.
    arrows.push_back(fa <= fb ? std::pair{b, a} : std::pair{a, b});
  }
  DynkinOrientation q(d, arrows);
  if (!is_adapted_to(d, w, q)) return std::nullopt;
  return q;
}

Word adapted_word(const CartanDatum& d, const DynkinOrientation& q) {
  Word w;
  DynkinOrientation cur = q;
  IntMatrix m = IntMatrix::Identity(d.rank, d.rank);
  while (w.size() < d.positive.size()) {
    int pick = 0;
    for (int i = 1; i <= d.rank && !pick; ++i)
      if (cur.is_sink(i) && is_positive(m.col(i - 1))) pick = i;
    if (!pick) throw Error(ErrorKind::not_adapted, "no admissible sink");
    w.push_back(pick);
    m = m * d.reflections[pick - 1];
    cur = cur.reflected(pick);
  }
  return w;
}

std::vector<int> height_function(const CartanDatum& d, const DynkinOrientation& q) {
  std::vector<int> xi(d.rank, 0);
  std::vector<char> set(d.rank, 0);
  std::deque<int> queue{1};
  set[0] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : d.adjacent[u - 1]) {
      if (set[v - 1]) continue;
      xi[v - 1] = xi[u - 1] + (q.points(u, v) ? 1 : -1);
      set[v - 1] = 1;
      queue.push_back(v);
    }
  }
  int top = *std::max_element(xi.begin(), xi.end());
  for (int& x : xi) x -= top;
  return xi;
}

namespace {

// Path between i and j in the diagram, i first.
std::vector<int> diagram_path(const CartanDatum& d, int i, int j) {
  std::vector<int> path{i};
  while (path.back() != j) {
    int u = path.back();
    for (int v : d.adjacent[u - 1]) {
      if (d.diagram_distance(v, j) < d.diagram_distance(u, j)) {
        path.push_back(v);
        break;
      }
    }
  }
  return path;
}

}  // namespace

GammaQ gamma_q(DatumRef dref, const DynkinOrientation& q) {
  const CartanDatum& d = *dref;
  if (!d.simply_laced())
    throw Error(ErrorKind::invalid_type, "Gamma_Q needs a simply-laced type");
  const int n = d.rank;
  const int h = coxeter_number(d);

  std::vector<int> r(n);
  for (int i = 1; i <= n; ++i) {
    auto path = diagram_path(d, i, d.star_of(i));
    int towards_i = 0, towards_star = 0;
    for (std::size_t t = 0; t + 1 < path.size(); ++t) {
      if (q.points(path[t + 1], path[t])) ++towards_i;
      else ++towards_star;
    }
    r[i - 1] = (h + towards_i - towards_star) / 2;
  }

  // gamma_i: sum of alpha_j over j reachable from i in Q.
  std::vector<Root> gamma(n, Root::Zero(n));
  for (int i = 1; i <= n; ++i) {
    std::vector<char> seen(n, 0);
    std::deque<int> queue{i};
    seen[i - 1] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      gamma[i - 1][u - 1] = 1;
      for (int v : d.adjacent[u - 1])
        if (q.points(u, v) && !seen[v - 1]) {
          seen[v - 1] = 1;
          queue.push_back(v);
        }
    }
  }

  // Coxeter element from a sink-first ordering of Q.
  IntMatrix phi = IntMatrix::Identity(n, n);
  {
    DynkinOrientation cur = q;
    std::vector<char> used(n, 0);
    for (int step = 0; step < n; ++step) {
      int pick = 0;
      for (int i = 1; i <= n && !pick; ++i)
        if (!used[i - 1] && cur.is_sink(i)) pick = i;
      used[pick - 1] = 1;
      phi = phi * d.reflections[pick - 1];
      cur = cur.reflected(pick);
    }
  }

  // A(Q) vertices (i, m) and their labels.
  std::map<std::pair<int, int>, Root> label;
  for (int i = 1; i <= n; ++i) {
    Root cur = gamma[i - 1];
    for (int m = 1; m <= r[i - 1]; ++m) {
      label[{i, m}] = cur;
      cur = phi * cur;
    }
  }

  // Arrows of NQ restricted to A(Q): for i -> j in Q, (i,m) -> (j,m) and
  // (j,m) -> (i,m-1).
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> out;
  auto add = [&](std::pair<int, int> s, std::pair<int, int> t) {
    if (label.count(s) && label.count(t)) out[s].push_back(t);
  };
  for (auto [i, j] : q.arrows()) {
    for (int m = 1; m <= std::max(r[i - 1], r[j - 1]) + 1; ++m) {
      add({i, m}, {j, m});
      add({j, m}, {i, m - 1});
    }
  }

  // Sink-first reading of A(Q), smallest residue first.
  std::map<std::pair<int, int>, int> pending;
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> in;
  for (auto& [v, l] : label) pending[v] = 0;
  for (auto& [s, ts] : out) {
    pending[s] = static_cast<int>(ts.size());
    for (auto t : ts) in[t].push_back(s);
  }
  std::map<std::pair<int, int>, int> position;
  Word word;
  std::vector<std::pair<int, int>> order;
  while (order.size() < label.size()) {
    std::pair<int, int> pick{0, 0};
    for (auto& [v, p] : pending)
      if (p == 0 && !position.count(v)) {
        pick = v;
        break;
      }
    if (pick.first == 0) throw Error(ErrorKind::not_adapted, "A(Q) has a cycle");
    position[pick] = static_cast<int>(order.size()) + 1;
    order.push_back(pick);
    word.push_back(pick.first);
    for (auto s : in[pick]) --pending[s];
  }

  auto xi = height_function(d, q);
  std::vector<Vertex> vertices;
  GammaQ g{ARQuiver(dref, {}, {}, {}), {}, {}, r, xi};
  for (std::size_t k = 0; k < order.size(); ++k) {
    auto [i, m] = order[k];
    vertices.push_back({static_cast<int>(k + 1), i, label[order[k]]});
    g.a_coords.emplace_back(i, m);
    g.b_coords.emplace_back(i, xi[i - 1] - 2 * (m - 1));
  }
  std::vector<Arrow> arrows;
  for (auto& [s, ts] : out)
    for (auto t : ts) arrows.push_back({position[s], position[t], -d.form(s.first, t.first)});
  g.quiver = ARQuiver(dref, word, std::move(vertices), std::move(arrows));
  return g;
}

}  // namespace arq
