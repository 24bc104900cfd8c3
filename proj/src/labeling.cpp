#include "arq/labeling.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace arq {

bool shares_component(const CartanDatum& d, const Root& a, const Root& b) {
  Eigen::VectorXi ea = epsilon_coordinates(d, a), eb = epsilon_coordinates(d, b);
  for (Eigen::Index k = 0; k < ea.size(); ++k)
    if (static_cast<long>(ea[k]) * eb[k] > 0) return true;
  return false;
}

bool verify_sectional_components(const ARQuiver& q) {
  for (const auto& path : sectional_paths(q))
    for (std::size_t s = 0; s < path.size(); ++s)
      for (std::size_t t = s + 1; t < path.size(); ++t)
        if (!shares_component(q.datum(), q.at(path[s]).root, q.at(path[t]).root)) return false;
  return true;
}

std::pair<int, int> interval_of(const Root& r) {
  int a = 0, b = 0;
  for (int i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    if (r[i] != 1 || (a && b != i)) return {0, 0};
    if (!a) a = i + 1;
    b = i + 1;
  }
  return {a, b};
}

Root interval_root(int rank, int a, int b) {
  Root r = Root::Zero(rank);
  for (int i = a; i <= b; ++i) r[i - 1] = 1;
  return r;
}

std::vector<EndRule> type_a_end_rules(const ARQuiver& q) {
  if (q.datum().family != Family::A)
    throw Error(ErrorKind::invalid_type, "end rules are for type A");
  std::vector<EndRule> out;
  for (auto& path : sectional_paths(q)) {
    EndRule rule{path, SectionalKind::north, std::nullopt};
    if (q.at(path[1]).residue > q.at(path[0]).residue) rule.kind = SectionalKind::south;
    std::set<int> ends;
    for (int p : path) {
      auto [a, b] = interval_of(q.at(p).root);
      ends.insert(rule.kind == SectionalKind::north ? a : b);
    }
    if (ends.size() == 1) rule.shared_end = *ends.begin();
    out.push_back(std::move(rule));
  }
  return out;
}

ResidueSkeleton forget_labels(const ARQuiver& q, const std::vector<int>& keep) {
  ResidueSkeleton s{q.datum_ref(), q.word(), std::vector<std::optional<Root>>(q.size())};
  for (int p : keep) s.labels.at(p - 1) = q.at(p).root;
  return s;
}

std::vector<int> seed_positions(const ARQuiver& q) {
  std::vector<int> out;
  for (int k = 1; k <= q.size(); ++k)
    if (q.targets(k).empty() || q.sources(k).empty()) out.push_back(k);
  return out;
}

namespace {

using Candidates = std::vector<std::vector<char>>;  // [vertex][universe index]

struct Solver {
  const CartanDatum& d;
  const ARQuiver& shape;
  std::vector<Root> universe;
  Candidates cand;
  std::vector<std::vector<int>> paths;
  std::vector<std::vector<char>> share;  // shares_component on the universe

  void prepare() {
    const std::size_t u = universe.size();
    share.assign(u, std::vector<char>(u, 0));
    if (d.family == Family::A) return;
    for (std::size_t x = 0; x < u; ++x)
      for (std::size_t y = 0; y < u; ++y) share[x][y] = shares_component(d, universe[x], universe[y]);
  }

  int count(int v) const { return static_cast<int>(std::count(cand[v].begin(), cand[v].end(), 1)); }
  int single(int v) const {
    return static_cast<int>(std::find(cand[v].begin(), cand[v].end(), 1) - cand[v].begin());
  }

  void fail() const {
    throw Error(ErrorKind::inconsistent_labels, "labels admit no consistent completion");
  }

  // One round of sectional rules; returns true if anything was pruned.
  bool sectional_round() {
    bool changed = false;
    const int u = static_cast<int>(universe.size());
    if (d.family == Family::A) {
      for (auto& path : paths) {
        bool north = shape.at(path[1]).residue < shape.at(path[0]).residue;
        auto end_of = [&](int x) {
          auto [a, b] = interval_of(universe[x]);
          return north ? a : b;
        };
        std::set<int> allowed;
        for (int x = 0; x < u; ++x)
          if (cand[path[0] - 1][x]) allowed.insert(end_of(x));
        for (std::size_t t = 1; t < path.size(); ++t) {
          std::set<int> here, both;
          for (int x = 0; x < u; ++x)
            if (cand[path[t] - 1][x]) here.insert(end_of(x));
          std::set_intersection(allowed.begin(), allowed.end(), here.begin(), here.end(),
                                std::inserter(both, both.begin()));
          allowed = both;
        }
        for (int p : path)
          for (int x = 0; x < u; ++x)
            if (cand[p - 1][x] && !allowed.count(end_of(x))) {
              cand[p - 1][x] = 0;
              changed = true;
            }
      }
    } else {
      for (auto& path : paths)
        for (int a : path)
          for (int b : path) {
            if (a == b) continue;
            for (int x = 0; x < u; ++x) {
              if (!cand[a - 1][x]) continue;
              bool support = false;
              for (int y = 0; y < u && !support; ++y)
                support = cand[b - 1][y] && y != x && share[x][y];
              if (!support) {
                cand[a - 1][x] = 0;
                changed = true;
              }
            }
          }
    }
    return changed;
  }

  void check_nonempty() {
    for (int v = 0; v < shape.size(); ++v)
      if (count(v) == 0) fail();
  }

  bool naked_singles() {
    bool changed = false;
    for (int v = 0; v < shape.size(); ++v) {
      if (count(v) == 0) fail();
      if (count(v) != 1) continue;
      int x = single(v);
      for (int w = 0; w < shape.size(); ++w)
        if (w != v && cand[w][x]) {
          cand[w][x] = 0;
          changed = true;
        }
    }
    return changed;
  }

  bool hidden_singles() {
    bool changed = false;
    for (std::size_t x = 0; x < universe.size(); ++x) {
      int where = -1, n = 0;
      for (int v = 0; v < shape.size(); ++v)
        if (cand[v][x]) {
          where = v;
          ++n;
        }
      if (n == 0) fail();
      if (n == 1 && count(where) > 1) {
        std::fill(cand[where].begin(), cand[where].end(), 0);
        cand[where][x] = 1;
        changed = true;
      }
    }
    return changed;
  }

  std::vector<int> fixed() const {
    std::vector<int> out;
    for (int v = 0; v < shape.size(); ++v)
      if (count(v) == 1) out.push_back(v + 1);
    return out;
  }
};

// Rational row echelon basis of a growing set of roots.
class Span {
 public:
  bool contains(const Root& r) const { return reduce(r).empty(); }
  void add(const Root& r) {
    auto v = reduce(r);
    if (v.empty()) return;
    int p = 0;
    while (v[p] == Pairing(0)) ++p;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
  }

 private:
  // Empty when r lies in the span.
  std::vector<Pairing> reduce(const Root& r) const {
    std::vector<Pairing> v(r.data(), r.data() + r.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      Pairing f = v[pivots_[k]] / rows_[k][pivots_[k]];
      if (f == Pairing(0)) continue;
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * rows_[k][c];
    }
    for (const Pairing& x : v)
      if (x != Pairing(0)) return v;
    return {};
  }
  std::vector<std::vector<Pairing>> rows_;
  std::vector<int> pivots_;
};

}  // namespace

LabelInference infer_labels(const ResidueSkeleton& s) {
  const CartanDatum& d = *s.datum;
  check_word(d, s.word);
  const int n = static_cast<int>(s.word.size());
  if (static_cast<int>(s.labels.size()) != n)
    throw Error(ErrorKind::malformed_word, "one label slot per letter is required");

  auto check_known = [&](const ARQuiver& q) {
    for (int k = 0; k < n; ++k)
      if (s.labels[k] && !(*s.labels[k] == q.at(k + 1).root))
        throw Error(ErrorKind::inconsistent_labels, "known label contradicts the word");
  };
  if (d.family == Family::E || d.family == Family::F || d.family == Family::G) {
    if (!is_reduced(d, s.word))
      throw Error(ErrorKind::inconsistent_labels, "skeleton word is not reduced");
    ARQuiver q = build_upsilon(s.datum, s.word);
    check_known(q);
    return {q, {}, {}, {}, true};
  }

  std::vector<Vertex> blank;
  for (int k = 0; k < n; ++k) blank.push_back({k + 1, s.word[k], Root::Zero(d.rank)});
  ARQuiver shape(s.datum, s.word, blank, residue_arrows(d, s.word));

  Solver sv{d, shape, inversion_set(d, evaluate(d, s.word)), {}, sectional_paths(shape)};
  sv.prepare();
  const int u = static_cast<int>(sv.universe.size());
  if (u != n) throw Error(ErrorKind::inconsistent_labels, "skeleton word is not reduced");
  sv.cand.assign(n, std::vector<char>(u, 1));
  std::vector<char> seeded(n, 0);
  for (int k = 0; k < n; ++k) {
    if (!s.labels[k]) continue;
    auto it = std::find(sv.universe.begin(), sv.universe.end(), *s.labels[k]);
    if (it == sv.universe.end())
      throw Error(ErrorKind::inconsistent_labels, "known label is not an inversion root");
    std::fill(sv.cand[k].begin(), sv.cand[k].end(), 0);
    sv.cand[k][it - sv.universe.begin()] = 1;
    seeded[k] = 1;
  }

  auto newly = [&](std::vector<int>& into, const std::vector<char>& before) {
    for (int p : sv.fixed())
      if (!before[p - 1]) into.push_back(p);
  };
  auto fixed_mask = [&]() {
    std::vector<char> m(n, 0);
    for (int p : sv.fixed()) m[p - 1] = 1;
    return m;
  };

  LabelInference result{shape, {}, {}, {}, false};
  auto before = seeded;
  while (sv.sectional_round()) {
  }
  sv.check_nonempty();
  newly(result.by_propagation, before);
  before = fixed_mask();
  while (sv.sectional_round() | sv.naked_singles() | sv.hidden_singles()) {
  }
  newly(result.by_completion, before);
  before = fixed_mask();

  // Pairwise constraints that hold in every such quiver: arrows pair to
  // their color, unrelated vertices are orthogonal, sectional pairs
  // follow the product formula.
  std::vector<std::vector<std::optional<Pairing>>> rel(n, std::vector<std::optional<Pairing>>(n));
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      std::optional<Pairing> v;
      if (auto c = shape.color(b, a)) v = *c;
      else if (!shape.has_path(b, a)) v = Pairing(0);
      else v = sectional_product(shape, a, b);
      rel[a - 1][b - 1] = rel[b - 1][a - 1] = v;
    }
  // Neighbouring letters k < k' of residue i satisfy
  // beta_k + beta_k' + sum of a_{j i} beta_t = 0 over letters t between them
  // with residue j adjacent to i.
  std::vector<std::vector<std::pair<int, int>>> meshes;
  for (int k = 0; k < n; ++k) {
    const int i = s.word[k];
    std::vector<std::pair<int, int>> terms{{k, 1}};
    for (int t = k + 1; t < n; ++t) {
      if (s.word[t] == i) {
        terms.emplace_back(t, 1);
        meshes.push_back(std::move(terms));
        break;
      }
      if (int a = d.cartan(s.word[t] - 1, i - 1); a != 0) terms.emplace_back(t, a);
    }
  }
  std::map<std::uint64_t, int> index_of;
  for (int x = 0; x < u; ++x) index_of[root_key(sv.universe[x])] = x;

  std::vector<int> assign(n, -1);
  std::vector<char> used(u, 0);
  std::vector<int> solution;
  int solutions = 0;
  auto consistent = [&](int v, int x) {
    if (!sv.cand[v][x] || used[x]) return false;
    for (int w = 0; w < n; ++w)
      if (assign[w] >= 0 && rel[v][w] && pairing(d, sv.universe[x], sv.universe[assign[w]]) != *rel[v][w])
        return false;
    return true;
  };
  std::function<void()> search = [&]() {
    if (solutions > 1) return;
    // A mesh with one unknown forces it; a complete mesh must balance.
    for (const auto& mesh : meshes) {
      Root sum = Root::Zero(d.rank);
      int unknown = -1, coeff = 0, missing = 0;
      for (auto [t, c] : mesh) {
        if (assign[t] >= 0) sum += c * sv.universe[assign[t]];
        else if (++missing == 1) unknown = t, coeff = c;
      }
      if (missing == 0 && !sum.isZero()) return;
      if (missing != 1) continue;
      if ((sum.array().unaryExpr([&](int v) { return v % coeff; }) != 0).any()) return;
      Root value = -sum / coeff;
      auto it = index_of.find(root_key(value));
      if (it == index_of.end() || !consistent(unknown, it->second)) return;
      assign[unknown] = it->second;
      used[it->second] = 1;
      search();
      used[it->second] = 0;
      assign[unknown] = -1;
      return;
    }
    int best = -1, best_count = u + 1;
    for (int v = 0; v < n; ++v) {
      if (assign[v] >= 0) continue;
      int c = 0;
      for (int x = 0; x < u; ++x) c += sv.cand[v][x] && !used[x];
      if (c < best_count) {
        best = v;
        best_count = c;
      }
    }
    if (best < 0) {
      // Each label differs from its simple root by earlier labels.
      Span prefix;
      for (int v = 0; v < n; ++v) {
        const Root& beta = sv.universe[assign[v]];
        if (!prefix.contains(d.simple(s.word[v]) - beta)) return;
        prefix.add(beta);
      }
      if (++solutions == 1) solution = assign;
      return;
    }
    for (int x = 0; x < u; ++x) {
      if (!consistent(best, x)) continue;
      assign[best] = x;
      used[x] = 1;
      search();
      used[x] = 0;
      assign[best] = -1;
    }
  };
  search();
  if (solutions == 0) sv.fail();
  if (solutions > 1)
    throw Error(ErrorKind::ambiguous_labels, "labels admit more than one completion");
  for (int v = 0; v < n; ++v)
    if (!before[v]) result.by_search.push_back(v + 1);

  std::vector<Vertex> vertices;
  for (int k = 0; k < n; ++k) vertices.push_back({k + 1, s.word[k], sv.universe[solution[k]]});
  result.quiver = ARQuiver(s.datum, s.word, vertices, residue_arrows(d, s.word));
  return result;
}

std::vector<std::pair<int, int>> simple_root_positions(const CartanDatum& d,
                                                       const DynkinOrientation& q) {
  if (d.family != Family::A) throw Error(ErrorKind::invalid_type, "positions are for type A");
  const int n = d.rank;
  auto xi = height_function(d, q);
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= n; ++k) {
    const int x = xi[k - 1];
    if (q.is_sink(k)) out.emplace_back(k, x);
    else if (q.is_source(k)) out.emplace_back(n + 1 - k, x - n + 1);
    else if (q.points(k + 1, k)) out.emplace_back(1, x - k + 1);  // k-1 <- k <- k+1
    else out.emplace_back(n, x - n + k);                          // k-1 -> k -> k+1
  }
  return out;
}

}  // namespace arq
