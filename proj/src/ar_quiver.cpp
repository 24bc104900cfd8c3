#include "arq/ar_quiver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <string>

namespace arq {

bool CanonicalForm::operator<(const CanonicalForm& o) const {
  return std::tie(roots, residues, arrows) < std::tie(o.roots, o.residues, o.arrows);
}

namespace {

CanonicalForm make_canonical(const std::vector<std::uint64_t>& keys,
                             const std::vector<int>& residues,
                             const std::vector<Arrow>& arrows) {
  const int n = static_cast<int>(keys.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<int> rank(n);
  CanonicalForm out;
  out.roots.reserve(n);
  out.residues.reserve(n);
  for (int r = 0; r < n; ++r) {
    rank[perm[r]] = r;
    out.roots.push_back(keys[perm[r]]);
    out.residues.push_back(residues[perm[r]]);
  }
  out.arrows.reserve(arrows.size());
  for (const Arrow& a : arrows) out.arrows.emplace_back(rank[a.src - 1], rank[a.dst - 1]);
  std::sort(out.arrows.begin(), out.arrows.end());
  return out;
}

}  // namespace

ARQuiver::ARQuiver(DatumRef datum, Word word, std::vector<Vertex> vertices,
                   std::vector<Arrow> arrows)
    : datum_(std::move(datum)),
      word_(std::move(word)),
      vertices_(std::move(vertices)),
      arrows_(std::move(arrows)) {
  index();
}

void ARQuiver::index() {
  const int n = size();
  if (static_cast<int>(word_.size()) != n)
    throw Error(ErrorKind::malformed_word, "word length differs from vertex count");
  for (int k = 0; k < n; ++k) {
    if (vertices_[k].position != k + 1 || vertices_[k].residue != word_[k])
      throw Error(ErrorKind::malformed_word, "vertices must follow the word");
  }
  std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& a, const Arrow& b) {
    return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
  });
  out_.assign(n, {});
  in_.assign(n, {});
  for (const Arrow& a : arrows_) {
    if (a.src <= a.dst || a.dst < 1 || a.src > n)
      throw Error(ErrorKind::malformed_word, "arrows must decrease positions");
    out_[a.src - 1].push_back(a.dst);
    in_[a.dst - 1].push_back(a.src);
  }
  reach_.assign(n, boost::dynamic_bitset<>(n));
  for (int k = 0; k < n; ++k) {
    reach_[k].set(k);
    for (int t : out_[k]) reach_[k] |= reach_[t - 1];
  }
  dist_.assign(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::deque<int> queue{s};
    dist_[s][s] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int t : out_[u]) {
        if (dist_[s][t - 1] < 0) {
          dist_[s][t - 1] = dist_[s][u] + 1;
          queue.push_back(t - 1);
        }
      }
    }
  }
}

std::optional<int> ARQuiver::find(const Root& r) const {
  for (const Vertex& v : vertices_)
    if (v.root.size() == r.size() && v.root == r) return v.position;
  return std::nullopt;
}

int ARQuiver::position_of(const Root& r) const {
  auto p = find(r);
  if (!p) throw Error(ErrorKind::root_not_in_quiver, "root is not a vertex of the quiver");
  return *p;
}

std::optional<Pairing> ARQuiver::color(int src, int dst) const {
  for (const Arrow& a : arrows_)
    if (a.src == src && a.dst == dst) return a.color;
  return std::nullopt;
}

bool ARQuiver::has_path(int from, int to) const { return reach_[from - 1].test(to - 1); }

int ARQuiver::distance(int a, int b) const {
  int d = dist_[a - 1][b - 1];
  return d >= 0 ? d : dist_[b - 1][a - 1];
}

CanonicalForm ARQuiver::canonical_form() const {
  std::vector<std::uint64_t> keys;
  std::vector<int> residues;
  for (const Vertex& v : vertices_) {
    keys.push_back(root_key(v.root));
    residues.push_back(v.residue);
  }
  return make_canonical(keys, residues, arrows_);
}

std::vector<Arrow> residue_arrows(const CartanDatum& d, const Word& w) {
  check_word(d, w);
  std::vector<int> last(d.rank + 1, 0);  // last position of each residue so far
  std::vector<Arrow> arrows;
  for (int k = 1; k <= static_cast<int>(w.size()); ++k) {
    int i = w[k - 1];
    for (int r : d.adjacent[i - 1]) {
      int j = last[r];
      if (j > 0 && last[i] < j) arrows.push_back({k, j, -d.form(i, r)});
    }
    last[i] = k;
  }
  return arrows;
}

ARQuiver build_upsilon(DatumRef d, const Word& w) {
  auto roots = inversion_roots(*d, w);
  std::vector<Vertex> vertices;
  vertices.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k)
    vertices.push_back({static_cast<int>(k + 1), w[k], roots[k]});
  auto arrows = residue_arrows(*d, w);
  return ARQuiver(std::move(d), w, std::move(vertices), std::move(arrows));
}

CanonicalForm canonical_key(const CartanDatum& d, const Word& w) {
  auto roots = inversion_roots(d, w);
  std::vector<std::uint64_t> keys;
  keys.reserve(roots.size());
  for (const Root& r : roots) keys.push_back(root_key(r));
  return make_canonical(keys, w, residue_arrows(d, w));
}

bool quivers_equal(const ARQuiver& a, const ARQuiver& b) {
  return a.datum().family == b.datum().family && a.datum().rank == b.datum().rank &&
         a.canonical_form() == b.canonical_form();
}

bool convex_leq(const ARQuiver& q, const Root& a, const Root& b) {
  return q.has_path(q.position_of(b), q.position_of(a));
}

bool comparable(const ARQuiver& q, const Root& a, const Root& b) {
  return convex_leq(q, a, b) || convex_leq(q, b, a);
}

std::vector<int> level_function(const ARQuiver& q) {
  std::vector<int> level(q.size(), 1);
  for (int k = 1; k <= q.size(); ++k)
    for (int t : q.targets(k)) level[k - 1] = std::max(level[k - 1], level[t - 1] + 1);
  return level;
}

namespace {

// Vertices whose targets have all been read, in residue order.
struct ReadingState {
  const ARQuiver& q;
  std::vector<int> pending;  // unread targets per vertex
  std::vector<char> read;

  explicit ReadingState(const ARQuiver& quiver)
      : q(quiver), pending(quiver.size()), read(quiver.size(), 0) {
    for (int k = 1; k <= q.size(); ++k)
      pending[k - 1] = static_cast<int>(q.targets(k).size());
  }
  std::vector<int> available() const {
    std::vector<int> out;
    for (int k = 1; k <= q.size(); ++k)
      if (!read[k - 1] && pending[k - 1] == 0) out.push_back(k);
    std::sort(out.begin(), out.end(), [&](int a, int b) {
      return q.at(a).residue < q.at(b).residue;
    });
    return out;
  }
  void take(int k) {
    read[k - 1] = 1;
    for (int s : q.sources(k)) --pending[s - 1];
  }
  void undo(int k) {
    read[k - 1] = 0;
    for (int s : q.sources(k)) ++pending[s - 1];
  }
};

}  // namespace

std::vector<Word> compatible_readings(const ARQuiver& q, std::size_t cap) {
  ReadingState st(q);
  std::vector<Word> out;
  Word cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == q.size()) {
      if (out.size() >= cap)
        throw Error(ErrorKind::size_cap,
                    "more than " + std::to_string(cap) + " compatible readings");
      out.push_back(cur);
      return;
    }
    for (int k : st.available()) {
      st.take(k);
      cur.push_back(q.at(k).residue);
      rec();
      cur.pop_back();
      st.undo(k);
    }
  };
  rec();
  return out;
}

std::uint64_t count_readings(const ARQuiver& q) {
  ReadingState st(q);
  std::map<boost::dynamic_bitset<>, std::uint64_t> memo;
  boost::dynamic_bitset<> done(q.size());
  std::function<std::uint64_t()> rec = [&]() -> std::uint64_t {
    if (static_cast<int>(done.count()) == q.size()) return 1;
    auto it = memo.find(done);
    if (it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (int k : st.available()) {
      st.take(k);
      done.set(k - 1);
      total += rec();
      done.reset(k - 1);
      st.undo(k);
    }
    memo.emplace(done, total);
    return total;
  };
  return rec();
}

namespace {

Word greedy_reading(const ARQuiver& q, int first, int last) {
  ReadingState st(q);
  Word out;
  if (first > 0) {
    st.take(first);
    out.push_back(q.at(first).residue);
  }
  while (static_cast<int>(out.size()) < q.size() - (last > 0 ? 1 : 0)) {
    auto avail = st.available();
    auto it = std::find_if(avail.begin(), avail.end(), [&](int k) { return k != last; });
    st.take(*it);
    out.push_back(q.at(*it).residue);
  }
  if (last > 0) out.push_back(q.at(last).residue);
  return out;
}

}  // namespace

Word least_reading(const ARQuiver& q) { return greedy_reading(q, 0, 0); }

std::optional<Word> reading_starting_with(const ARQuiver& q, int residue) {
  for (int k = 1; k <= q.size(); ++k)
    if (q.at(k).residue == residue && q.targets(k).empty()) return greedy_reading(q, k, 0);
  return std::nullopt;
}

std::optional<Word> reading_ending_with(const ARQuiver& q, int residue) {
  for (int k = 1; k <= q.size(); ++k)
    if (q.at(k).residue == residue && q.sources(k).empty()) return greedy_reading(q, 0, k);
  return std::nullopt;
}

std::vector<int> reading_positions(const ARQuiver& q, const Word& reading) {
  if (static_cast<int>(reading.size()) != q.size())
    throw Error(ErrorKind::malformed_word, "reading has the wrong length");
  ReadingState st(q);
  std::vector<int> out;
  for (int r : reading) {
    auto avail = st.available();
    auto it = std::find_if(avail.begin(), avail.end(), [&](int k) { return q.at(k).residue == r; });
    if (it == avail.end())
      throw Error(ErrorKind::malformed_word, "word is not a compatible reading");
    st.take(*it);
    out.push_back(*it);
  }
  return out;
}

namespace {

bool extends_sectionally(const ARQuiver& q, const std::vector<int>& path, int v) {
  const auto& d = q.datum();
  for (int u : path)
    if (u == v || q.distance(u, v) != d.diagram_distance(q.at(u).residue, q.at(v).residue))
      return false;
  return true;
}

}  // namespace

bool is_sectional(const ARQuiver& q, std::span<const int> path) {
  if (path.empty()) return false;
  std::vector<int> prefix;
  for (std::size_t t = 0; t < path.size(); ++t) {
    int v = path[t];
    if (v < 1 || v > q.size()) return false;
    if (t > 0) {
      auto tg = q.targets(prefix.back());
      if (std::find(tg.begin(), tg.end(), v) == tg.end()) return false;
      if (!extends_sectionally(q, prefix, v)) return false;
    }
    prefix.push_back(v);
  }
  return true;
}

std::vector<std::vector<int>> sectional_paths(const ARQuiver& q) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::function<void()> rec = [&]() {
    bool extended = false;
    for (int t : q.targets(path.back())) {
      if (!extends_sectionally(q, path, t)) continue;
      extended = true;
      path.push_back(t);
      rec();
      path.pop_back();
    }
    if (extended || path.size() < 2) return;
    for (int s : q.sources(path.front()))
      if (extends_sectionally(q, path, s)) return;
    out.push_back(path);
  };
  for (int k = 1; k <= q.size(); ++k) {
    path = {k};
    rec();
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<int>> common_sectional_path(const ARQuiver& q, int a, int b) {
  if (a == b) return std::nullopt;
  for (auto [from, to] : {std::pair{a, b}, std::pair{b, a}}) {
    if (!q.has_path(from, to)) continue;
    std::vector<int> path{from};
    std::function<bool()> rec = [&]() {
      if (path.back() == to) return true;
      for (int t : q.targets(path.back())) {
        if (!q.has_path(t, to) || !extends_sectionally(q, path, t)) continue;
        path.push_back(t);
        if (rec()) return true;
        path.pop_back();
      }
      return false;
    };
    if (rec()) return path;
  }
  return std::nullopt;
}

std::optional<Pairing> sectional_product(const ARQuiver& q, int a, int b) {
  auto path = common_sectional_path(q, a, b);
  if (!path) return std::nullopt;
  const bool f4 = q.datum().family == Family::F;
  Pairing value(1);
  for (std::size_t t = 0; t + 1 < path->size(); ++t) {
    value *= *q.color((*path)[t], (*path)[t + 1]);
    if (f4 && t > 0 && q.at((*path)[t]).residue == 3) value *= Pairing(2);
  }
  return value;
}

Pairing sectional_pairing(const ARQuiver& q, const Root& a, const Root& b) {
  auto v = sectional_product(q, q.position_of(a), q.position_of(b));
  if (!v) throw Error(ErrorKind::not_sectional, "roots are not on a common sectional path");
  return *v;
}

}  // namespace arq
