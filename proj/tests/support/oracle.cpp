#include "oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace oracle {

namespace {

bool lex_less(const Root& a, const Root& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

struct RootOrder {
  bool operator()(const Root& a, const Root& b) const { return lex_less(a, b); }
};

void link(Eigen::MatrixXi& f, int i, int j, int v) {
  f(i - 1, j - 1) = v;
  f(j - 1, i - 1) = v;
}

}  // namespace

Eigen::MatrixXi epsilon_basis(Family family, int rank) {
  const int n = rank;
  const int dim = family == Family::A ? n + 1 : n;
  Eigen::MatrixXi b = Eigen::MatrixXi::Zero(dim, n);
  for (int i = 0; i + 1 < n; ++i) {
    b(i, i) = 1;
    b(i + 1, i) = -1;
  }
  switch (family) {
    case Family::A:
      b(n - 1, n - 1) = 1;
      b(n, n - 1) = -1;
      break;
    case Family::B:
      b(n - 1, n - 1) = 1;
      break;
    case Family::C:
      b(n - 1, n - 1) = 2;
      break;
    case Family::D:
      b(n - 2, n - 1) = 1;
      b(n - 1, n - 1) = 1;
      break;
    default:
      throw std::invalid_argument("not a classical type");
  }
  return b;
}

Eigen::MatrixXi form2(Family family, int rank) {
  Eigen::MatrixXi f = Eigen::MatrixXi::Zero(rank, rank);
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D: {
      Eigen::MatrixXi b = epsilon_basis(family, rank);
      return 2 * b.transpose() * b;
    }
    case Family::E:
      for (int i = 1; i <= rank; ++i) f(i - 1, i - 1) = 4;
      link(f, 1, 3, -2);
      link(f, 2, 4, -2);
      for (int i = 3; i < rank; ++i) link(f, i, i + 1, -2);
      return f;
    case Family::F:
      f.diagonal() << 4, 4, 2, 2;
      link(f, 1, 2, -2);
      link(f, 2, 3, -2);
      link(f, 3, 4, -1);
      return f;
    case Family::G:
      f.diagonal() << 12, 4;
      link(f, 1, 2, -6);
      return f;
  }
  return f;
}

System::System(Family family_, int rank_)
    : family(family_), rank(rank_), form2(oracle::form2(family_, rank_)) {
  braid.assign(rank, std::vector<int>(rank, 1));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      if (i == j) continue;
      // a_ij a_ji = 4 f_ij^2 / (f_ii f_jj) with f the form
      int prod = 4 * form2(i, j) * form2(i, j) / (form2(i, i) * form2(j, j));
      braid[i][j] = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
    }
  std::set<Root, RootOrder> seen;
  std::deque<Root> queue;
  for (int i = 1; i <= rank; ++i) {
    Root r = Root::Unit(rank, i - 1);
    seen.insert(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rank; ++i) {
      Root t = reflect(i, r);
      if ((t.array() < 0).any()) continue;
      if (seen.insert(t).second) queue.push_back(t);
    }
  }
  positive.assign(seen.begin(), seen.end());
}

Rational System::pairing(const Root& a, const Root& b) const {
  Eigen::VectorXi x = a, y = b;
  return Rational(x.dot(form2 * y), 2);
}

Root System::reflect(int i, const Root& r) const {
  Root ai = Root::Unit(rank, i - 1);
  Rational c = Rational(2) * pairing(r, ai) / pairing(ai, ai);
  if (c.denominator() != 1) throw std::logic_error("non-integral coroot pairing");
  Root out = r;
  out[i - 1] -= static_cast<int>(c.numerator());
  return out;
}

bool System::is_positive_root(const Root& r) const {
  return std::binary_search(positive.begin(), positive.end(), r, RootOrder{});
}

std::vector<Root> inversion_roots(const System& s, const Word& w) {
  std::vector<Root> out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    Root beta = Root::Unit(s.rank, w[k] - 1);
    for (std::size_t t = k; t-- > 0;) beta = s.reflect(w[t], beta);
    out.push_back(beta);
  }
  return out;
}

bool is_reduced(const System& s, const Word& w) {
  std::vector<Root> roots = inversion_roots(s, w);
  std::set<Root, RootOrder> distinct;
  for (const Root& r : roots) {
    if (!s.is_positive_root(r)) return false;
    if (!distinct.insert(r).second) return false;
  }
  return true;
}

namespace {

std::set<Word> closure(const System& s, const Word& start, bool braids) {
  std::set<Word> seen{start};
  std::deque<Word> queue{start};
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < w.size(); ++k) {
      for (std::size_t k2 = k + 1; k2 <= w.size(); ++k2) {
        std::size_t len = k2 - k;
        int i = w[k];
        int j = len > 1 ? w[k + 1] : 0;
        if (len < 2 || i == j) continue;
        int m = s.braid[i - 1][j - 1];
        if (static_cast<int>(len) != m) continue;
        if (m > 2 && !braids) continue;
        bool alternating = true;
        for (std::size_t t = 0; t < len; ++t)
          if (w[k + t] != (t % 2 == 0 ? i : j)) alternating = false;
        if (!alternating) continue;
        Word v = w;
        for (std::size_t t = 0; t < len; ++t) v[k + t] = t % 2 == 0 ? j : i;
        if (seen.insert(v).second) queue.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace

std::set<Word> reduced_words(const System& s, const Word& w) { return closure(s, w, true); }

std::set<Word> commutation_class(const System& s, const Word& w) {
  return closure(s, w, false);
}

Word random_reduced_word(const System& s, std::mt19937_64& rng, int length) {
  Word w;
  std::uniform_int_distribution<int> pick(1, s.rank);
  while (static_cast<int>(w.size()) < length) {
    // w s_i is longer iff w(alpha_i) is positive.
    int i = pick(rng);
    Root r = Root::Unit(s.rank, i - 1);
    for (std::size_t t = w.size(); t-- > 0;) r = s.reflect(w[t], r);
    if ((r.array() >= 0).all()) w.push_back(i);
  }
  return w;
}

Word random_longest_word(const System& s, std::mt19937_64& rng) {
  return random_reduced_word(s, rng, static_cast<int>(s.positive.size()));
}

Root interval(int rank, int a, int b) {
  Root r = Root::Zero(rank);
  for (int i = a; i <= b; ++i) r[i - 1] = 1;
  return r;
}

Root from_epsilon(const System& s, const Eigen::VectorXi& e) {
  Eigen::MatrixXi basis = epsilon_basis(s.family, s.rank);
  for (const Root& r : s.positive) {
    Eigen::VectorXi c = r;
    if (basis * c == e) return r;
  }
  throw std::invalid_argument("not a positive root in epsilon coordinates");
}

}  // namespace oracle

namespace oracle {

namespace {

int positive_index(const System& s, const Root& r) {
  auto it = std::lower_bound(s.positive.begin(), s.positive.end(), r, lex_less);
  return it != s.positive.end() && *it == r ? static_cast<int>(it - s.positive.begin()) : -1;
}

void decompose(const System& s, std::size_t idx, const Root& rest, std::vector<int>& counts,
               std::vector<std::vector<int>>& out) {
  if (rest.isZero()) {
    out.push_back(counts);
    return;
  }
  if (idx == s.positive.size()) return;
  const Root& r = s.positive[idx];
  for (int c = 0;; ++c) {
    Root left = rest - c * r;
    if ((left.array() < 0).any()) break;
    counts[idx] = c;
    decompose(s, idx + 1, left, counts, out);
  }
  counts[idx] = 0;
}

}  // namespace

std::vector<std::vector<int>> decompositions(const System& s, const Root& weight) {
  std::vector<std::vector<int>> out;
  std::vector<int> counts(s.positive.size(), 0);
  decompose(s, 0, weight, counts, out);
  return out;
}

bool b_less(const std::vector<int>& lower, const std::vector<int>& upper) {
  const int n = static_cast<int>(lower.size());
  for (int k = 0; k < n; ++k)
    for (int t = k; t < n; ++t) {
      bool ok = lower[k] < upper[k] && lower[t] < upper[t];
      for (int x = 0; x < k && ok; ++x) ok = lower[x] == upper[x];
      for (int x = t + 1; x < n && ok; ++x) ok = lower[x] == upper[x];
      if (ok) return true;
    }
  return false;
}

bool class_b_less(const System& s, const std::set<Word>& cls, const std::vector<int>& lower,
                  const std::vector<int>& upper) {
  for (const Word& w : cls) {
    std::vector<int> lo, up;
    for (const Root& r : inversion_roots(s, w)) {
      int i = positive_index(s, r);
      lo.push_back(lower[i]);
      up.push_back(upper[i]);
    }
    if (!b_less(lo, up)) return false;
  }
  return true;
}

bool is_class_simple(const System& s, const std::set<Word>& cls, const Root& a, const Root& b) {
  std::vector<int> pair(s.positive.size(), 0);
  ++pair[positive_index(s, a)];
  ++pair[positive_index(s, b)];
  for (const auto& m : decompositions(s, a + b))
    if (m != pair && class_b_less(s, cls, m, pair)) return false;
  return true;
}

std::vector<std::pair<Root, Root>> minimal_pairs(const System& s, const Word& w, const Root& gamma) {
  std::vector<Root> roots = inversion_roots(s, w);
  const int n = static_cast<int>(roots.size());
  int g = 0;
  while (!(roots[g] == gamma)) ++g;
  std::vector<std::pair<Root, Root>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!(roots[a] + roots[b] == gamma)) continue;
      bool minimal = true;
      for (int x = a + 1; x < g && minimal; ++x)
        for (int y = g + 1; y < b && minimal; ++y)
          if (roots[x] + roots[y] == gamma) minimal = false;
      if (minimal) out.emplace_back(roots[a], roots[b]);
    }
  return out;
}

}  // namespace oracle
