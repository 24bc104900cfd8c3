#include "arq/words.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

namespace arq {

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (int c : w) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ull;
    return h;
  }
};

template <typename Moves>
std::vector<Word> closure(const Word& start, std::size_t cap, Moves moves) {
  std::unordered_set<Word, WordHash> seen{start};
  std::deque<Word> queue{start};
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    moves(cur, [&](Word next) {
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw Error(ErrorKind::size_cap,
                      "more than " + std::to_string(cap) + " words in the closure");
        queue.push_back(std::move(next));
      }
    });
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

WeylElement WeylElement::identity(const CartanDatum& d) {
  return WeylElement(IntMatrix::Identity(d.rank, d.rank));
}

void check_word(const CartanDatum& d, const Word& w) {
  for (int c : w) d.check_index(c);
}

WeylElement evaluate(const CartanDatum& d, const Word& w) {
  check_word(d, w);
  IntMatrix m = IntMatrix::Identity(d.rank, d.rank);
  for (int c : w) m = m * d.reflections[c - 1];
  return WeylElement(m);
}

namespace {

// Returns false on the first non-positive or repeated root.
bool walk_roots(const CartanDatum& d, const Word& w, std::vector<Root>* out) {
  check_word(d, w);
  IntMatrix prefix = IntMatrix::Identity(d.rank, d.rank);
  std::unordered_set<std::uint64_t> seen;
  for (int c : w) {
    Root beta = prefix.col(c - 1);
    if (!is_positive(beta) || !seen.insert(root_key(beta)).second) return false;
    if (out) out->push_back(beta);
    prefix = prefix * d.reflections[c - 1];
  }
  return true;
}

}  // namespace

bool is_reduced(const CartanDatum& d, const Word& w) { return walk_roots(d, w, nullptr); }

std::vector<Root> inversion_roots(const CartanDatum& d, const Word& w) {
  std::vector<Root> roots;
  roots.reserve(w.size());
  if (!walk_roots(d, w, &roots)) throw Error(ErrorKind::not_reduced, "word is not reduced");
  return roots;
}

std::vector<Root> inversion_set(const CartanDatum& d, const WeylElement& w) {
  // w^{-1} alpha < 0 iff alpha = w(gamma) for some gamma < 0.
  std::vector<Root> out;
  for (const Root& g : d.positive) {
    Root img = -w(g);
    if (is_positive(img)) out.push_back(img);
  }
  std::sort(out.begin(), out.end(), RootLess{});
  return out;
}

LongestElement longest_element(const CartanDatum& d) {
  LongestElement out{WeylElement::identity(d), {}};
  IntMatrix m = IntMatrix::Identity(d.rank, d.rank);
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 0; i < d.rank; ++i) {
      if (is_positive(m.col(i))) {
        m = m * d.reflections[i];
        out.word.push_back(i + 1);
        grew = true;
        break;
      }
    }
  }
  out.element = WeylElement(m);
  return out;
}

bool is_longest_word(const CartanDatum& d, const Word& w) {
  return w.size() == d.positive.size() && is_reduced(d, w);
}

std::vector<int> star_involution(const CartanDatum& d) { return d.star; }

int braid_order(const CartanDatum& d, int i, int j) {
  if (i == j) return 1;
  switch (d.cartan(i - 1, j - 1) * d.cartan(j - 1, i - 1)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    default: return 6;
  }
}

std::vector<Word> all_reduced_words(const CartanDatum& d, const Word& w, std::size_t cap) {
  if (!is_reduced(d, w)) throw Error(ErrorKind::not_reduced, "word is not reduced");
  const int n = static_cast<int>(w.size());
  return closure(w, cap, [&](const Word& cur, auto&& emit) {
    for (int p = 0; p + 1 < n; ++p) {
      int a = cur[p], b = cur[p + 1];
      if (a == b) continue;
      int m = braid_order(d, a, b);
      if (p + m > n) continue;
      bool match = true;
      for (int t = 0; t < m && match; ++t) match = cur[p + t] == (t % 2 ? b : a);
      if (!match) continue;
      Word next = cur;
      for (int t = 0; t < m; ++t) next[p + t] = t % 2 ? a : b;
      emit(std::move(next));
    }
  });
}

std::vector<Word> commutation_class_words(const CartanDatum& d, const Word& w,
                                          std::size_t cap) {
  check_word(d, w);
  const int n = static_cast<int>(w.size());
  return closure(w, cap, [&](const Word& cur, auto&& emit) {
    for (int p = 0; p + 1 < n; ++p) {
      if (cur[p] != cur[p + 1] && braid_order(d, cur[p], cur[p + 1]) == 2) {
        Word next = cur;
        std::swap(next[p], next[p + 1]);
        emit(std::move(next));
      }
    }
  });
}

}  // namespace arq
