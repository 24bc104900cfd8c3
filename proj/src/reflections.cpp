#include "arq/reflections.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace arq {

CommutationClass::CommutationClass(ARQuiver quiver)
    : quiver_(std::move(quiver)), canonical_(least_reading(quiver_)) {}

CommutationClass CommutationClass::from_word(DatumRef d, const Word& w) {
  return CommutationClass(build_upsilon(std::move(d), w));
}

std::vector<int> class_sinks(const CommutationClass& c) {
  std::vector<int> out;
  const ARQuiver& q = c.quiver();
  for (int k = 1; k <= q.size(); ++k)
    if (q.targets(k).empty()) out.push_back(q.at(k).residue);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> class_sources(const CommutationClass& c) {
  std::vector<int> out;
  const ARQuiver& q = c.quiver();
  for (int k = 1; k <= q.size(); ++k)
    if (q.sources(k).empty()) out.push_back(q.at(k).residue);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_longest(const CommutationClass& c) {
  if (!c.is_longest())
    throw Error(ErrorKind::not_longest, "reflection maps need a class of the longest element");
}

}  // namespace

CommutationClass reflect_right(const CommutationClass& c, int i) {
  require_longest(c);
  c.datum().check_index(i);
  auto w = reading_starting_with(c.quiver(), i);
  if (!w) return c;
  Word next(w->begin() + 1, w->end());
  next.push_back(c.datum().star_of(i));
  return CommutationClass::from_word(c.quiver().datum_ref(), next);
}

CommutationClass reflect_left(const CommutationClass& c, int i) {
  require_longest(c);
  c.datum().check_index(i);
  auto w = reading_ending_with(c.quiver(), i);
  if (!w) return c;
  Word next{c.datum().star_of(i)};
  next.insert(next.end(), w->begin(), w->end() - 1);
  return CommutationClass::from_word(c.quiver().datum_ref(), next);
}

CommutationClass reflect(const CommutationClass& c, int i, Side side) {
  return side == Side::right ? reflect_right(c, i) : reflect_left(c, i);
}

ARQuiver quiver_reflection(const ARQuiver& q, int i, Side side) {
  const CartanDatum& d = q.datum();
  d.check_index(i);
  if (q.size() != static_cast<int>(d.positive.size()))
    throw Error(ErrorKind::not_longest, "reflection maps need a class of the longest element");
  const int istar = d.star_of(i);
  auto reading = side == Side::right ? reading_starting_with(q, i) : reading_ending_with(q, i);
  if (!reading)
    throw Error(ErrorKind::not_sink_or_source,
                std::to_string(i) + (side == Side::right ? " is not a sink" : " is not a source"));
  auto order = reading_positions(q, *reading);
  const int n = q.size();
  // Kept vertices in their new order; the new vertex takes the freed end.
  std::vector<int> kept = side == Side::right ? std::vector<int>(order.begin() + 1, order.end())
                                              : std::vector<int>(order.begin(), order.end() - 1);
  const int shift = side == Side::right ? 0 : 1;
  const int relabel = side == Side::right ? i : istar;
  std::vector<int> new_pos(n + 1, 0);
  for (std::size_t k = 0; k < kept.size(); ++k) new_pos[kept[k]] = static_cast<int>(k) + 1 + shift;

  const int fresh = side == Side::right ? n : 1;
  std::vector<Vertex> vertices(n);
  Word word(n);
  for (int old : kept) {
    int p = new_pos[old];
    vertices[p - 1] = {p, q.at(old).residue, reflect(d, relabel, q.at(old).root)};
    word[p - 1] = q.at(old).residue;
  }
  vertices[fresh - 1] = {fresh, istar, d.simple(side == Side::right ? i : istar)};
  word[fresh - 1] = istar;

  std::vector<Arrow> arrows;
  for (const Arrow& a : q.arrows()) {
    if (new_pos[a.src] == 0 || new_pos[a.dst] == 0) continue;
    arrows.push_back({new_pos[a.src], new_pos[a.dst], a.color});
  }
  // Arrows at the new vertex follow the residue rule.
  for (const Arrow& a : residue_arrows(d, word))
    if (a.src == fresh || a.dst == fresh) arrows.push_back(a);
  return ARQuiver(q.datum_ref(), word, std::move(vertices), std::move(arrows));
}

std::vector<CommutationClass> cluster_point(const CommutationClass& c, std::size_t cap) {
  require_longest(c);
  std::set<Word> seen{c.canonical_word()};
  std::vector<CommutationClass> out{c};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    for (int i = 1; i <= c.datum().rank; ++i) {
      for (Side side : {Side::right, Side::left}) {
        CommutationClass next = reflect(out[idx], i, side);
        if (!seen.insert(next.canonical_word()).second) continue;
        if (out.size() >= cap) throw Error(ErrorKind::size_cap, "cluster point exceeds the cap");
        out.push_back(next);
        queue.push_back(out.size() - 1);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DiagramAutomorphism DiagramAutomorphism::identity(const CartanDatum& d) {
  std::vector<int> img(d.rank);
  for (int i = 0; i < d.rank; ++i) img[i] = i + 1;
  return DiagramAutomorphism(d, img);
}

DiagramAutomorphism DiagramAutomorphism::star(const CartanDatum& d) {
  return DiagramAutomorphism(d, d.star);
}

DiagramAutomorphism::DiagramAutomorphism(const CartanDatum& d, std::vector<int> image)
    : image_(std::move(image)) {
  if (static_cast<int>(image_.size()) != d.rank)
    throw Error(ErrorKind::invalid_automorphism, "automorphism has the wrong size");
  std::vector<int> sorted = image_;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < d.rank; ++i)
    if (sorted[i] != i + 1) throw Error(ErrorKind::invalid_automorphism, "not a permutation");
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j)
      if (d.cartan(image_[i] - 1, image_[j] - 1) != d.cartan(i, j))
        throw Error(ErrorKind::invalid_automorphism,
                    "permutation does not preserve the Cartan matrix");
}

std::vector<std::vector<int>> DiagramAutomorphism::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(image_.size(), 0);
  for (std::size_t i = 1; i <= image_.size(); ++i) {
    if (seen[i - 1]) continue;
    std::vector<int> orbit;
    for (int j = static_cast<int>(i); !seen[j - 1]; j = image_[j - 1]) {
      seen[j - 1] = 1;
      orbit.push_back(j);
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(orbit);
  }
  return out;
}

std::string DiagramAutomorphism::to_string() const {
  std::string s;
  std::vector<char> seen(image_.size(), 0);
  for (std::size_t i = 1; i <= image_.size(); ++i) {
    if (seen[i - 1]) continue;
    s += '(';
    bool first = true;
    for (int j = static_cast<int>(i); !seen[j - 1]; j = image_[j - 1]) {
      seen[j - 1] = 1;
      if (!first) s += ' ';
      s += std::to_string(j);
      first = false;
    }
    s += ')';
  }
  return s;
}

std::vector<int> sigma_composition(const Word& w, const DiagramAutomorphism& sigma) {
  auto orbits = sigma.orbits();
  std::map<int, int> orbit_of;
  for (std::size_t k = 0; k < orbits.size(); ++k)
    for (int i : orbits[k]) orbit_of[i] = static_cast<int>(k);
  std::vector<int> comp(orbits.size(), 0);
  for (int c : w) ++comp.at(orbit_of.at(c));
  return comp;
}

std::vector<int> sigma_composition(const CommutationClass& c, const DiagramAutomorphism& sigma) {
  return sigma_composition(c.canonical_word(), sigma);
}

}  // namespace arq
