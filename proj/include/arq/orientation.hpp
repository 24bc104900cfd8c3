#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arq/ar_quiver.hpp"

namespace arq {

// An orientation of the Dynkin diagram.
class DynkinOrientation {
 public:
  DynkinOrientation() = default;
  // Arrows given as (source, target); every diagram edge exactly once.
  DynkinOrientation(const CartanDatum& d, const std::vector<std::pair<int, int>>& arrows);
  static std::vector<DynkinOrientation> all(const CartanDatum& d);

  int rank() const { return rank_; }
  std::vector<std::pair<int, int>> arrows() const;
  bool points(int src, int dst) const;  // is there an arrow src -> dst
  bool is_sink(int i) const;
  bool is_source(int i) const;
  // Flips every arrow at i.
  DynkinOrientation reflected(int i) const;
  std::string to_string() const;  // "2->1 2->3"
  bool operator==(const DynkinOrientation&) const = default;

 private:
  int rank_ = 0;
  std::vector<std::pair<int, int>> edges_;  // diagram edges, first < second
  std::vector<char> forward_;               // edge.first -> edge.second
};

bool is_adapted_to(const CartanDatum& d, const Word& w, const DynkinOrientation& q);
// The orientation determined by the first occurrences, if the word is adapted
// to it. Edges touching no letter of the word are oriented towards the
// smaller label.
std::optional<DynkinOrientation> is_adapted(const CartanDatum& d, const Word& w);
// Reduced word for the longest element, always reading the smallest sink.
Word adapted_word(const CartanDatum& d, const DynkinOrientation& q);
// Heights with xi(target) = xi(source) + 1, normalized so max xi = 0.
std::vector<int> height_function(const CartanDatum& d, const DynkinOrientation& q);

struct GammaQ {
  ARQuiver quiver;
  std::vector<std::pair<int, int>> a_coords;  // (i, m) by position - 1
  std::vector<std::pair<int, int>> b_coords;  // (i, p) by position - 1
  std::vector<int> r;                         // row lengths r_i
  std::vector<int> xi;
};

// Built from the mesh-free description of A(Q) and the Coxeter element;
// simply-laced types only.
GammaQ gamma_q(DatumRef d, const DynkinOrientation& q);

}  // namespace arq
