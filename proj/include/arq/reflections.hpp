#pragma once

#include <string>
#include <vector>

#include "arq/ar_quiver.hpp"

namespace arq {

// A commutation class, held as its quiver plus its least reading.
class CommutationClass {
 public:
  explicit CommutationClass(ARQuiver quiver);
  static CommutationClass from_word(DatumRef d, const Word& w);

  const ARQuiver& quiver() const { return quiver_; }
  const CartanDatum& datum() const { return quiver_.datum(); }
  const Word& canonical_word() const { return canonical_; }
  bool is_longest() const { return quiver_.size() == static_cast<int>(datum().positive.size()); }
  bool operator==(const CommutationClass& o) const { return canonical_ == o.canonical_; }
  bool operator<(const CommutationClass& o) const { return canonical_ < o.canonical_; }

 private:
  ARQuiver quiver_;
  Word canonical_;
};

// Residues i with alpha_i a sink vertex.
std::vector<int> class_sinks(const CommutationClass& c);
// Residues that can end a reading.
std::vector<int> class_sources(const CommutationClass& c);

enum class Side { left, right };

// Identity unless i is a sink (right) or source (left). Longest element only.
CommutationClass reflect_right(const CommutationClass& c, int i);
CommutationClass reflect_left(const CommutationClass& c, int i);
CommutationClass reflect(const CommutationClass& c, int i, Side side);

// Delete the extreme vertex, add the new one at the other end, relabel the
// rest by s_i (right) or s_{i*} (left). Throws not_sink_or_source.
ARQuiver quiver_reflection(const ARQuiver& q, int i, Side side);

std::vector<CommutationClass> cluster_point(const CommutationClass& c,
                                            std::size_t cap = 1'000'000);

class DiagramAutomorphism {
 public:
  static DiagramAutomorphism identity(const CartanDatum& d);
  static DiagramAutomorphism star(const CartanDatum& d);
  // image[i-1] = sigma(i); must preserve the Cartan matrix.
  DiagramAutomorphism(const CartanDatum& d, std::vector<int> image);

  int operator()(int i) const { return image_[i - 1]; }
  // Orbits sorted by their smallest element.
  std::vector<std::vector<int>> orbits() const;
  std::string to_string() const;  // cycle notation, fixed points included

 private:
  std::vector<int> image_;
};

std::vector<int> sigma_composition(const Word& w, const DiagramAutomorphism& sigma);
std::vector<int> sigma_composition(const CommutationClass& c, const DiagramAutomorphism& sigma);

}  // namespace arq
