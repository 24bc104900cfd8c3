#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "arq/words.hpp"

namespace arq {

struct Vertex {
  int position = 0;  // 1-based index in the building word
  int residue = 0;
  Root root;
};

struct Arrow {
  int src = 0;  // positions
  int dst = 0;
  Pairing color;
  bool operator==(const Arrow&) const = default;
};

// Vertices keyed by their root labels; equal for two words iff they are
// commutation equivalent.
struct CanonicalForm {
  std::vector<std::uint64_t> roots;  // sorted root keys
  std::vector<int> residues;         // parallel to roots
  std::vector<std::pair<int, int>> arrows;  // indices into roots, sorted
  bool operator==(const CanonicalForm&) const = default;
  bool operator<(const CanonicalForm& o) const;
};

class ARQuiver {
 public:
  // Vertices must be ordered by position 1..N, arrows point from larger to
  // smaller positions.
  ARQuiver(DatumRef datum, Word word, std::vector<Vertex> vertices, std::vector<Arrow> arrows);

  const CartanDatum& datum() const { return *datum_; }
  const DatumRef& datum_ref() const { return datum_; }
  const Word& word() const { return word_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Arrow> arrows() const { return arrows_; }
  const Vertex& at(int position) const { return vertices_.at(position - 1); }

  std::optional<int> find(const Root& r) const;
  int position_of(const Root& r) const;  // throws root_not_in_quiver

  std::span<const int> targets(int position) const { return out_[position - 1]; }
  std::span<const int> sources(int position) const { return in_[position - 1]; }
  std::optional<Pairing> color(int src, int dst) const;

  // Directed path from -> to of length >= 0.
  bool has_path(int from, int to) const;
  // Fewest arrows along a directed path in either direction, or -1.
  int distance(int a, int b) const;

  CanonicalForm canonical_form() const;

 private:
  void index();

  DatumRef datum_;
  Word word_;
  std::vector<Vertex> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<boost::dynamic_bitset<>> reach_;  // reach_[k] includes k
  std::vector<std::vector<int>> dist_;          // directed distance or -1
};

// Arrows by the residue rule; roots are not needed.
std::vector<Arrow> residue_arrows(const CartanDatum& d, const Word& w);
ARQuiver build_upsilon(DatumRef d, const Word& w);
CanonicalForm canonical_key(const CartanDatum& d, const Word& w);
bool quivers_equal(const ARQuiver& a, const ARQuiver& b);

// a precedes-or-equals b in the convex order: a path from b to a exists.
bool convex_leq(const ARQuiver& q, const Root& a, const Root& b);
bool comparable(const ARQuiver& q, const Root& a, const Root& b);

// Indexed by position - 1; sinks have level 1.
std::vector<int> level_function(const ARQuiver& q);

inline constexpr std::size_t kDefaultReadingCap = 1'000'000;

// Topological orders read sinks first, emitted as residue words in
// lexicographic order.
std::vector<Word> compatible_readings(const ARQuiver& q, std::size_t cap = kDefaultReadingCap);
std::uint64_t count_readings(const ARQuiver& q);
// The lexicographically least reading.
Word least_reading(const ARQuiver& q);
// Least reading with the given first (or last) residue, if any.
std::optional<Word> reading_starting_with(const ARQuiver& q, int residue);
std::optional<Word> reading_ending_with(const ARQuiver& q, int residue);
// Position order of a reading as vertex positions.
std::vector<int> reading_positions(const ARQuiver& q, const Word& reading);

// Positions listed from the start of the path towards its end.
bool is_sectional(const ARQuiver& q, std::span<const int> path);
std::vector<std::vector<int>> sectional_paths(const ARQuiver& q);
// Sectional path from a to b or b to a, if any.
std::optional<std::vector<int>> common_sectional_path(const ARQuiver& q, int a, int b);
// Product formula along a common sectional path of two positions.
std::optional<Pairing> sectional_product(const ARQuiver& q, int a, int b);
// Same for roots; throws not_sectional.
Pairing sectional_pairing(const ARQuiver& q, const Root& a, const Root& b);

}  // namespace arq
