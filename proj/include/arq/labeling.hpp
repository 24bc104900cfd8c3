#pragma once

#include <optional>
#include <vector>

#include "arq/orientation.hpp"

namespace arq {

// Some epsilon coordinate has the same nonzero sign in both roots.
bool shares_component(const CartanDatum& d, const Root& a, const Root& b);
// Every pair on every maximal sectional path shares a component.
bool verify_sectional_components(const ARQuiver& q);

// Type A interval [a, b] = alpha_a + ... + alpha_b.
std::pair<int, int> interval_of(const Root& r);
Root interval_root(int rank, int a, int b);

enum class SectionalKind { north, south };

struct EndRule {
  std::vector<int> path;  // positions, along the arrows
  SectionalKind kind;     // north: residues decrease along the arrows
  std::optional<int> shared_end;  // left end for north, right end for south
};
std::vector<EndRule> type_a_end_rules(const ARQuiver& q);

struct ResidueSkeleton {
  DatumRef datum;
  Word word;
  std::vector<std::optional<Root>> labels;  // by position - 1
};

// Keeps labels at the given positions only.
ResidueSkeleton forget_labels(const ARQuiver& q, const std::vector<int>& keep);
// Positions of sinks and sources, whose labels are simple roots.
std::vector<int> seed_positions(const ARQuiver& q);

struct LabelInference {
  ARQuiver quiver;
  std::vector<int> by_propagation;  // fixed by sectional rules alone
  std::vector<int> by_completion;   // fixed by the bijection with Phi(w)
  std::vector<int> by_search;       // fixed by pairing constraints
  bool direct = false;              // exceptional types: recomputed
};

// Throws inconsistent_labels or ambiguous_labels.
LabelInference infer_labels(const ResidueSkeleton& s);

// Type A, adapted: the B(Q) coordinate (row, p) of alpha_k, index k - 1.
std::vector<std::pair<int, int>> simple_root_positions(const CartanDatum& d,
                                                       const DynkinOrientation& q);

}  // namespace arq
