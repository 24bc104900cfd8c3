#pragma once

#include <optional>
#include <vector>

#include "arq/reflections.hpp"

namespace arq {

// Pairs (a, b) with a < b in the order of the word and a + b = gamma, with
// no other such pair strictly nested between them.
std::vector<std::pair<Root, Root>> minimal_pairs(const CartanDatum& d, const Word& w,
                                                 const Root& gamma);

// Multiplicities indexed by position in a reading.
using Multiplicity = std::vector<int>;
// Unordered roots with repetition.
using RootMultiset = std::vector<Root>;

// lower <^b upper for sequences over the inversion roots of w.
// Throws weight_mismatch.
bool b_less(const CartanDatum& d, const Word& w, const Multiplicity& lower,
            const Multiplicity& upper);
// b_less after re-sorting by every reading of the class.
bool class_b_less(const CommutationClass& c, const RootMultiset& lower, const RootMultiset& upper);

enum class SimpleReason { incomparable, sectional, exhaustive };

struct SimplePairVerdict {
  bool simple = true;
  SimpleReason reason = SimpleReason::exhaustive;
  std::optional<RootMultiset> witness;  // a sequence below the pair
};

inline constexpr std::size_t kDefaultPairBudget = 200'000;

// Fast paths first, then an exhaustive search over sequences of the same weight.
SimplePairVerdict is_class_simple_pair(const CommutationClass& c, const Root& a, const Root& b,
                                       std::size_t budget = kDefaultPairBudget);
// Exhaustive search only.
SimplePairVerdict exhaustive_simple_pair(const CommutationClass& c, const Root& a, const Root& b,
                                         std::size_t budget = kDefaultPairBudget);

}  // namespace arq
