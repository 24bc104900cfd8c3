#pragma once

#include <cstddef>
#include <vector>

#include "arq/root_system.hpp"

namespace arq {

// Letters are 1-based simple reflection indices.
using Word = std::vector<int>;

class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(IntMatrix action) : action_(std::move(action)) {}
  static WeylElement identity(const CartanDatum& d);

  const IntMatrix& matrix() const { return action_; }
  template <typename Derived>
  Root operator()(const Eigen::MatrixBase<Derived>& r) const {
    return action_ * r;
  }
  WeylElement operator*(const WeylElement& o) const { return WeylElement(action_ * o.action_); }
  bool operator==(const WeylElement& o) const { return action_ == o.action_; }

 private:
  IntMatrix action_;
};

void check_word(const CartanDatum& d, const Word& w);
WeylElement evaluate(const CartanDatum& d, const Word& w);
bool is_reduced(const CartanDatum& d, const Word& w);
// beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}); throws not_reduced.
std::vector<Root> inversion_roots(const CartanDatum& d, const Word& w);
// { alpha > 0 : w^{-1} alpha < 0 }, computed from the element alone.
std::vector<Root> inversion_set(const CartanDatum& d, const WeylElement& w);

struct LongestElement {
  WeylElement element;
  Word word;
};
LongestElement longest_element(const CartanDatum& d);
bool is_longest_word(const CartanDatum& d, const Word& w);
std::vector<int> star_involution(const CartanDatum& d);

// Order of s_i s_j.
int braid_order(const CartanDatum& d, int i, int j);

inline constexpr std::size_t kDefaultWordCap = 5'000'000;

// All reduced words of the element, sorted lexicographically.
std::vector<Word> all_reduced_words(const CartanDatum& d, const Word& w,
                                    std::size_t cap = kDefaultWordCap);
// Closure under commutation moves only, sorted lexicographically.
std::vector<Word> commutation_class_words(const CartanDatum& d, const Word& w,
                                          std::size_t cap = kDefaultWordCap);

}  // namespace arq
