#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "arq/words.hpp"

// Reference computations written directly from the definitions. They share
// no code with the library beyond the Root and Word types.
namespace oracle {

using arq::Family;
using arq::Root;
using arq::Word;
using Rational = arq::Pairing;

// Twice the symmetric form on simple roots, Bourbaki numbering except that
// G2 has alpha_1 long.
Eigen::MatrixXi form2(Family family, int rank);
// Simple roots in epsilon coordinates, one per column (classical types).
Eigen::MatrixXi epsilon_basis(Family family, int rank);

struct System {
  Family family;
  int rank;
  Eigen::MatrixXi form2;
  std::vector<Root> positive;  // sorted lexicographically
  std::vector<std::vector<int>> braid;  // m(i, j)

  System(Family family, int rank);
  Rational pairing(const Root& a, const Root& b) const;
  Root reflect(int i, const Root& r) const;
  bool is_positive_root(const Root& r) const;
};

std::vector<Root> inversion_roots(const System& s, const Word& w);
bool is_reduced(const System& s, const Word& w);

// Closure of one word under braid moves, or commutation moves only.
std::set<Word> reduced_words(const System& s, const Word& w);
std::set<Word> commutation_class(const System& s, const Word& w);

// Random reduced word of the given length; the longest element when
// length is the number of positive roots.
Word random_reduced_word(const System& s, std::mt19937_64& rng, int length);
Word random_longest_word(const System& s, std::mt19937_64& rng);

// Type A interval and epsilon parsing for figure labels.
Root interval(int rank, int a, int b);
Root from_epsilon(const System& s, const Eigen::VectorXi& e);

}  // namespace oracle

namespace oracle {

// Sequences over s.positive (counts, same index) with the given weight.
std::vector<std::vector<int>> decompositions(const System& s, const Root& weight);

// lower <^b upper for sequences indexed by one convex order, tried over
// every admissible pair (k, s).
bool b_less(const std::vector<int>& lower, const std::vector<int>& upper);

// Sequences given as counts over s.positive; compared after re-sorting by
// every word of the class.
bool class_b_less(const System& s, const std::set<Word>& cls, const std::vector<int>& lower,
                  const std::vector<int>& upper);

// No sequence of weight a + b lies below the pair in every word of the class.
bool is_class_simple(const System& s, const std::set<Word>& cls, const Root& a, const Root& b);

// Pairs alpha < beta in the order of w with alpha + beta = gamma and no
// pair alpha < alpha' < gamma < beta' < beta of the same sum.
std::vector<std::pair<Root, Root>> minimal_pairs(const System& s, const Word& w, const Root& gamma);

}  // namespace oracle
