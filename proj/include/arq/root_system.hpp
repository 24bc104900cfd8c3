#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/rational.hpp>

#include "arq/error.hpp"

namespace arq {

inline constexpr int kMaxRank = 15;

// Coefficient vectors in the basis of simple roots. The max size keeps them
// on the stack.
template <typename Scalar>
using RootT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1, 0, kMaxRank, 1>;
template <typename Scalar>
using SquareT =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxRank, kMaxRank>;

using Root = RootT<int>;
using IntMatrix = SquareT<int>;
using Pairing = boost::rational<long long>;

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

struct CartanDatum {
  Family family = Family::A;
  int rank = 0;
  IntMatrix cartan;  // a_ij = <h_i, alpha_j> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)
  IntMatrix form2;   // twice the symmetric form, so F4 stays integral
  std::vector<std::pair<int, int>> edges;  // 1-based, first < second
  std::vector<std::vector<int>> adjacent;  // 1-based labels, index i-1
  IntMatrix distance;                      // graph distance in the diagram
  std::vector<IntMatrix> reflections;      // s_i as matrices on coefficients
  std::vector<Root> positive;              // ordered by height, then lexicographically
  std::vector<int> star;                   // star[i-1] = i*

  std::string name() const;
  Pairing form(int i, int j) const { return Pairing(form2(i - 1, j - 1), 2); }
  int diagram_distance(int i, int j) const { return distance(i - 1, j - 1); }
  bool simply_laced() const {
    return family == Family::A || family == Family::D || family == Family::E;
  }
  Root simple(int i) const { return Root::Unit(rank, i - 1); }
  int star_of(int i) const { return star[i - 1]; }
  void check_index(int i) const;
  // Index into `positive`, or -1.
  int positive_index(const Root& r) const;

  std::vector<std::uint64_t> positive_keys;  // sorted, parallel to positive_order
  std::vector<int> positive_order;
};

using DatumRef = std::shared_ptr<const CartanDatum>;

CartanDatum build_cartan(Family family, int rank);
DatumRef make_datum(Family family, int rank);

// Packs a coefficient vector into 64 bits, 4 bits per coordinate.
// Coefficients of roots lie in [-6, 6] for every finite type, and
// 15 coordinates plus the length nibble fit exactly.
inline std::uint64_t root_key(const Root& r) {
  std::uint64_t key = static_cast<std::uint64_t>(r.size());
  for (Eigen::Index i = 0; i < r.size(); ++i)
    key |= static_cast<std::uint64_t>(r[i] + 8) << (4 * i + 4);
  return key;
}

struct RootLess {
  bool operator()(const Root& a, const Root& b) const {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                        b.data() + b.size());
  }
};

template <typename Derived>
int height(const Eigen::MatrixBase<Derived>& r) {
  return static_cast<int>(r.sum());
}

template <typename Derived>
bool is_positive(const Eigen::MatrixBase<Derived>& r) {
  return (r.array() >= 0).all() && (r.array() > 0).any();
}

template <typename DerivedA, typename DerivedB>
Pairing pairing(const CartanDatum& d, const Eigen::MatrixBase<DerivedA>& a,
                const Eigen::MatrixBase<DerivedB>& b) {
  long long v = (a.transpose() * d.form2 * b).value();
  return Pairing(v, 2);
}

// <h_i, r>
template <typename Derived>
int coroot_pairing(const CartanDatum& d, int i, const Eigen::MatrixBase<Derived>& r) {
  return (d.cartan.row(i - 1) * r).value();
}

template <typename Derived>
Root reflect(const CartanDatum& d, int i, const Eigen::MatrixBase<Derived>& r) {
  d.check_index(i);
  Root out = r;
  out[i - 1] -= coroot_pairing(d, i, r);
  return out;
}

const std::vector<Root>& positive_roots(const CartanDatum& d);
int diagram_distance(const CartanDatum& d, int i, int j);
bool is_root(const CartanDatum& d, const Root& r);

// Classical types only; A uses n+1 coordinates.
Eigen::VectorXi epsilon_coordinates(const CartanDatum& d, const Root& r);
Root from_epsilon(const CartanDatum& d, const Eigen::VectorXi& e);
// Columns are the simple roots in epsilon coordinates.
Eigen::MatrixXi epsilon_basis(const CartanDatum& d);

int coxeter_number(const CartanDatum& d);

}  // namespace arq
