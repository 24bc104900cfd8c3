#include "arq/root_system.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>
#include <vector>

#include <Eigen/Core>

namespace arq {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_type: return "invalid-type";
    case ErrorKind::index_out_of_range: return "index-out-of-range";
    case ErrorKind::malformed_word: return "malformed-word";
    case ErrorKind::not_reduced: return "not-reduced";
    case ErrorKind::not_longest: return "not-longest";
    case ErrorKind::not_a_root: return "not-a-root";
    case ErrorKind::root_not_in_quiver: return "root-not-in-quiver";
    case ErrorKind::not_sectional: return "not-on-common-sectional-path";
    case ErrorKind::not_adapted: return "not-adapted";
    case ErrorKind::not_sink_or_source: return "not-sink-or-source";
    case ErrorKind::invalid_automorphism: return "invalid-automorphism";
    case ErrorKind::weight_mismatch: return "weight-mismatch";
    case ErrorKind::inconsistent_labels: return "inconsistent";
    case ErrorKind::ambiguous_labels: return "ambiguous";
    case ErrorKind::size_cap: return "size-cap";
    case ErrorKind::budget: return "budget";
    case ErrorKind::parse: return "parse";
    case ErrorKind::io: return "io";
  }
  return "error";
}

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

std::string CartanDatum::name() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

void CartanDatum::check_index(int i) const {
  if (i < 1 || i > rank)
    throw Error(ErrorKind::index_out_of_range,
                "index " + std::to_string(i) + " out of range for " + name());
}

int CartanDatum::positive_index(const Root& r) const {
  if (r.size() != rank) return -1;
  auto key = root_key(r);
  auto it = std::lower_bound(positive_keys.begin(), positive_keys.end(), key);
  if (it == positive_keys.end() || *it != key) return -1;
  return positive_order[it - positive_keys.begin()];
}

namespace {

bool valid_rank(Family f, int n) {
  if (n > kMaxRank) return false;
  switch (f) {
    case Family::A: return n >= 1;
    case Family::B:
    case Family::C: return n >= 2;
    case Family::D: return n >= 4;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

std::vector<std::pair<int, int>> diagram_edges(Family f, int n) {
  std::vector<std::pair<int, int>> e;
  switch (f) {
    case Family::D:
      for (int i = 1; i <= n - 2; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 2, n);
      break;
    case Family::E:
      e.emplace_back(1, 3);
      e.emplace_back(2, 4);
      for (int i = 3; i < n; ++i) e.emplace_back(i, i + 1);
      break;
    default:
      for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  }
  std::sort(e.begin(), e.end());
  return e;
}

// Squared lengths (alpha_i, alpha_i).
std::vector<int> squared_lengths(Family f, int n) {
  std::vector<int> len(n, 2);
  switch (f) {
    case Family::B: len[n - 1] = 1; break;
    case Family::C: len[n - 1] = 4; break;
    case Family::F: len = {2, 2, 1, 1}; break;
    case Family::G: len = {6, 2}; break;
    default: break;
  }
  return len;
}

}  // namespace

CartanDatum build_cartan(Family family, int rank) {
  if (!valid_rank(family, rank))
    throw Error(ErrorKind::invalid_type, std::string("no finite type ") +
                                             family_letter(family) + std::to_string(rank));
  CartanDatum d;
  d.family = family;
  d.rank = rank;
  d.edges = diagram_edges(family, rank);
  auto len = squared_lengths(family, rank);

  d.form2 = IntMatrix::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) d.form2(i, i) = 2 * len[i];
  d.adjacent.assign(rank, {});
  for (auto [i, j] : d.edges) {
    int v = -std::max(len[i - 1], len[j - 1]);
    d.form2(i - 1, j - 1) = d.form2(j - 1, i - 1) = v;
    d.adjacent[i - 1].push_back(j);
    d.adjacent[j - 1].push_back(i);
  }
  for (auto& a : d.adjacent) std::sort(a.begin(), a.end());

  d.cartan = IntMatrix::Zero(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) d.cartan(i, j) = d.form2(i, j) / len[i];

  d.distance = IntMatrix::Constant(rank, rank, -1);
  for (int s = 0; s < rank; ++s) {
    std::deque<int> queue{s};
    d.distance(s, s) = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : d.adjacent[u]) {
        if (d.distance(s, v - 1) < 0) {
          d.distance(s, v - 1) = d.distance(s, u) + 1;
          queue.push_back(v - 1);
        }
      }
    }
  }

  for (int i = 0; i < rank; ++i) {
    IntMatrix s = IntMatrix::Identity(rank, rank);
    s.row(i) -= d.cartan.row(i);
    d.reflections.push_back(s);
  }

  // Closure of the simple roots under simple reflections.
  std::unordered_set<std::uint64_t> seen;
  std::deque<Root> queue;
  for (int i = 1; i <= rank; ++i) {
    seen.insert(root_key(d.simple(i)));
    queue.push_back(d.simple(i));
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    d.positive.push_back(r);
    for (int i = 0; i < rank; ++i) {
      Root t = d.reflections[i] * r;
      if (is_positive(t) && seen.insert(root_key(t)).second) queue.push_back(t);
    }
  }
  std::sort(d.positive.begin(), d.positive.end(), [](const Root& a, const Root& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return RootLess{}(a, b);
  });
  std::vector<std::pair<std::uint64_t, int>> keyed;
  for (std::size_t k = 0; k < d.positive.size(); ++k)
    keyed.emplace_back(root_key(d.positive[k]), static_cast<int>(k));
  std::sort(keyed.begin(), keyed.end());
  for (auto [key, idx] : keyed) {
    d.positive_keys.push_back(key);
    d.positive_order.push_back(idx);
  }

  // Longest element by greedy ascent, then w0(alpha_i) = -alpha_{i*}.
  IntMatrix w = IntMatrix::Identity(rank, rank);
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 0; i < rank; ++i) {
      if (is_positive(w.col(i))) {
        w = w * d.reflections[i];
        grew = true;
        break;
      }
    }
  }
  d.star.assign(rank, 0);
  for (int i = 0; i < rank; ++i) {
    Root img = -w.col(i);
    for (int j = 0; j < rank; ++j)
      if (img == d.simple(j + 1)) d.star[i] = j + 1;
  }
  return d;
}

DatumRef make_datum(Family family, int rank) {
  return std::make_shared<const CartanDatum>(build_cartan(family, rank));
}

const std::vector<Root>& positive_roots(const CartanDatum& d) { return d.positive; }

int diagram_distance(const CartanDatum& d, int i, int j) {
  d.check_index(i);
  d.check_index(j);
  return d.diagram_distance(i, j);
}

bool is_root(const CartanDatum& d, const Root& r) {
  if (r.size() != d.rank) return false;
  if (d.positive_index(r) >= 0) return true;
  Root neg = -r;
  return d.positive_index(neg) >= 0;
}

Eigen::MatrixXi epsilon_basis(const CartanDatum& d) {
  const int n = d.rank;
  const bool type_a = d.family == Family::A;
  if (d.family != Family::A && d.family != Family::B && d.family != Family::C &&
      d.family != Family::D)
    throw Error(ErrorKind::invalid_type, "epsilon coordinates need a classical type");
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(type_a ? n + 1 : n, n);
  for (int i = 0; i < n; ++i) {
    if (type_a || i < n - 1) {
      m(i, i) = 1;
      m(i + 1, i) = -1;
    }
  }
  switch (d.family) {
    case Family::B: m(n - 1, n - 1) = 1; break;
    case Family::C: m(n - 1, n - 1) = 2; break;
    case Family::D:
      m(n - 2, n - 1) = 1;
      m(n - 1, n - 1) = 1;
      break;
    default: break;
  }
  return m;
}

Eigen::VectorXi epsilon_coordinates(const CartanDatum& d, const Root& r) {
  return epsilon_basis(d) * r.cast<int>();
}

Root from_epsilon(const CartanDatum& d, const Eigen::VectorXi& e) {
  Eigen::MatrixXi m = epsilon_basis(d);
  if (e.size() != m.rows())
    throw Error(ErrorKind::not_a_root, "epsilon vector has the wrong dimension");
  // Exact elimination on the augmented system; the basis has full column rank.
  const int rows = static_cast<int>(m.rows()), n = d.rank;
  std::vector<std::vector<Pairing>> a(rows, std::vector<Pairing>(n + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n] = e[i];
  }
  int pivot_row = 0;
  for (int col = 0; col < n; ++col) {
    int p = pivot_row;
    while (p < rows && a[p][col] == Pairing(0)) ++p;
    std::swap(a[p], a[pivot_row]);
    for (int i = 0; i < rows; ++i) {
      if (i == pivot_row || a[i][col] == Pairing(0)) continue;
      Pairing f = a[i][col] / a[pivot_row][col];
      for (int j = col; j <= n; ++j) a[i][j] -= f * a[pivot_row][j];
    }
    ++pivot_row;
  }
  Root r(n);
  for (int i = 0; i < n; ++i) {
    Pairing x = a[i][n] / a[i][i];
    if (x.denominator() != 1)
      throw Error(ErrorKind::not_a_root, "epsilon vector is outside the root lattice");
    r[i] = static_cast<int>(x.numerator());
  }
  if (m * Eigen::VectorXi(r) != e)
    throw Error(ErrorKind::not_a_root, "epsilon vector is outside the root lattice");
  return r;
}

int coxeter_number(const CartanDatum& d) {
  const int n = d.rank;
  switch (d.family) {
    case Family::A: return n + 1;
    case Family::B:
    case Family::C: return 2 * n;
    case Family::D: return 2 * n - 2;
    case Family::E: return n == 6 ? 12 : n == 7 ? 18 : 30;
    case Family::F: return 12;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace arq
