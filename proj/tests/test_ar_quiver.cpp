#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "arq/ar_quiver.hpp"
#include "figures.hpp"
#include "oracle.hpp"

using namespace arq;

namespace {

Word digits(const std::string& s) {
  Word w;
  for (char c : s) w.push_back(c - '0');
  return w;
}

void check_figure(Family f, int n, const std::string& word, const std::string& name) {
  CAPTURE(name);
  oracle::System s(f, n);
  ARQuiver q = build_upsilon(make_datum(f, n), digits(word));
  std::vector<std::string> diffs = figures::compare(s, q, figures::get(name));
  for (const std::string& d : diffs) FAIL_CHECK(d);
  CHECK(diffs.empty());
}

Root root_of(const oracle::System& s, const std::string& label) {
  return *figures::label_root(s, label);
}

// Longest directed path to a sink, by recursion over out-neighbours.
std::vector<int> oracle_levels(const ARQuiver& q) {
  std::vector<int> level(q.size(), 0);
  std::function<int(int)> go = [&](int k) {
    if (level[k - 1]) return level[k - 1];
    int best = 0;
    for (const Arrow& a : q.arrows())
      if (a.src == k) best = std::max(best, go(a.dst));
    return level[k - 1] = best + 1;
  };
  for (int k = 1; k <= q.size(); ++k) go(k);
  return level;
}

}  // namespace

TEST_CASE("figures") {
  check_figure(Family::A, 5, "1235431235431", "a5_nonadapted");
  check_figure(Family::B, 3, "323212321", "b3");
  check_figure(Family::C, 3, "323212321", "c3");
  check_figure(Family::C, 3, "323212321", "c3_epsilon");
  check_figure(Family::D, 4, "123124123124", "d4");
  check_figure(Family::G, 2, "12121", "g2");
  check_figure(Family::A, 4, "413", "a4_disconnected");
  check_figure(Family::D, 5, "21321532143215321435", "d5_full");
}

TEST_CASE("build_upsilon basics") {
  DatumRef a3 = make_datum(Family::A, 3);
  ARQuiver single = build_upsilon(a3, {2});
  CHECK(single.size() == 1);
  CHECK(single.arrows().empty());
  CHECK((single.at(1).root == a3->simple(2)));
  CHECK_THROWS_AS(build_upsilon(a3, {1, 1}), Error);

  ARQuiver g2 = build_upsilon(make_datum(Family::G, 2), {1, 2, 1, 2, 1});
  CHECK(g2.size() == 5);
  CHECK(g2.arrows().size() == 4);
  for (const Arrow& a : g2.arrows()) CHECK(a.color == Pairing(3));

  ARQuiver c3 = build_upsilon(make_datum(Family::C, 3), digits("323212321"));
  int doubled = 0;
  for (const Arrow& a : c3.arrows()) doubled += a.color == Pairing(2);
  CHECK(doubled == 5);
}

TEST_CASE("residue arrows follow the last-occurrence rule") {
  CartanDatum d = build_cartan(Family::D, 5);
  oracle::System s(Family::D, 5);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Word w = oracle::random_longest_word(s, rng);
    std::set<std::pair<int, int>> expected;
    for (int k = 0; k < static_cast<int>(w.size()); ++k)
      for (int j = 0; j < k; ++j) {
        if (d.diagram_distance(w[k], w[j]) != 1) continue;
        bool blocked = false;
        for (int t = j + 1; t < k; ++t)
          if (w[t] == w[j] || w[t] == w[k]) blocked = true;
        if (!blocked) expected.insert({k + 1, j + 1});
      }
    std::set<std::pair<int, int>> got;
    for (const Arrow& a : residue_arrows(d, w)) got.insert({a.src, a.dst});
    CHECK(got == expected);
  }
}

TEST_CASE("convex order on the non-adapted A5 quiver") {
  oracle::System s(Family::A, 5);
  ARQuiver q = build_upsilon(make_datum(Family::A, 5), digits("1235431235431"));
  Root one = root_of(s, "[1]"), two_four = root_of(s, "[2,4]"), five = root_of(s, "[5]");
  CHECK(convex_leq(q, one, two_four));
  CHECK_FALSE(convex_leq(q, two_four, one));
  CHECK(convex_leq(q, one, one));
  CHECK_FALSE(comparable(q, five, one));
  CHECK(comparable(q, root_of(s, "[4]"), one));
  CHECK_THROWS_AS(convex_leq(q, one, root_of(s, "[3]")), Error);
  std::vector<int> level = level_function(q);
  CHECK(level[q.position_of(one) - 1] == 1);
  CHECK(level[q.position_of(root_of(s, "[1,2]")) - 1] == 2);
}

TEST_CASE("level of the G2 chain") {
  oracle::System s(Family::G, 2);
  ARQuiver q = build_upsilon(make_datum(Family::G, 2), {1, 2, 1, 2, 1});
  CHECK(level_function(q)[q.position_of(root_of(s, "a1+3a2")) - 1] == 5);
}

TEST_CASE("quiver equality") {
  DatumRef a4 = make_datum(Family::A, 4);
  CHECK_FALSE(quivers_equal(build_upsilon(a4, digits("1213214321")),
                            build_upsilon(a4, digits("2123214321"))));
  CHECK(quivers_equal(build_upsilon(a4, digits("1213214321")),
                      build_upsilon(a4, digits("1231214321"))));
  CHECK(canonical_key(*a4, digits("1213214321")) ==
        build_upsilon(a4, digits("1213214321")).canonical_form());
}

TEST_CASE("compatible readings") {
  DatumRef a2 = make_datum(Family::A, 2);
  CHECK(compatible_readings(build_upsilon(a2, {1, 2, 1})) == std::vector<Word>{{1, 2, 1}});
  CHECK(compatible_readings(build_upsilon(a2, {2})) == std::vector<Word>{{2}});

  DatumRef a4 = make_datum(Family::A, 4);
  oracle::System s(Family::A, 4);
  Word a01 = digits("1213214321");
  ARQuiver q = build_upsilon(a4, a01);
  std::vector<Word> readings = compatible_readings(q);
  std::set<Word> expected = oracle::commutation_class(s, a01);
  CHECK(std::set<Word>(readings.begin(), readings.end()) == expected);
  CHECK(std::is_sorted(readings.begin(), readings.end()));
  CHECK(count_readings(q) == expected.size());
  CHECK(least_reading(q) == *expected.begin());
  CHECK_THROWS_AS(compatible_readings(q, 3), Error);

  for (int r = 1; r <= 4; ++r) {
    bool starts = false, ends = false;
    for (const Word& w : expected) {
      starts |= w.front() == r;
      ends |= w.back() == r;
    }
    auto first = reading_starting_with(q, r);
    auto last = reading_ending_with(q, r);
    CHECK(first.has_value() == starts);
    CHECK(last.has_value() == ends);
    if (first) CHECK(expected.count(*first));
    if (last) CHECK(expected.count(*last));
  }

  std::vector<int> pos = reading_positions(q, readings.back());
  std::set<int> all(pos.begin(), pos.end());
  CHECK(all.size() == 10);
}

TEST_CASE("sectional paths") {
  oracle::System s(Family::A, 5);
  ARQuiver q = build_upsilon(make_datum(Family::A, 5), digits("1235431235431"));
  std::vector<int> path;
  for (const char* label : {"[2,4]", "[2,3]", "[2,5]", "[2]"})
    path.push_back(q.position_of(root_of(s, label)));
  CHECK(is_sectional(q, path));
  std::vector<int> bent = {q.position_of(root_of(s, "[2,5]")), q.position_of(root_of(s, "[4,5]"))};
  CHECK(is_sectional(q, bent));

  auto paths = sectional_paths(q);
  CHECK(std::find(paths.begin(), paths.end(), path) != paths.end());
  for (const auto& p : paths) CHECK(is_sectional(q, p));

  oracle::System c(Family::C, 3);
  ARQuiver c3 = build_upsilon(make_datum(Family::C, 3), digits("323212321"));
  Root top = root_of(c, "a1+2a2+a3"), mid = root_of(c, "a1+a2+a3"), low = root_of(c, "2a1+2a2+a3");
  std::vector<int> chain = {c3.position_of(low), c3.position_of(mid), c3.position_of(top)};
  CHECK(is_sectional(c3, chain));
  CHECK(sectional_pairing(c3, top, low) == Pairing(2));
  CHECK(sectional_pairing(c3, mid, low) == Pairing(2));
  CHECK_THROWS_AS(sectional_pairing(c3, root_of(c, "a1"), root_of(c, "a3")), Error);
}

TEST_CASE("F4 product picks up the residue 3 factor") {
  DatumRef f4 = make_datum(Family::F, 4);
  oracle::System s(Family::F, 4);
  std::mt19937_64 rng(5);
  int through_three = 0;
  for (int trial = 0; trial < 40; ++trial) {
    ARQuiver q = build_upsilon(f4, oracle::random_longest_word(s, rng));
    for (int a = 1; a <= q.size(); ++a)
      for (int b = 1; b <= q.size(); ++b) {
        int i = q.at(a).residue, j = q.at(b).residue;
        if (std::min(i, j) > 2 || std::max(i, j) != 4) continue;
        auto p = sectional_product(q, a, b);
        if (!p) continue;
        Pairing colors(1);
        auto path = *common_sectional_path(q, a, b);
        auto ia = std::find(path.begin(), path.end(), a), ib = std::find(path.begin(), path.end(), b);
        auto lo = std::min(ia, ib), hi = std::max(ia, ib);
        for (auto it = lo; it != hi; ++it) colors *= *q.color(*it, *(it + 1));
        CHECK(*p == colors * Pairing(2));
        CHECK(*p == s.pairing(q.at(a).root, q.at(b).root));
        ++through_three;
      }
  }
  CHECK(through_three > 0);
}

TEST_CASE("structural properties on random words") {
  std::mt19937_64 rng(17);
  for (auto [f, n] : {std::pair{Family::A, 5}, {Family::B, 3}, {Family::C, 4}, {Family::D, 5},
                      {Family::E, 6}, {Family::F, 4}, {Family::G, 2}}) {
    DatumRef d = make_datum(f, n);
    oracle::System s(f, n);
    std::uniform_int_distribution<int> len(1, static_cast<int>(s.positive.size()));
    for (int trial = 0; trial < 15; ++trial) {
      Word w = oracle::random_reduced_word(s, rng, len(rng));
      ARQuiver q = build_upsilon(d, w);
      std::vector<Root> roots = oracle::inversion_roots(s, w);
      for (int k = 1; k <= q.size(); ++k) CHECK((q.at(k).root == roots[k - 1]));
      for (const Arrow& a : q.arrows()) {
        CHECK(a.src > a.dst);
        Pairing m = -s.pairing(Root::Unit(n, q.at(a.src).residue - 1),
                               Root::Unit(n, q.at(a.dst).residue - 1));
        CHECK(a.color == m);
      }
      for (int a = 1; a <= q.size(); ++a)
        for (int b = a + 1; b <= q.size(); ++b)
          if (q.at(a).residue == q.at(b).residue) CHECK(q.has_path(b, a));
      CHECK(level_function(q) == oracle_levels(q));
      // convexity of the order
      for (int a = 1; a <= q.size(); ++a)
        for (int b = 1; b <= q.size(); ++b) {
          Root sum = q.at(a).root + q.at(b).root;
          auto c = q.find(sum);
          if (!c || !q.has_path(b, a)) continue;
          CHECK(q.has_path(*c, a));
          CHECK(q.has_path(b, *c));
        }
      if (count_readings(q) <= 2000) {
        std::vector<Word> readings = compatible_readings(q);
        CHECK(readings.size() == count_readings(q));
        std::set<Word> expected = oracle::commutation_class(s, w);
        CHECK(std::set<Word>(readings.begin(), readings.end()) == expected);
      }
    }
  }
}

TEST_CASE("readings respect the order and flip incomparable pairs") {
  DatumRef d = make_datum(Family::D, 4);
  oracle::System s(Family::D, 4);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    ARQuiver q = build_upsilon(d, oracle::random_longest_word(s, rng));
    std::vector<std::vector<int>> ranks;
    for (const Word& r : compatible_readings(q)) {
      std::vector<int> pos = reading_positions(q, r), rank(q.size());
      for (int k = 0; k < q.size(); ++k) rank[pos[k] - 1] = k;
      ranks.push_back(rank);
    }
    for (int a = 1; a <= q.size(); ++a)
      for (int b = 1; b <= q.size(); ++b) {
        if (a == b) continue;
        bool before = false, after = false;
        for (const auto& rank : ranks) (rank[a - 1] < rank[b - 1] ? before : after) = true;
        if (q.has_path(b, a)) {
          CHECK(before);
          CHECK_FALSE(after);
        } else if (!q.has_path(a, b)) {
          CHECK(before);
          CHECK(after);
        }
      }
  }
}

TEST_CASE("quiver distance is directed") {
  oracle::System s(Family::A, 5);
  ARQuiver q = build_upsilon(make_datum(Family::A, 5), digits("1235431235431"));
  int a = q.position_of(root_of(s, "[2,4]")), b = q.position_of(root_of(s, "[1]"));
  CHECK(q.distance(a, b) == q.distance(b, a));
  CHECK(q.distance(a, a) == 0);
  int five = q.position_of(root_of(s, "[5]"));
  CHECK(q.distance(five, b) == -1);
}
