#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "arq/enumeration.hpp"
#include "oracle.hpp"

using namespace arq;

namespace {

using Class = std::set<Word>;

// Classes and reflection orbits computed from word closures alone.
struct OracleCensus {
  std::set<Class> classes;
  std::set<std::set<Class>> clusters;
  std::size_t words = 0;

  OracleCensus(const oracle::System& s, const CartanDatum& d) {
    std::mt19937_64 rng(1);
    auto words_set = oracle::reduced_words(s, oracle::random_longest_word(s, rng));
    words = words_set.size();
    std::map<Word, const Class*> owner;
    for (const Word& w : words_set)
      if (!owner.count(w)) {
        auto [it, fresh] = classes.insert(oracle::commutation_class(s, w));
        for (const Word& x : *it) owner[x] = &*it;
      }
    std::map<const Class*, const Class*> parent;
    for (const Class& c : classes) parent[&c] = &c;
    auto find = [&](const Class* c) {
      while (parent[c] != c) c = parent[c];
      return c;
    };
    for (const Class& c : classes)
      for (const Word& w : c) {
        Word right(w.begin() + 1, w.end());
        right.push_back(d.star_of(w.front()));
        Word left{d.star_of(w.back())};
        left.insert(left.end(), w.begin(), w.end() - 1);
        for (const Word& x : {right, left}) parent[find(&c)] = find(owner.at(x));
      }
    std::map<const Class*, std::set<Class>> groups;
    for (const Class& c : classes) groups[find(&c)].insert(c);
    for (auto& [_, g] : groups) clusters.insert(g);
  }
};

std::set<std::set<Word>> catalog_clusters(const ClassCatalog& cat) {
  std::map<int, std::set<Word>> by;
  for (const auto& e : cat.entries) by[e.cluster].insert(e.word);
  std::set<std::set<Word>> out;
  for (auto& [_, g] : by) out.insert(g);
  return out;
}

std::set<std::set<Word>> oracle_clusters(const OracleCensus& o) {
  std::set<std::set<Word>> out;
  for (const auto& g : o.clusters) {
    std::set<Word> least;
    for (const Class& c : g) least.insert(*c.begin());
    out.insert(least);
  }
  return out;
}

}  // namespace

TEST_CASE("census against word closures") {
  for (auto [f, n, classes, words] :
       {std::tuple{Family::A, 2, 2, 2}, {Family::A, 3, 8, 16}, {Family::A, 4, 62, 768},
        {Family::B, 2, 2, 2}, {Family::B, 3, 0, 42}, {Family::C, 3, 0, 42},
        {Family::G, 2, 2, 2}, {Family::D, 4, 0, 0}}) {
    CAPTURE(family_letter(f));
    CAPTURE(n);
    DatumRef d = make_datum(f, n);
    oracle::System s(f, n);
    OracleCensus o(s, *d);
    ClassCatalog cat = enumerate_classes(d);
    if (classes) CHECK(static_cast<int>(cat.entries.size()) == classes);
    if (words) CHECK(cat.words == static_cast<std::uint64_t>(words));
    CHECK(cat.entries.size() == o.classes.size());
    CHECK(cat.words == o.words);
    std::set<Word> least;
    for (const Class& c : o.classes) least.insert(*c.begin());
    std::set<Word> got;
    for (const auto& e : cat.entries) got.insert(e.word);
    CHECK(got == least);
    CHECK(catalog_clusters(cat) == oracle_clusters(o));
    CHECK(cat.cluster_count() == static_cast<int>(o.clusters.size()));

    std::uint64_t readings = 0;
    for (const auto& e : cat.entries) {
      CommutationClass c = CommutationClass::from_word(d, e.word);
      readings += count_readings(c.quiver());
      CHECK(e.comp == sigma_composition(c, DiagramAutomorphism::star(*d)));
      CHECK(e.orbit == static_cast<int>(cluster_point(c).size()));
    }
    CHECK(readings == cat.words);
    CHECK(std::is_sorted(cat.entries.begin(), cat.entries.end(),
                         [](const auto& a, const auto& b) { return a.word < b.word; }));
  }
}

TEST_CASE("A4 cluster points and the appendix") {
  DatumRef a4 = make_datum(Family::A, 4);
  ClassCatalog cat = enumerate_classes(a4);
  CHECK(cat.entries.size() == 62);
  CHECK(cat.cluster_count() == 3);
  std::map<std::vector<int>, int> sizes;
  for (const auto& e : cat.entries) {
    ++sizes[e.comp];
    if (e.adapted) CHECK(e.comp == std::vector<int>{5, 5});
  }
  CHECK(sizes == std::map<std::vector<int>, int>{{{5, 5}, 8}, {{4, 6}, 32}, {{3, 7}, 22}});

  std::ifstream in(ARQ_TEST_DATA "/a4_appendix.txt");
  REQUIRE(in);
  auto rows = read_appendix(in, *a4);
  CHECK(rows.size() == 62);
  AppendixReport report = verify_appendix(*a4, cat, rows);
  for (const auto& d : report.diffs) FAIL_CHECK(d);
  std::map<char, std::vector<int>> group_comp;
  for (const auto& row : rows)
    group_comp[row.label[0]] =
        sigma_composition(row.word, DiagramAutomorphism::star(*a4));
  CHECK(group_comp['A'] == std::vector<int>{5, 5});
  CHECK(group_comp['B'] == std::vector<int>{4, 6});
  CHECK(group_comp['C'] == std::vector<int>{3, 7});

  // A duplicated row and a missing class are both reported.
  auto broken = rows;
  broken.back() = broken.front();
  broken.back().label = "C99";
  AppendixReport bad = verify_appendix(*a4, cat, broken);
  CHECK(bad.diffs.size() >= 2);
}

TEST_CASE("catalog files") {
  DatumRef a3 = make_datum(Family::A, 3);
  ClassCatalog cat = enumerate_classes(a3);
  CHECK(cat.hash() == enumerate_classes(a3).hash());
  std::stringstream buf;
  write_catalog(buf, cat);
  std::string text = buf.str();
  ClassCatalog back = read_catalog(buf);
  CHECK(back.hash() == cat.hash());
  CHECK(back.entries.size() == cat.entries.size());
  CHECK(back.words == cat.words);
  std::stringstream again;
  write_catalog(again, back);
  CHECK(again.str() == text);

  std::string tampered = text;
  auto at = tampered.find("\"cluster\":1");
  REQUIRE(at != std::string::npos);
  tampered.replace(at, 11, "\"cluster\":2");
  std::istringstream bad(tampered);
  CHECK_THROWS_AS(read_catalog(bad), Error);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_catalog(empty), Error);

  // A nontrivial sigma changes the compositions.
  EnumerationOptions opts;
  opts.sigma = DiagramAutomorphism::identity(*a3);
  ClassCatalog plain = enumerate_classes(a3, opts);
  CHECK(plain.sigma != cat.sigma);
  for (const auto& e : plain.entries) CHECK(e.comp.size() == 3);
}

TEST_CASE("budgets") {
  CHECK(within_default_budget(build_cartan(Family::A, 5)));
  CHECK_FALSE(within_default_budget(build_cartan(Family::A, 6)));
  CHECK(within_default_budget(build_cartan(Family::C, 4)));
  CHECK_FALSE(within_default_budget(build_cartan(Family::D, 5)));
  CHECK_FALSE(within_default_budget(build_cartan(Family::E, 6)));
  CHECK_FALSE(within_default_budget(build_cartan(Family::F, 4)));
  try {
    enumerate_classes(make_datum(Family::E, 6));
    FAIL("expected budget");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::budget);
  }
  EnumerationOptions opts;
  opts.override_budget = true;
  opts.word_cap = 10;
  CHECK_THROWS_AS(enumerate_classes(make_datum(Family::A, 6), opts), Error);
}
