#include "arq/enumeration.hpp"

#include <cstdlib>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "arq/orientation.hpp"
#include "arq/parse.hpp"

namespace arq {

namespace {

std::string entry_line(const CatalogEntry& e, const CartanDatum* d) {
  nlohmann::ordered_json j;
  j["id"] = e.id;
  std::string word;
  if (d) {
    word = format_word(*d, e.word);
  } else {
    for (int c : e.word) word += std::to_string(c);
  }
  j["word"] = word;
  j["comp"] = e.comp;
  j["cluster"] = e.cluster;
  j["adapted"] = e.adapted;
  j["orbit"] = e.orbit;
  return j.dump();
}

std::string hex64(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex;
  s.width(16);
  s.fill('0');
  s << v;
  return s.str();
}

}  // namespace

std::uint64_t ClassCatalog::hash() const {
  DatumRef d = datum_from_string(type);
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& e : entries) {
    for (unsigned char c : entry_line(e, d.get()) + "\n") h = (h ^ c) * 1099511628211ull;
  }
  return h;
}

int ClassCatalog::cluster_count() const {
  int top = 0;
  for (const auto& e : entries) top = std::max(top, e.cluster);
  return top;
}

bool within_default_budget(const CartanDatum& d) {
  switch (d.family) {
    case Family::A: return d.rank <= 5;
    case Family::B:
    case Family::C: return d.rank <= 4;
    case Family::D: return d.rank == 4;
    case Family::G: return true;
    default: return false;
  }
}

bool budget_override_from_env() {
  const char* v = std::getenv("ARQ_ALLOW_LARGE");
  return v && *v && std::string(v) != "0";
}

ClassCatalog enumerate_classes(DatumRef d, const EnumerationOptions& opts) {
  if (!opts.override_budget && !within_default_budget(*d))
    throw Error(ErrorKind::budget, d->name() + " is outside the default enumeration budget");
  DiagramAutomorphism sigma = opts.sigma ? *opts.sigma : DiagramAutomorphism::star(*d);
  auto words = all_reduced_words(*d, longest_element(*d).word, opts.word_cap);

  ClassCatalog cat;
  cat.type = d->name();
  cat.sigma = sigma.to_string();
  cat.words = words.size();
  std::map<CanonicalForm, std::size_t> seen;
  for (const Word& w : words) {
    auto [it, fresh] = seen.emplace(canonical_key(*d, w), cat.entries.size());
    if (!fresh) continue;
    CatalogEntry e;
    e.word = w;  // words arrive sorted, so the first one is least
    e.comp = sigma_composition(w, sigma);
    e.adapted = is_adapted(*d, w).has_value();
    cat.entries.push_back(std::move(e));
  }
  const int width = static_cast<int>(std::to_string(cat.entries.size()).size());
  for (std::size_t k = 0; k < cat.entries.size(); ++k) {
    std::string id = std::to_string(k + 1);
    cat.entries[k].id = std::string(width - id.size(), '0') + id;
  }
  partition_cluster_points(d, cat);
  return cat;
}

void partition_cluster_points(const DatumRef& d, ClassCatalog& catalog) {
  auto& entries = catalog.entries;
  const std::size_t n = entries.size();
  std::map<Word, std::size_t> by_word;
  for (std::size_t k = 0; k < n; ++k) by_word[entries[k].word] = k;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  for (std::size_t k = 0; k < n; ++k) {
    auto c = CommutationClass::from_word(d, entries[k].word);
    for (int i = 1; i <= d->rank; ++i) {
      for (Side side : {Side::right, Side::left}) {
        auto next = reflect(c, i, side);
        auto it = by_word.find(next.canonical_word());
        if (it == by_word.end())
          throw Error(ErrorKind::inconsistent_labels, "catalog is not closed under reflections");
        parent[root(k)] = root(it->second);
      }
    }
  }
  std::map<std::size_t, int> ids;
  std::map<int, int> sizes;
  for (std::size_t k = 0; k < n; ++k) {
    auto [it, fresh] = ids.emplace(root(k), static_cast<int>(ids.size()) + 1);
    entries[k].cluster = it->second;
    ++sizes[it->second];
  }
  for (auto& e : entries) e.orbit = sizes[e.cluster];
}

void write_catalog(std::ostream& out, const ClassCatalog& catalog) {
  DatumRef d = datum_from_string(catalog.type);
  nlohmann::ordered_json head;
  head["type"] = catalog.type;
  head["classes"] = catalog.entries.size();
  head["words"] = catalog.words;
  head["hash"] = hex64(catalog.hash());
  head["sigma"] = catalog.sigma;
  head["clusters"] = catalog.cluster_count();
  out << head.dump() << '\n';
  for (const auto& e : catalog.entries) out << entry_line(e, d.get()) << '\n';
}

ClassCatalog read_catalog(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::io, "empty catalog");
  ClassCatalog cat;
  std::string hash;
  DatumRef d;
  try {
    auto head = nlohmann::json::parse(line);
    cat.type = head.at("type").get<std::string>();
    cat.words = head.at("words").get<std::uint64_t>();
    cat.sigma = head.value("sigma", "");
    hash = head.at("hash").get<std::string>();
    d = datum_from_string(cat.type);
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto j = nlohmann::json::parse(line);
      CatalogEntry e;
      e.id = j.at("id").get<std::string>();
      e.word = parse_word(*d, j.at("word").get<std::string>());
      e.comp = j.at("comp").get<std::vector<int>>();
      e.cluster = j.at("cluster").get<int>();
      e.adapted = j.at("adapted").get<bool>();
      e.orbit = j.at("orbit").get<int>();
      cat.entries.push_back(std::move(e));
    }
    if (head.at("classes").get<std::size_t>() != cat.entries.size())
      throw Error(ErrorKind::io, "catalog class count does not match its header");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::io, std::string("bad catalog: ") + e.what());
  }
  if (hex64(cat.hash()) != hash) throw Error(ErrorKind::io, "catalog hash mismatch");
  return cat;
}

std::vector<AppendixRow> read_appendix(std::istream& in, const CartanDatum& d) {
  std::vector<AppendixRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string label, word;
    if (!(ls >> label) || label[0] == '#') continue;
    if (!(ls >> word)) throw Error(ErrorKind::parse, "appendix row without a word: " + line);
    rows.push_back({label, parse_word(d, word)});
  }
  return rows;
}

AppendixReport verify_appendix(const CartanDatum& d, const ClassCatalog& catalog,
                               const std::vector<AppendixRow>& rows) {
  AppendixReport report;
  auto dref = datum_from_string(catalog.type);
  if (dref->name() != d.name()) report.diffs.push_back("catalog type " + catalog.type);
  std::map<Word, std::size_t> by_word;
  for (std::size_t k = 0; k < catalog.entries.size(); ++k) by_word[catalog.entries[k].word] = k;

  std::map<std::size_t, std::string> claimed;        // entry -> row label
  std::map<char, int> group_cluster;                 // group letter -> cluster
  std::map<int, char> cluster_group;
  for (const auto& row : rows) {
    if (!is_longest_word(*dref, row.word)) {
      report.diffs.push_back(row.label + ": not a reduced word of the longest element");
      continue;
    }
    auto c = CommutationClass::from_word(dref, row.word);
    auto it = by_word.find(c.canonical_word());
    if (it == by_word.end()) {
      report.diffs.push_back(row.label + ": class missing from the catalog");
      continue;
    }
    auto [prev, fresh] = claimed.emplace(it->second, row.label);
    if (!fresh) report.diffs.push_back(row.label + ": same class as " + prev->second);
    const char group = row.label[0];
    const int cluster = catalog.entries[it->second].cluster;
    auto [g, gnew] = group_cluster.emplace(group, cluster);
    if (!gnew && g->second != cluster)
      report.diffs.push_back(row.label + ": group " + group + " spans several cluster points");
    auto [cg, cnew] = cluster_group.emplace(cluster, group);
    if (!cnew && cg->second != group)
      report.diffs.push_back(row.label + ": cluster point shared with group " + cg->second);
  }
  if (claimed.size() != catalog.entries.size())
    report.diffs.push_back("appendix covers " + std::to_string(claimed.size()) + " of " +
                           std::to_string(catalog.entries.size()) + " classes");
  return report;
}

}  // namespace arq
