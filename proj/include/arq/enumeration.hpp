#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arq/reflections.hpp"

namespace arq {

struct CatalogEntry {
  std::string id;
  Word word;  // least reading
  std::vector<int> comp;
  int cluster = 0;
  bool adapted = false;
  int orbit = 0;  // size of the cluster point
};

struct ClassCatalog {
  std::string type;
  std::string sigma;  // cycle notation used for comp
  std::uint64_t words = 0;
  std::vector<CatalogEntry> entries;

  std::uint64_t hash() const;
  int cluster_count() const;
};

struct EnumerationOptions {
  std::optional<DiagramAutomorphism> sigma;  // defaults to star
  bool override_budget = false;
  std::size_t word_cap = kDefaultWordCap;
};

// Default rank budget: A up to 5, B and C up to 4, D4, G2.
bool within_default_budget(const CartanDatum& d);
// True when ARQ_ALLOW_LARGE is set to a nonempty value other than 0.
bool budget_override_from_env();

// All classes of the longest element, sorted by least reading, with
// cluster points filled in.
ClassCatalog enumerate_classes(DatumRef d, const EnumerationOptions& opts = {});
// Union of reflection orbits; rewrites cluster and orbit fields.
void partition_cluster_points(const DatumRef& d, ClassCatalog& catalog);

void write_catalog(std::ostream& out, const ClassCatalog& catalog);
ClassCatalog read_catalog(std::istream& in);

struct AppendixRow {
  std::string label;  // group letter then number, e.g. B07
  Word word;
};
std::vector<AppendixRow> read_appendix(std::istream& in, const CartanDatum& d);

struct AppendixReport {
  std::vector<std::string> diffs;
  bool ok() const { return diffs.empty(); }
};
AppendixReport verify_appendix(const CartanDatum& d, const ClassCatalog& catalog,
                               const std::vector<AppendixRow>& rows);

}  // namespace arq
