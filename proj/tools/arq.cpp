// Command-line front end for the AR quiver library.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "arq/enumeration.hpp"
#include "arq/render.hpp"
#include "arq/simple_pairs.hpp"

namespace {

using namespace arq;

std::string comp_string(const std::vector<int>& comp) {
  std::string s = "(";
  for (std::size_t k = 0; k < comp.size(); ++k) s += (k ? "," : "") + std::to_string(comp[k]);
  return s + ")";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Common {
  std::string type, word, render = "text", labels = "roots";
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial AR quivers of reduced words"};
  app.require_subcommand(1);

  Common build;
  auto* c_build = app.add_subcommand("build", "Build the quiver of a reduced word");
  c_build->add_option("type", build.type, "Cartan type, e.g. A5")->required();
  c_build->add_option("word", build.word, "Reduced word")->required();
  c_build->add_option("--render", build.render, "text, dot or json")
      ->check(CLI::IsMember({"text", "dot", "json"}));
  c_build->add_option("--labels", build.labels, "roots, residues, epsilon or interval")
      ->check(CLI::IsMember({"roots", "residues", "epsilon", "interval"}));

  Common order;
  std::string root_a, root_b;
  auto* c_order = app.add_subcommand("order", "Compare two roots in the convex order");
  c_order->add_option("type", order.type)->required();
  c_order->add_option("word", order.word)->required();
  c_order->add_option("a", root_a, "Root literal")->required();
  c_order->add_option("b", root_b, "Root literal")->required();

  Common readings;
  bool want_count = false, want_list = false;
  std::size_t cap = kDefaultReadingCap;
  auto* c_readings = app.add_subcommand("readings", "Compatible readings of the quiver");
  c_readings->add_option("type", readings.type)->required();
  c_readings->add_option("word", readings.word)->required();
  auto* count_flag = c_readings->add_flag("--count", want_count, "Print the number of readings");
  c_readings->add_flag("--list", want_list, "List every reading")->excludes(count_flag);
  c_readings->add_option("--cap", cap, "Maximum number of listed readings");

  Common refl;
  std::string side;
  int index = 0;
  auto* c_reflect = app.add_subcommand("reflect", "Apply a reflection map to the class");
  c_reflect->add_option("type", refl.type)->required();
  c_reflect->add_option("word", refl.word)->required();
  c_reflect->add_option("--side", side, "l or r")->required()->check(CLI::IsMember({"l", "r"}));
  c_reflect->add_option("--index", index, "Simple index")->required();
  c_reflect->add_option("--render", refl.render)->check(CLI::IsMember({"text", "dot", "json"}));
  c_reflect->add_option("--labels", refl.labels)
      ->check(CLI::IsMember({"roots", "residues", "epsilon", "interval"}));

  Common compose;
  std::string sigma = "*";
  auto* c_compose = app.add_subcommand("compose", "Letter counts per automorphism orbit");
  c_compose->add_option("type", compose.type)->required();
  c_compose->add_option("word", compose.word)->required();
  c_compose->add_option("--sigma", sigma, "Cycle notation, * for the star involution");

  Common adapted;
  auto* c_adapted = app.add_subcommand("adapted", "Find the Dynkin quiver a word is adapted to");
  c_adapted->add_option("type", adapted.type)->required();
  c_adapted->add_option("word", adapted.word)->required();

  Common enumerate;
  std::string out_path, enum_sigma = "*";
  bool allow_large = false;
  auto* c_enumerate = app.add_subcommand("enumerate", "Catalog every class of the longest element");
  c_enumerate->add_option("type", enumerate.type)->required();
  c_enumerate->add_option("--out", out_path, "Write the catalog here instead of stdout");
  c_enumerate->add_option("--sigma", enum_sigma, "Automorphism for the compositions");
  c_enumerate->add_flag("--allow-large", allow_large, "Ignore the default rank budget");

  Common cluster;
  std::string catalog_path;
  auto* c_cluster = app.add_subcommand("cluster", "Summarize cluster points");
  c_cluster->add_option("type", cluster.type)->required();
  c_cluster->add_option("--catalog", catalog_path, "Catalog written by enumerate");
  c_cluster->add_flag("--allow-large", allow_large);

  Common appendix;
  std::string expected_path;
  auto* c_verify = app.add_subcommand("verify-appendix", "Check a table of class representatives");
  c_verify->add_option("type", appendix.type)->required();
  c_verify->add_option("--expected", expected_path, "Rows of label and word")->required();
  c_verify->add_option("--catalog", catalog_path);

  Common pair;
  std::size_t budget = kDefaultPairBudget;
  auto* c_pair = app.add_subcommand("simple-pair", "Decide whether a pair is simple for the class");
  c_pair->add_option("type", pair.type)->required();
  c_pair->add_option("word", pair.word)->required();
  c_pair->add_option("a", root_a)->required();
  c_pair->add_option("b", root_b)->required();
  c_pair->add_option("--budget", budget, "Maximum sequences examined");

  std::string skeleton_path;
  auto* c_infer = app.add_subcommand("infer", "Complete a partially labeled quiver (json)");
  c_infer->add_option("input", skeleton_path, "Quiver json with null roots")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto quiver_of = [](const Common& c) {
      auto d = datum_from_string(c.type);
      return build_upsilon(d, parse_word(*d, c.word));
    };

    if (*c_build) {
      auto q = quiver_of(build);
      std::cout << render(q, parse_render_format(build.render), parse_label_mode(build.labels));
    } else if (*c_order) {
      auto q = quiver_of(order);
      const auto& d = q.datum();
      Root a = parse_root(d, root_a), b = parse_root(d, root_b);
      std::string rel = a == b               ? "="
                        : convex_leq(q, a, b) ? "<"
                        : convex_leq(q, b, a) ? ">"
                                              : "incomparable";
      std::cout << root_a << ' ' << rel << ' ' << root_b << '\n';
    } else if (*c_readings) {
      auto q = quiver_of(readings);
      if (want_list) {
        for (const Word& w : compatible_readings(q, cap)) std::cout << format_word(q.datum(), w) << '\n';
      } else {
        std::cout << count_readings(q) << '\n';
      }
    } else if (*c_reflect) {
      auto c = CommutationClass(quiver_of(refl));
      auto next = reflect(c, index, side == "r" ? Side::right : Side::left);
      std::cout << format_word(c.datum(), next.canonical_word()) << '\n';
      if (c_reflect->count("--render"))
        std::cout << render(next.quiver(), parse_render_format(refl.render),
                            parse_label_mode(refl.labels));
    } else if (*c_compose) {
      auto d = datum_from_string(compose.type);
      Word w = parse_word(*d, compose.word);
      auto s = parse_cycles(*d, sigma);
      std::cout << comp_string(sigma_composition(w, s)) << ' ' << s.to_string() << '\n';
    } else if (*c_adapted) {
      auto d = datum_from_string(adapted.type);
      Word w = parse_word(*d, adapted.word);
      if (!is_reduced(*d, w)) throw Error(ErrorKind::not_reduced, "word is not reduced");
      auto q = is_adapted(*d, w);
      if (q) std::cout << "adapted " << q->to_string() << '\n';
      else std::cout << "not adapted\n";
    } else if (*c_enumerate) {
      auto d = datum_from_string(enumerate.type);
      EnumerationOptions opts;
      opts.sigma = parse_cycles(*d, enum_sigma);
      opts.override_budget = allow_large || budget_override_from_env();
      auto cat = enumerate_classes(d, opts);
      if (out_path.empty()) {
        write_catalog(std::cout, cat);
      } else {
        std::ofstream out(out_path);
        if (!out) throw Error(ErrorKind::io, "cannot write " + out_path);
        write_catalog(out, cat);
        std::cout << cat.entries.size() << " classes, " << cat.words << " words, "
                  << cat.cluster_count() << " cluster points\n";
      }
    } else if (*c_cluster) {
      auto d = datum_from_string(cluster.type);
      ClassCatalog cat;
      if (catalog_path.empty()) {
        EnumerationOptions opts;
        opts.override_budget = allow_large || budget_override_from_env();
        cat = enumerate_classes(d, opts);
      } else {
        std::istringstream in(read_file(catalog_path));
        cat = read_catalog(in);
      }
      std::map<int, std::set<std::vector<int>>> comps;
      std::map<int, int> sizes;
      std::map<int, int> adapted_count;
      for (const auto& e : cat.entries) {
        comps[e.cluster].insert(e.comp);
        ++sizes[e.cluster];
        adapted_count[e.cluster] += e.adapted;
      }
      std::cout << cat.type << ": " << cat.entries.size() << " classes, " << sizes.size()
                << " cluster points\n";
      for (auto [id, n] : sizes) {
        std::cout << "cluster " << id << ": " << n << " classes, comp";
        for (const auto& c : comps[id]) std::cout << ' ' << comp_string(c);
        std::cout << ", " << adapted_count[id] << " adapted\n";
      }
    } else if (*c_verify) {
      auto d = datum_from_string(appendix.type);
      ClassCatalog cat;
      if (catalog_path.empty()) {
        EnumerationOptions opts;
        opts.override_budget = budget_override_from_env();
        cat = enumerate_classes(d, opts);
      } else {
        std::istringstream in(read_file(catalog_path));
        cat = read_catalog(in);
      }
      std::istringstream rows_in(read_file(expected_path));
      auto rows = read_appendix(rows_in, *d);
      auto report = verify_appendix(*d, cat, rows);
      for (const auto& diff : report.diffs) std::cout << diff << '\n';
      std::cout << rows.size() << " rows, " << report.diffs.size() << " diffs\n";
      return report.ok() ? 0 : 1;
    } else if (*c_pair) {
      auto c = CommutationClass(quiver_of(pair));
      const auto& d = c.datum();
      auto v = is_class_simple_pair(c, parse_root(d, root_a), parse_root(d, root_b), budget);
      if (v.simple) {
        const char* why = v.reason == SimpleReason::incomparable ? "incomparable"
                          : v.reason == SimpleReason::sectional  ? "sectional"
                                                                 : "exhaustive";
        std::cout << "simple (" << why << ")\n";
      } else {
        std::cout << "not simple, below:";
        for (const Root& r : *v.witness) std::cout << ' ' << format_root(d, r);
        std::cout << '\n';
      }
    } else if (*c_infer) {
      auto result = infer_labels(skeleton_from_json(read_file(skeleton_path)));
      std::cout << render_json(result.quiver);
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    // Malformed literals are usage errors; everything else is a domain error.
    bool usage = e.kind() == ErrorKind::invalid_type || e.kind() == ErrorKind::malformed_word ||
                 e.kind() == ErrorKind::parse;
    return usage ? 2 : 1;
  }
  return 0;
}
