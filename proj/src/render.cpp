#include "arq/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace arq {

RenderFormat parse_render_format(const std::string& s) {
  if (s == "text") return RenderFormat::text;
  if (s == "dot") return RenderFormat::dot;
  if (s == "json") return RenderFormat::json;
  throw Error(ErrorKind::parse, "unknown render format '" + s + "'");
}

std::string vertex_label(const ARQuiver& q, int position, LabelMode mode) {
  const Vertex& v = q.at(position);
  if (mode == LabelMode::residues) return std::to_string(v.residue);
  return format_root(q.datum(), v.root, mode);
}

namespace {

std::string arrow_glyph(const Pairing& c) {
  if (c == Pairing(1)) return "->";
  if (c == Pairing(2)) return "=>";
  if (c == Pairing(3)) return "≡>";
  return "-(" + format_pairing(c) + ")->";
}

}  // namespace

std::string render_text(const ARQuiver& q, LabelMode mode) {
  const CartanDatum& d = q.datum();
  auto level = level_function(q);
  const int top = q.size() ? *std::max_element(level.begin(), level.end()) : 0;
  std::vector<std::string> labels;
  std::size_t width = 1;
  for (int k = 1; k <= q.size(); ++k) {
    labels.push_back(vertex_label(q, k, mode));
    width = std::max(width, labels.back().size());
  }
  // cell[(row, col)] = position
  std::map<std::pair<int, int>, int> cell;
  for (int k = 1; k <= q.size(); ++k) cell[{q.at(k).residue, top - level[k - 1]}] = k;
  const std::size_t step = width + 2;
  const std::size_t margin = std::to_string(d.rank).size() + 3;

  std::ostringstream out;
  out << d.name() << ' ' << format_word(d, least_reading(q)) << '\n';
  for (int row = 1; row <= d.rank; ++row) {
    std::string line = std::to_string(row);
    line.resize(margin - 2, ' ');
    line += "| ";
    for (int col = 0; col < top; ++col) {
      std::string c;
      auto it = cell.find({row, col});
      if (it != cell.end()) c = labels[it->second - 1];
      c.resize(step, ' ');
      line += c;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
    if (row == d.rank) break;
    std::string link(margin + step * std::max(top, 1), ' ');
    link[margin - 2] = '|';
    bool any = false;
    for (const Arrow& a : q.arrows()) {
      int rs = q.at(a.src).residue, rd = q.at(a.dst).residue;
      int cs = top - level[a.src - 1], cd = top - level[a.dst - 1];
      if (cd != cs + 1 || std::min(rs, rd) != row || std::abs(rs - rd) != 1) continue;
      std::size_t at = margin + step * cs + width + 1;
      char glyph = rs < rd ? '\\' : '/';
      link[at] = (link[at] != ' ' && link[at] != glyph) ? 'X' : glyph;
      any = true;
    }
    while (!link.empty() && link.back() == ' ') link.pop_back();
    out << (any ? link : link.substr(0, margin - 1)) << '\n';
  }
  // Grid order, so the listing only depends on the class.
  std::vector<Arrow> listed(q.arrows().begin(), q.arrows().end());
  auto place = [&](const Arrow& a) {
    return std::tuple{top - level[a.src - 1], q.at(a.src).residue, top - level[a.dst - 1],
                      q.at(a.dst).residue};
  };
  std::sort(listed.begin(), listed.end(),
            [&](const Arrow& x, const Arrow& y) { return place(x) < place(y); });
  out << "arrows:\n";
  for (const Arrow& a : listed)
    out << "  " << labels[a.src - 1] << ' ' << arrow_glyph(a.color) << ' ' << labels[a.dst - 1]
        << '\n';
  return out.str();
}

std::string render_dot(const ARQuiver& q, LabelMode mode) {
  const CartanDatum& d = q.datum();
  std::vector<std::string> ids;
  for (const Vertex& v : q.vertices()) {
    std::string id;
    for (Eigen::Index i = 0; i < v.root.size(); ++i)
      id += (i ? "," : "") + std::to_string(v.root[i]);
    ids.push_back('"' + id + '"');
  }
  std::ostringstream out;
  out << "digraph \"" << d.name() << "\" {\n";
  out << "  node [shape=plaintext];\n";
  for (int k = 1; k <= q.size(); ++k)
    out << "  " << ids[k - 1] << " [label=\"" << vertex_label(q, k, mode) << "\"];\n";
  for (const Arrow& a : q.arrows()) {
    out << "  " << ids[a.src - 1] << " -> " << ids[a.dst - 1];
    if (a.color.denominator() == 1) {
      out << " [weight=" << a.color.numerator();
      if (a.color != Pairing(1)) out << ", penwidth=" << a.color.numerator();
    } else {
      out << " [weight=1, label=\"" << format_pairing(a.color) << "\"";
    }
    out << "];\n";
  }
  for (int row = 1; row <= d.rank; ++row) {
    std::string members;
    for (int k = 1; k <= q.size(); ++k)
      if (q.at(k).residue == row) members += " " + ids[k - 1] + ";";
    if (!members.empty()) out << "  { rank=same;" << members << " }\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

nlohmann::ordered_json color_json(const Pairing& c) {
  if (c.denominator() == 1) return c.numerator();
  return static_cast<double>(c.numerator()) / static_cast<double>(c.denominator());
}

Pairing color_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Pairing(j.get<long long>());
  double v = j.get<double>();
  long long twice = std::llround(v * 2);
  if (twice != v * 2) throw Error(ErrorKind::parse, "colors are multiples of 1/2");
  return Pairing(twice, 2);
}

nlohmann::ordered_json document(const CartanDatum& d, const Word& word,
                                const std::vector<std::optional<Root>>& roots,
                                std::span<const Arrow> arrows) {
  nlohmann::ordered_json j;
  j["type"] = d.name();
  j["word"] = word;
  j["vertices"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < word.size(); ++k) {
    nlohmann::ordered_json v;
    v["k"] = k + 1;
    v["residue"] = word[k];
    if (roots[k]) v["root"] = std::vector<int>(roots[k]->data(), roots[k]->data() + roots[k]->size());
    else v["root"] = nullptr;
    j["vertices"].push_back(v);
  }
  j["arrows"] = nlohmann::ordered_json::array();
  for (const Arrow& a : arrows)
    j["arrows"].push_back({{"src", a.src}, {"dst", a.dst}, {"color", color_json(a.color)}});
  return j;
}

struct Parsed {
  DatumRef datum;
  Word word;
  std::vector<std::optional<Root>> roots;
  std::vector<Arrow> arrows;
};

Parsed parse_document(const std::string& text) {
  Parsed p;
  try {
    auto j = nlohmann::json::parse(text);
    p.datum = datum_from_string(j.at("type").get<std::string>());
    const CartanDatum& d = *p.datum;
    p.word = j.at("word").get<Word>();
    check_word(d, p.word);
    const auto& vs = j.at("vertices");
    if (vs.size() != p.word.size()) throw Error(ErrorKind::parse, "one vertex per letter expected");
    for (std::size_t k = 0; k < vs.size(); ++k) {
      const auto& v = vs[k];
      if (v.at("k").get<std::size_t>() != k + 1 || v.at("residue").get<int>() != p.word[k])
        throw Error(ErrorKind::parse, "vertices must follow the word");
      if (v.at("root").is_null()) {
        p.roots.emplace_back();
        continue;
      }
      auto coeffs = v.at("root").get<std::vector<int>>();
      if (static_cast<int>(coeffs.size()) != d.rank)
        throw Error(ErrorKind::parse, "root has the wrong rank");
      p.roots.emplace_back(Eigen::Map<const Eigen::VectorXi>(coeffs.data(), d.rank));
    }
    for (const auto& a : j.at("arrows"))
      p.arrows.push_back({a.at("src").get<int>(), a.at("dst").get<int>(), color_from_json(a.at("color"))});
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("bad quiver json: ") + e.what());
  }
  return p;
}

}  // namespace

std::string render_json(const ARQuiver& q) {
  std::vector<std::optional<Root>> roots;
  for (const Vertex& v : q.vertices()) roots.emplace_back(v.root);
  return document(q.datum(), q.word(), roots, q.arrows()).dump(2) + "\n";
}

std::string render(const ARQuiver& q, RenderFormat format, LabelMode mode) {
  switch (format) {
    case RenderFormat::text: return render_text(q, mode);
    case RenderFormat::dot: return render_dot(q, mode);
    case RenderFormat::json: return render_json(q);
  }
  return {};
}

ARQuiver quiver_from_json(const std::string& text) {
  Parsed p = parse_document(text);
  std::vector<Vertex> vertices;
  for (std::size_t k = 0; k < p.word.size(); ++k) {
    if (!p.roots[k]) throw Error(ErrorKind::parse, "quiver json has an unknown label");
    vertices.push_back({static_cast<int>(k + 1), p.word[k], *p.roots[k]});
  }
  return ARQuiver(p.datum, p.word, std::move(vertices), std::move(p.arrows));
}

ResidueSkeleton skeleton_from_json(const std::string& text) {
  Parsed p = parse_document(text);
  return {p.datum, p.word, p.roots};
}

std::string skeleton_to_json(const ResidueSkeleton& s) {
  auto arrows = residue_arrows(*s.datum, s.word);
  return document(*s.datum, s.word, s.labels, arrows).dump(2) + "\n";
}

}  // namespace arq
