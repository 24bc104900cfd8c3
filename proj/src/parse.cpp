#include "arq/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace arq {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Signed terms "coef letter index", e.g. "2a3", "-e5", "+a1".
std::vector<std::pair<int, int>> linear_terms(const std::string& body, char letter) {
  std::vector<std::pair<int, int>> terms;
  std::size_t p = 0;
  while (p < body.size()) {
    int sign = 1;
    if (body[p] == '+' || body[p] == '-') {
      sign = body[p] == '-' ? -1 : 1;
      ++p;
    } else if (!terms.empty()) {
      throw Error(ErrorKind::parse, "expected + or - in '" + body + "'");
    }
    std::size_t q = p;
    while (q < body.size() && std::isdigit(static_cast<unsigned char>(body[q]))) ++q;
    int coef = q > p ? std::stoi(body.substr(p, q - p)) : 1;
    if (q >= body.size() || std::tolower(static_cast<unsigned char>(body[q])) != letter)
      throw Error(ErrorKind::parse, std::string("expected '") + letter + "' in '" + body + "'");
    p = ++q;
    while (q < body.size() && std::isdigit(static_cast<unsigned char>(body[q]))) ++q;
    if (q == p) throw Error(ErrorKind::parse, "missing index in '" + body + "'");
    terms.emplace_back(sign * coef, std::stoi(body.substr(p, q - p)));
    p = q;
  }
  if (terms.empty()) throw Error(ErrorKind::parse, "empty root literal");
  return terms;
}

bool classical(const CartanDatum& d) {
  return d.family == Family::A || d.family == Family::B || d.family == Family::C ||
         d.family == Family::D;
}

}  // namespace

std::pair<Family, int> parse_type(const std::string& raw) {
  std::string s = trim(raw);
  if (s.size() < 2) throw Error(ErrorKind::invalid_type, "bad type '" + raw + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  std::string digits = s.substr(1);
  if (f < 'A' || f > 'G' || !all_digits(digits) || digits.size() > 3)
    throw Error(ErrorKind::invalid_type, "bad type '" + raw + "'");
  return {static_cast<Family>(f - 'A'), std::stoi(digits)};
}

DatumRef datum_from_string(const std::string& s) {
  auto [f, n] = parse_type(s);
  return make_datum(f, n);
}

Word parse_word(const CartanDatum& d, const std::string& raw) {
  std::string s = trim(raw);
  Word w;
  if (s.find(',') != std::string::npos || d.rank > 9) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok = trim(tok);
      if (!all_digits(tok)) throw Error(ErrorKind::malformed_word, "bad letter '" + tok + "'");
      w.push_back(std::stoi(tok));
    }
  } else {
    for (char c : s) {
      if (c == ' ') continue;
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(ErrorKind::malformed_word, std::string("bad letter '") + c + "'");
      w.push_back(c - '0');
    }
  }
  for (int c : w)
    if (c < 1 || c > d.rank)
      throw Error(ErrorKind::malformed_word,
                  "letter " + std::to_string(c) + " out of range for " + d.name());
  return w;
}

std::string format_word(const CartanDatum& d, const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (d.rank > 9 && k) s += ',';
    s += std::to_string(w[k]);
  }
  return s;
}

LabelMode parse_label_mode(const std::string& s) {
  if (s == "roots") return LabelMode::roots;
  if (s == "residues") return LabelMode::residues;
  if (s == "epsilon") return LabelMode::epsilon;
  if (s == "interval") return LabelMode::interval;
  throw Error(ErrorKind::parse, "unknown label mode '" + s + "'");
}

Root parse_root(const CartanDatum& d, const std::string& raw) {
  std::string s = strip_spaces(raw);
  Root r = Root::Zero(d.rank);
  if (s.empty()) throw Error(ErrorKind::parse, "empty root literal");
  if (s.front() == '[') {
    if (d.family != Family::A || s.back() != ']')
      throw Error(ErrorKind::parse, "interval literals need type A");
    std::string body = s.substr(1, s.size() - 2);
    auto comma = body.find(',');
    std::string lo = body.substr(0, comma), hi = comma == std::string::npos ? lo : body.substr(comma + 1);
    if (!all_digits(lo) || !all_digits(hi)) throw Error(ErrorKind::parse, "bad interval '" + raw + "'");
    int a = std::stoi(lo), b = std::stoi(hi);
    if (a < 1 || b > d.rank || a > b) throw Error(ErrorKind::not_a_root, "bad interval '" + raw + "'");
    for (int i = a; i <= b; ++i) r[i - 1] = 1;
  } else if (s.find('e') != std::string::npos || s.find('E') != std::string::npos) {
    if (!classical(d)) throw Error(ErrorKind::parse, "epsilon literals need a classical type");
    Eigen::VectorXi e = Eigen::VectorXi::Zero(epsilon_basis(d).rows());
    for (auto [coef, idx] : linear_terms(s, 'e')) {
      if (idx < 1 || idx > e.size()) throw Error(ErrorKind::parse, "epsilon index out of range");
      e[idx - 1] += coef;
    }
    r = from_epsilon(d, e);
  } else if (s.find('a') != std::string::npos || s.find('A') != std::string::npos) {
    for (auto [coef, idx] : linear_terms(s, 'a')) {
      if (idx < 1 || idx > d.rank) throw Error(ErrorKind::parse, "simple root index out of range");
      r[idx - 1] += coef;
    }
  } else {
    std::stringstream ss(s);
    std::string tok;
    int k = 0;
    while (std::getline(ss, tok, ',')) {
      if (k >= d.rank) throw Error(ErrorKind::parse, "too many coefficients");
      r[k++] = std::stoi(tok);
    }
    if (k != d.rank) throw Error(ErrorKind::parse, "too few coefficients");
  }
  if (!is_root(d, r)) throw Error(ErrorKind::not_a_root, "'" + raw + "' is not a root of " + d.name());
  return r;
}

namespace {

std::string linear_form(const Eigen::VectorXi& v, char letter) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    int c = v[i];
    if (c == 0) continue;
    if (c < 0) s += '-';
    else if (!s.empty()) s += '+';
    if (std::abs(c) != 1) s += std::to_string(std::abs(c));
    s += letter;
    s += std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string format_root(const CartanDatum& d, const Root& r, LabelMode mode) {
  if (mode == LabelMode::epsilon && classical(d))
    return linear_form(epsilon_coordinates(d, r), 'e');
  if (mode == LabelMode::interval && d.family == Family::A) {
    int a = 0, b = 0;
    bool ok = true;
    for (int i = 0; i < r.size(); ++i) {
      if (r[i] == 0) continue;
      ok = ok && r[i] == 1 && (!a || b == i);
      if (!a) a = i + 1;
      b = i + 1;
    }
    if (ok && a) return a == b ? "[" + std::to_string(a) + "]"
                               : "[" + std::to_string(a) + "," + std::to_string(b) + "]";
  }
  return linear_form(r.cast<int>(), 'a');
}

std::string format_pairing(const Pairing& p) {
  if (p.denominator() == 1) return std::to_string(p.numerator());
  return std::to_string(p.numerator()) + "/" + std::to_string(p.denominator());
}

DiagramAutomorphism parse_cycles(const CartanDatum& d, const std::string& raw) {
  std::string s = trim(raw);
  if (s == "*" || s == "star") return DiagramAutomorphism::star(d);
  if (s.empty() || s == "id" || s == "()") return DiagramAutomorphism::identity(d);
  std::vector<int> image(d.rank);
  for (int i = 0; i < d.rank; ++i) image[i] = i + 1;
  std::vector<char> seen(d.rank, 0);
  std::size_t p = 0;
  while (p < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[p]))) {
      ++p;
      continue;
    }
    if (s[p] != '(') throw Error(ErrorKind::parse, "expected '(' in '" + raw + "'");
    auto close = s.find(')', p);
    if (close == std::string::npos) throw Error(ErrorKind::parse, "unclosed cycle in '" + raw + "'");
    std::string body = s.substr(p + 1, close - p - 1);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::stringstream ss(body);
    std::vector<int> cycle;
    std::string tok;
    while (ss >> tok) {
      if (!all_digits(tok)) throw Error(ErrorKind::parse, "bad cycle entry '" + tok + "'");
      int v = std::stoi(tok);
      if (v < 1 || v > d.rank) throw Error(ErrorKind::invalid_automorphism, "cycle entry out of range");
      if (seen[v - 1]) throw Error(ErrorKind::invalid_automorphism, "repeated cycle entry");
      seen[v - 1] = 1;
      cycle.push_back(v);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      image[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    p = close + 1;
  }
  return DiagramAutomorphism(d, image);
}

}  // namespace arq
