#pragma once

#include <string>
#include <utility>

#include "arq/reflections.hpp"

namespace arq {

// "A5", "e8", case-insensitive.
std::pair<Family, int> parse_type(const std::string& s);
DatumRef datum_from_string(const std::string& s);

// Digit string for rank <= 9, comma separated otherwise (commas always accepted).
Word parse_word(const CartanDatum& d, const std::string& s);
std::string format_word(const CartanDatum& d, const Word& w);

enum class LabelMode { roots, residues, epsilon, interval };
LabelMode parse_label_mode(const std::string& s);

// "a1+2a2+a3", "[2,4]" (type A), "e2-e5" or "2e1" (classical types).
Root parse_root(const CartanDatum& d, const std::string& s);
std::string format_root(const CartanDatum& d, const Root& r, LabelMode mode = LabelMode::roots);
std::string format_pairing(const Pairing& p);

// "(1 3 4)(2)"; unlisted points are fixed.
DiagramAutomorphism parse_cycles(const CartanDatum& d, const std::string& s);

}  // namespace arq
