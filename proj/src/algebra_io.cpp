#include "voa24/algebra_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace voa24 {

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw std::invalid_argument("cannot parse algebra '" + std::string(text) +
                              "': " + why);
}

long read_number(std::string_view text, size_t& pos, std::string_view what) {
  size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) parse_fail(text, "expected " + std::string(what));
  long value = 0;
  for (size_t i = start; i < pos; ++i) value = value * 10 + (text[i] - '0');
  return value;
}

std::string ideal_token(const LeveledSimple& s) {
  std::ostringstream os;
  os << type_name(s.type) << "," << s.level;
  return os.str();
}

std::string grouped(const std::vector<LeveledSimple>& ideals) {
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < ideals.size()) {
    size_t j = i;
    while (j < ideals.size() && ideals[j] == ideals[i]) ++j;
    if (!first) os << " ";
    os << ideal_token(ideals[i]);
    if (j - i > 1) os << "^" << (j - i);
    first = false;
    i = j;
  }
  if (first) os << "(trivial)";
  return os.str();
}

}  // namespace

SemisimpleAlgebra parse_algebra(std::string_view text) {
  SemisimpleAlgebra g;
  size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos == text.size()) parse_fail(text, "empty input");
  while (pos < text.size()) {
    const char fc = text[pos];
    auto fam = family_from_letter(static_cast<char>(std::toupper(static_cast<unsigned char>(fc))));
    if (!fam) parse_fail(text, std::string("unknown family letter '") + fc + "'");
    ++pos;
    const long rank = read_number(text, pos, "rank");
    if (pos >= text.size() || text[pos] != ',')
      parse_fail(text, "expected ',' before the level");
    ++pos;
    const long level = read_number(text, pos, "level");
    long mult = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      mult = read_number(text, pos, "multiplicity");
      if (mult < 1) parse_fail(text, "multiplicity must be positive");
    }
    std::vector<LeveledSimple> parts;
    try {
      parts = canonicalize_leveled(*fam, static_cast<int>(rank), level);
    } catch (const std::invalid_argument& e) {
      parse_fail(text, e.what());
    }
    for (long m = 0; m < mult; ++m)
      for (const auto& p : parts) g.ideals.push_back(p);
    skip_space();
  }
  return g;
}

std::string print_algebra(const SemisimpleAlgebra& g) { return grouped(g.ideals); }

std::string canonical_string(const SemisimpleAlgebra& g) {
  return grouped(g.canonical_key());
}

std::string print_weight(const Weight& w) {
  std::ostringstream os;
  bool any = false;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    if (any) os << "+";
    if (w[i] != 1) os << to_string(w[i]) << "*";
    os << "w" << (i + 1);
    any = true;
  }
  if (!any) return "0";
  return os.str();
}

std::string weight_coords(const Weight& w) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << to_string(w[i]);
  }
  return os.str();
}

Weight parse_weight(std::string_view text, int rank) {
  std::vector<Rational> coords;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw std::invalid_argument("empty weight coordinate");
    coords.push_back(Rational(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ',') flush();
    else if (!std::isspace(static_cast<unsigned char>(c))) token += c;
  }
  flush();
  if (static_cast<int>(coords.size()) != rank)
    throw std::invalid_argument("expected " + std::to_string(rank) +
                                " coordinates, got " + std::to_string(coords.size()));
  Vec w(rank);
  for (int i = 0; i < rank; ++i) {
    coords[i].canonicalize();
    w[i] = coords[i];
  }
  return w;
}

std::string print_twist(const TwistElement& h) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < h.parts.size(); ++i) {
    if (i) os << " | ";
    os << print_weight(h.parts[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace voa24
