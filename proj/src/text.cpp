#include "albert/text.hpp"

#include <array>
#include <sstream>

namespace e6 {

namespace {

constexpr const char* kBasisNames[8] = {"e-1", "ewb", "ew", "e0", "e-0", "e-w", "e-wb", "e1"};

std::string_view trim(std::string_view s, size_t* offset = nullptr) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) {
    if (offset) *offset += s.size();
    return {};
  }
  size_t e = s.find_last_not_of(" \t");
  if (offset) *offset += b;
  return s.substr(b, e - b + 1);
}

// Splits on `sep` at bracket depth zero.
std::vector<std::pair<size_t, std::string_view>> split_depth0(std::string_view s, char sep) {
  std::vector<std::pair<size_t, std::string_view>> parts;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '[' || c == '(') ++depth;
    else if (c == ']' || c == ')') --depth;
    else if (c == sep && depth == 0) {
      parts.emplace_back(start, s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.emplace_back(start, s.substr(start));
  return parts;
}

}  // namespace

std::string to_string(const Octonion& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  os << '[';
  for (unsigned i = 0; i < 8; ++i) {
    if (i) os << ',';
    os << to_string(x.coord(i));
  }
  os << ']';
  return os.str();
}

std::string to_string(const AlbertVector& x) {
  std::ostringstream os;
  os << '(' << to_string(x.a()) << ',' << to_string(x.b()) << ',' << to_string(x.c()) << '|'
     << to_string(x.A()) << ';' << to_string(x.B()) << ';' << to_string(x.C()) << ')';
  return os.str();
}

std::string to_string(const GeneratorSpec& g) {
  if (!kind_takes_param(g.kind())) return to_string(g.kind());
  bool u_param = g.kind() == GenKind::Pu || g.kind() == GenKind::Pup ||
                 g.kind() == GenKind::Pupp || g.kind() == GenKind::PScale;
  return std::string(to_string(g.kind())) + (u_param ? ":u=" : ":x=") + to_string(g.param());
}

std::string to_string(const GeneratorWord& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ';';
    os << to_string(w[i]);
  }
  return os.str();
}

Octonion parse_octonion(const Field& f, std::string_view text) {
  size_t off = 0;
  std::string_view s = trim(text, &off);
  if (s.empty()) throw ParseError(off, "an octonion literal");
  if (s == "0") return Octonion::zero(f);
  for (unsigned i = 0; i < 8; ++i)
    if (s == kBasisNames[i]) return Octonion::basis(f, i);
  if (s.front() != '[') throw ParseError(off, "'[', '0' or a basis name");
  if (s.back() != ']') throw ParseError(off + s.size(), "']'");
  std::string_view body = s.substr(1, s.size() - 2);
  auto parts = split_depth0(body, ',');
  // Extension-field coefficients are bracketed lists themselves, so commas
  // inside brackets stay put; a flat list must have exactly 8 entries, a
  // field with k > 1 may present 8 bracketed entries.
  if (parts.size() != 8)
    throw ParseError(off + 1, "8 coordinates, got " + std::to_string(parts.size()));
  Octonion x(f);
  for (unsigned i = 0; i < 8; ++i) {
    try {
      x.set_coord(i, parse_field_element(f, parts[i].second));
    } catch (const std::exception&) {
      throw ParseError(off + 1 + parts[i].first, "a field element literal");
    }
  }
  return x;
}

AlbertVector parse_albert_vector(const Field& f, std::string_view text) {
  size_t off = 0;
  std::string_view s = trim(text, &off);
  if (s.empty() || s.front() != '(') throw ParseError(off, "'('");
  if (s.back() != ')') throw ParseError(off + s.size(), "')'");
  std::string_view body = s.substr(1, s.size() - 2);
  size_t bar = std::string_view::npos;
  int depth = 0;
  for (size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '[' || body[i] == '(') ++depth;
    else if (body[i] == ']' || body[i] == ')') --depth;
    else if (body[i] == '|' && depth == 0) {
      bar = i;
      break;
    }
  }
  if (bar == std::string_view::npos) throw ParseError(off + 1, "'|' between scalars and octonions");
  auto scalars = split_depth0(body.substr(0, bar), ',');
  if (scalars.size() != 3) throw ParseError(off + 1, "three scalar coordinates a,b,c");
  auto octs = split_depth0(body.substr(bar + 1), ';');
  if (octs.size() != 3) throw ParseError(off + 2 + bar, "three octonions A;B;C");
  std::array<FieldElement, 3> sc;
  for (unsigned i = 0; i < 3; ++i) {
    try {
      sc[i] = parse_field_element(f, scalars[i].second);
    } catch (const std::exception&) {
      throw ParseError(off + 1 + scalars[i].first, "a field element literal");
    }
  }
  std::array<Octonion, 3> oc;
  for (unsigned i = 0; i < 3; ++i) oc[i] = parse_octonion(f, octs[i].second);
  return AlbertVector(sc[0], sc[1], sc[2], oc[0], oc[1], oc[2]);
}

GeneratorSpec parse_generator(const Field& f, std::string_view text) {
  size_t off = 0;
  std::string_view s = trim(text, &off);
  if (s == "tau") return GeneratorSpec(GenKind::Tau);
  if (s == "delta") return GeneratorSpec(GenKind::Delta);
  size_t colon = s.find(':');
  if (colon == std::string_view::npos)
    throw ParseError(off, "'tau', 'delta' or '<kind>:<param>'");
  std::string_view name = s.substr(0, colon);
  static const std::pair<const char*, GenKind> kKinds[] = {
      {"M", GenKind::M},     {"Mp", GenKind::Mp},     {"Mpp", GenKind::Mpp},
      {"L", GenKind::L},     {"Lp", GenKind::Lp},     {"Lpp", GenKind::Lpp},
      {"Pu", GenKind::Pu},   {"Pup", GenKind::Pup},   {"Pupp", GenKind::Pupp},
      {"Pscale", GenKind::PScale},
  };
  for (const auto& [n, k] : kKinds) {
    if (name == n) {
      std::string_view rest = s.substr(colon + 1);
      size_t drop = 0;
      if (rest.rfind("x=", 0) == 0 || rest.rfind("u=", 0) == 0) drop = 2;
      return GeneratorSpec(k, parse_octonion(f, rest.substr(drop)));
    }
  }
  throw ParseError(off, "a generator kind (M, Mp, Mpp, L, Lp, Lpp, Pu, Pup, Pupp, Pscale)");
}

GeneratorWord parse_word(const Field& f, std::string_view text) {
  GeneratorWord w;
  size_t off = 0;
  std::string_view s = trim(text, &off);
  if (s.empty()) return w;
  for (auto& [pos, part] : split_depth0(s, ';')) {
    (void)pos;
    w.push_back(parse_generator(f, part));
  }
  return w;
}

}  // namespace e6
