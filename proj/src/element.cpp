#include "crowns/element.hpp"

#include <charconv>
#include <string_view>

#include "crowns/errors.hpp"

namespace crowns {

std::string element_name(const Element& e, Naming naming) {
  if (naming == Naming::Crown && (e.row == 1 || e.row == 2)) {
    return (e.row == 1 ? "a" : "b") + std::to_string(e.pos);
  }
  return "x" + std::to_string(e.row) + "." + std::to_string(e.pos);
}

std::string pair_label(const CriticalPair& cp, Naming naming) {
  if (naming == Naming::Crown) return element_name(cp.lower, naming) + element_name(cp.upper, naming);
  return element_name(cp.lower, naming) + "|" + element_name(cp.upper, naming);
}

std::string dual_label(const CriticalPair& cp, Naming naming) {
  if (naming == Naming::Crown) return element_name(cp.upper, naming) + element_name(cp.lower, naming);
  return element_name(cp.upper, naming) + "|" + element_name(cp.lower, naming);
}

namespace {

// Reads a decimal number at `text[at]`, advancing `at`.
int read_int(std::string_view text, std::size_t& at) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + at, text.data() + text.size(), value);
  if (ec != std::errc{} || ptr == text.data() + at) {
    throw ParameterError("malformed label: " + std::string(text));
  }
  at = static_cast<std::size_t>(ptr - text.data());
  return value;
}

Element read_element(std::string_view text, std::size_t& at) {
  if (at >= text.size()) throw ParameterError("malformed label: " + std::string(text));
  char tag = text[at++];
  if (tag == 'a' || tag == 'b') return Element{tag == 'a' ? 1 : 2, read_int(text, at)};
  if (tag != 'x') throw ParameterError("malformed label: " + std::string(text));
  int row = read_int(text, at);
  if (at >= text.size() || text[at] != '.') throw ParameterError("malformed label: " + std::string(text));
  ++at;
  return Element{row, read_int(text, at)};
}

}  // namespace

CriticalPair parse_pair_label(const std::string& text) {
  const bool layered = !text.empty() && text[0] == 'x';
  std::size_t at = 0;
  CriticalPair cp;
  cp.lower = read_element(text, at);
  if (layered) {
    if (at >= text.size() || text[at] != '|') throw ParameterError("expected '|' in label: " + text);
    ++at;
  }
  if (at >= text.size() || (text[at] == 'x') != layered) {
    throw ParameterError("malformed label: " + text);
  }
  cp.upper = read_element(text, at);
  if (at != text.size()) throw ParameterError("trailing characters in label: " + text);
  return cp;
}

}  // namespace crowns
