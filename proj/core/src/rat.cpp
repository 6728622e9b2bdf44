#include "lnd/rat.hpp"

#include <cctype>

#include "lnd/errors.hpp"

namespace lnd {

Rat rat_from_string(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> Rat {
    throw ParseError("rational", msg + " in \"" + std::string(text) + "\"", 1,
                     pos + 1);
  };

  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t num_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos == num_begin) return fail("expected digits");
  Int num(std::string(text.substr(num_begin, pos - num_begin)), 10);

  Int den(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t den_begin = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == den_begin) return fail("expected denominator digits");
    den = Int(std::string(text.substr(den_begin, pos - den_begin)), 10);
    if (den == 0) return fail("zero denominator");
  }
  if (pos != text.size()) return fail("trailing characters");

  Rat value(num, den);
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

bool rat_is_integer(const Rat& value) { return value.get_den() == 1; }

}  // namespace lnd
