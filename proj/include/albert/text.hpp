#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "albert/orbits.hpp"

namespace e6 {

/// Parse failure with the offset into the input and what was expected there.
class ParseError : public std::runtime_error {
 public:
  ParseError(size_t pos, const std::string& expected)
      : std::runtime_error("parse error at offset " + std::to_string(pos) + ": expected " +
                           expected),
        pos_(pos) {}
  size_t pos() const { return pos_; }

 private:
  size_t pos_;
};

std::string to_string(const Octonion& x);
std::string to_string(const AlbertVector& x);
std::string to_string(const GeneratorSpec& g);
std::string to_string(const GeneratorWord& w);

/// "[f,...,f]" (eight field-element literals), a named basis shorthand
/// (e-1, ewb, ew, e0, e-0, e-w, e-wb, e1), or "0".
Octonion parse_octonion(const Field& f, std::string_view text);

/// "(a,b,c|O;O;O)" where O follows the octonion grammar.
AlbertVector parse_albert_vector(const Field& f, std::string_view text);

/// "tau", "delta", or "<kind>:x=<octonion>" (P families use u=).
GeneratorSpec parse_generator(const Field& f, std::string_view text);

/// Semicolon-separated generator literals.
GeneratorWord parse_word(const Field& f, std::string_view text);

}  // namespace e6
