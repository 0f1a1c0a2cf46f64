#pragma once

// Text grammar for polynomials (see docs/grammar.md):
//
//   expr    = term { ("+" | "-") term } ;
//   term    = unary { "*" unary } ;
//   unary   = "-" unary | power ;
//   power   = primary [ "^" [ "-" ] integer ] ;
//   primary = rational | identifier | "(" expr ")" ;
//
// No implicit multiplication; exponents are literals and do not chain.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "russell/poly.hpp"

namespace russell {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);

  /// Zero-based byte offset into the source.
  std::size_t position() const { return position_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

/// Parses and fully expands `src` over `ctx`. Every failure is reported as a
/// ParseError carrying the offending offset.
Polynomial parse(std::string_view src, const ContextPtr& ctx);

/// Inverse of parse on canonical output.
inline std::string print(const Polynomial& f) { return to_string(f); }

}  // namespace russell
