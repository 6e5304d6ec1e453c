#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ldbraid/artin.hpp"
#include "ldbraid/freeword.hpp"
#include "ldbraid/ldalg.hpp"

namespace ldbraid {

// Byte offsets [start, end) into the input string.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

struct parse_error : std::runtime_error {
  parse_error(const std::string& message, SourceSpan s)
      : std::runtime_error(message), span(s) {}
  SourceSpan span;
};

// Free words: whitespace-separated factors `x<digits>` with an optional
// `^<signed nonzero integer>`, e.g. "x1 x2^3 x1^-1". Empty input or the
// lone literal "1" is the identity. The result is reduced.
FreeWord parse_free_word(std::string_view text);

// Braid words: whitespace-separated letters `s<digits>` with an optional
// `^-1` and nothing else (powers must be written out), e.g. "s1 s2^-1 s1".
// Empty input or "1" is the empty word. The letter sequence is taken
// literally and never reduced.
BraidWord parse_braid_word(std::string_view text);

// LD terms: term := atom | term '*' term, atom := 'x' | '(' term ')'.
// '*' is left-associative: "x*x*x" parses as "(x*x)*x".
LdTerm parse_ld_term(std::string_view text);

// Inverses of the parsers: parse(print(v)) == v for every value. Printed
// free words are reduced (they always are), braid words keep their letter
// sequence, and terms carry minimal parentheses under left associativity.
std::string print_free_word(const FreeWord& w);
std::string print_braid_word(const BraidWord& b);
std::string print_ld_term(const LdTerm& t);

// Fixture-file convention: one value per line, '#' starts a comment, blank
// lines ignored. Returns the surviving value strings.
std::vector<std::string> fixture_lines(std::string_view text);

}  // namespace ldbraid
