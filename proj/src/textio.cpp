#include "ldbraid/textio.hpp"

#include <charconv>
#include <cstdint>

namespace ldbraid {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::size_t skip_ws(std::string_view text, std::size_t pos) {
  while (pos < text.size() && is_space(text[pos])) ++pos;
  return pos;
}

// Parses the digits starting at `pos` into a positive generator index.
int parse_index(std::string_view text, std::size_t& pos, std::size_t factor_start) {
  const std::size_t digits_start = pos;
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  if (pos == digits_start) {
    throw parse_error("expected a generator index", SourceSpan{factor_start, pos});
  }
  int index = 0;
  const auto res = std::from_chars(text.data() + digits_start, text.data() + pos, index);
  if (res.ec == std::errc::result_out_of_range) {
    throw parse_error("generator index out of range", SourceSpan{digits_start, pos});
  }
  if (index == 0) {
    throw parse_error("generator index must be >= 1", SourceSpan{digits_start, pos});
  }
  return index;
}

// Requires the factor to end here: whitespace or end of input.
void expect_boundary(std::string_view text, std::size_t pos, std::size_t factor_start) {
  if (pos < text.size() && !is_space(text[pos])) {
    throw parse_error("malformed factor", SourceSpan{factor_start, pos + 1});
  }
}

// Handles the lone literal "1": returns true when the whole input is "1".
bool lone_identity(std::string_view text, std::size_t& pos, bool nothing_parsed_yet) {
  if (text[pos] != '1') return false;
  const std::size_t start = pos;
  ++pos;
  const std::size_t after = skip_ws(text, pos);
  if (!nothing_parsed_yet || after != text.size()) {
    throw parse_error("'1' must stand alone", SourceSpan{start, start + 1});
  }
  pos = after;
  return true;
}

std::int64_t parse_signed_exponent(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  std::size_t number_start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    if (text[pos] == '+') number_start = pos + 1;  // from_chars rejects a leading '+'
    ++pos;
  }
  const std::size_t digits_start = pos;
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  if (pos == digits_start) {
    throw parse_error("expected an integer exponent after '^'", SourceSpan{start, pos});
  }
  std::int64_t value = 0;
  const auto res = std::from_chars(text.data() + number_start, text.data() + pos, value);
  if (res.ec != std::errc{}) {
    throw parse_error("exponent out of range", SourceSpan{start, pos});
  }
  if (value == 0) {
    throw parse_error("exponent must be nonzero", SourceSpan{start, pos});
  }
  return value;
}

}  // namespace

FreeWord parse_free_word(std::string_view text) {
  std::vector<Syllable> raw;
  std::size_t pos = skip_ws(text, 0);
  while (pos < text.size()) {
    const std::size_t factor_start = pos;
    if (lone_identity(text, pos, raw.empty())) break;
    if (text[pos] != 'x') {
      throw parse_error("expected a factor 'x<digits>'", SourceSpan{pos, pos + 1});
    }
    ++pos;
    const int index = parse_index(text, pos, factor_start);
    std::int64_t exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exponent = parse_signed_exponent(text, pos);
    }
    expect_boundary(text, pos, factor_start);
    raw.push_back(Syllable{index, exponent});
    pos = skip_ws(text, pos);
  }
  return reduce(raw);
}

BraidWord parse_braid_word(std::string_view text) {
  BraidWord word;
  std::size_t pos = skip_ws(text, 0);
  while (pos < text.size()) {
    const std::size_t letter_start = pos;
    if (lone_identity(text, pos, word.empty())) break;
    if (text[pos] != 's') {
      throw parse_error("expected a letter 's<digits>'", SourceSpan{pos, pos + 1});
    }
    ++pos;
    const int index = parse_index(text, pos, letter_start);
    int sign = +1;
    if (pos < text.size() && text[pos] == '^') {
      const std::size_t caret = pos;
      if (text.size() - pos < 3 || text[pos + 1] != '-' || text[pos + 2] != '1') {
        std::size_t end = pos + 1;
        while (end < text.size() && !is_space(text[end])) ++end;
        throw parse_error("only ^-1 is allowed on a braid letter", SourceSpan{caret, end});
      }
      pos += 3;
      sign = -1;
    }
    expect_boundary(text, pos, letter_start);
    word.letters.push_back(BraidLetter{index, sign});
    pos = skip_ws(text, pos);
  }
  return word;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  LdTerm run() {
    LdTerm t = parse_term();
    pos_ = skip_ws(text_, pos_);
    if (pos_ != text_.size()) {
      throw parse_error("stray input after term", SourceSpan{pos_, text_.size()});
    }
    return t;
  }

 private:
  LdTerm parse_term() {
    LdTerm acc = parse_atom();
    for (;;) {
      pos_ = skip_ws(text_, pos_);
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        acc = LdTerm::node(acc, parse_atom());
      } else {
        return acc;
      }
    }
  }

  LdTerm parse_atom() {
    pos_ = skip_ws(text_, pos_);
    if (pos_ >= text_.size()) {
      throw parse_error("expected 'x' or '('", SourceSpan{pos_, pos_});
    }
    const char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      return LdTerm::leaf();
    }
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      LdTerm t = parse_term();
      pos_ = skip_ws(text_, pos_);
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw parse_error("unbalanced '('", SourceSpan{open, open + 1});
      }
      ++pos_;
      return t;
    }
    throw parse_error("expected 'x' or '('", SourceSpan{pos_, pos_ + 1});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LdTerm parse_ld_term(std::string_view text) { return TermParser(text).run(); }

std::string print_free_word(const FreeWord& w) {
  if (w.is_identity()) return "1";
  std::string out;
  bool first = true;
  for (const Syllable& s : w.syllables()) {
    if (!first) out += ' ';
    first = false;
    out += 'x';
    out += std::to_string(s.index);
    if (s.exponent != 1) {
      out += '^';
      out += std::to_string(s.exponent);
    }
  }
  return out;
}

std::string print_braid_word(const BraidWord& b) {
  if (b.empty()) return "1";
  std::string out;
  bool first = true;
  for (const BraidLetter& l : b.letters) {
    if (!first) out += ' ';
    first = false;
    out += 's';
    out += std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

namespace {

void print_term_rec(const LdTerm& t, std::string& out) {
  if (t.is_leaf()) {
    out += 'x';
    return;
  }
  print_term_rec(t.left(), out);  // a left child never needs parentheses
  out += '*';
  const LdTerm& r = t.right();
  if (r.is_leaf()) {
    out += 'x';
  } else {
    out += '(';
    print_term_rec(r, out);
    out += ')';
  }
}

}  // namespace

std::string print_ld_term(const LdTerm& t) {
  std::string out;
  print_term_rec(t, out);
  return out;
}

std::vector<std::string> fixture_lines(std::string_view text) {
  std::vector<std::string> values;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::size_t begin = 0;
    while (begin < line.size() && is_space(line[begin])) ++begin;
    std::size_t end = line.size();
    while (end > begin && is_space(line[end - 1])) --end;
    if (end > begin) values.emplace_back(line.substr(begin, end - begin));
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  return values;
}

}  // namespace ldbraid
