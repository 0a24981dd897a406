#include "splitfox/dsl.hpp"

#include <cctype>

#include "splitfox/errors.hpp"

namespace splitfox {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t i = 0;
  int line = 1, col = 1;

  void advance() {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  }
  void skip_ws() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) advance();
  }
  char peek() {
    skip_ws();
    return i < text.size() ? text[i] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }
  void expect(char c, const std::string& what) {
    if (!eat(c)) throw parse_error("expected '" + std::string(1, c) + "' " + what, line, col);
  }
  [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, line, col); }

  std::string ident() {
    skip_ws();
    if (i >= text.size() || !std::isalpha(static_cast<unsigned char>(text[i])))
      fail("expected a generator name");
    std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                               text[i] == '_'))
      advance();
    return text.substr(start, i - start);
  }

  int exponent() {
    skip_ws();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) advance();
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) advance();
    std::string s = text.substr(start, i - start);
    if (s.empty() || s == "-" || s == "+") fail("expected an integer exponent");
    int e = std::stoi(s);
    if (e == 0) fail("exponent must be nonzero");
    return e;
  }

  bool at_factor_start() {
    char c = peek();
    return c == '(' || std::isalpha(static_cast<unsigned char>(c));
  }

  Word factor() {
    Word base;
    if (eat('(')) {
      base = word();
      expect(')', "to close the parenthesized word");
    } else {
      base = Word::letter(ident());
    }
    if (eat('^')) return base.pow(exponent());
    return base;
  }

  Word word() {
    if (!at_factor_start()) fail("expected a word");
    Word w = factor();
    while (at_factor_start()) w = w * factor();
    return w;
  }

  Word relator() {
    Word u = word();
    if (eat('=')) return u * word().inverse();
    return u;
  }

  void expect_end() {
    if (peek() != '\0') fail("unexpected trailing input");
  }
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Cursor c{text};
  c.expect('<', "to open the presentation");
  std::vector<std::string> gens;
  gens.push_back(c.ident());
  while (c.eat(',')) gens.push_back(c.ident());
  c.expect('|', "between generators and relators");
  std::vector<Word> rels;
  if (c.at_factor_start()) {
    rels.push_back(c.relator());
    while (c.eat(',')) rels.push_back(c.relator());
  }
  c.expect('>', "to close the presentation");
  c.expect_end();
  try {
    return Presentation(std::move(gens), std::move(rels));
  } catch (const domain_error& e) {
    throw parse_error(e.what(), c.line, c.col);
  }
}

Word parse_word(const std::string& text) {
  Cursor c{text};
  Word w = c.word();
  c.expect_end();
  return w;
}

std::vector<Word> parse_word_list(const std::string& text) {
  Cursor c{text};
  std::vector<Word> ws;
  ws.push_back(c.word());
  while (c.eat(',')) ws.push_back(c.word());
  c.expect_end();
  return ws;
}

std::string serialize(const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    int e = ls[i].sign * static_cast<int>(j - i);
    if (!out.empty()) out += ' ';
    out += ls[i].gen;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

std::string serialize(const Presentation& p) {
  std::string out = "< ";
  for (std::size_t i = 0; i < p.num_generators(); ++i) {
    if (i) out += ", ";
    out += p.generators()[i];
  }
  out += " |";
  for (std::size_t i = 0; i < p.num_relators(); ++i) {
    out += i ? ", " : " ";
    out += serialize(p.relators()[i]);
  }
  out += " >";
  return out;
}

}  // namespace splitfox
