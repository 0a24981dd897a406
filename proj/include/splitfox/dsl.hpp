#pragma once

#include <string>
#include <vector>

#include "splitfox/presentation.hpp"
#include "splitfox/word.hpp"

namespace splitfox {

// Presentation DSL:
//   presentation := '<' gens '|' rels '>'
//   gens         := ident (',' ident)*
//   rels         := [ rel (',' rel)* ]
//   rel          := word [ '=' word ]        (u = v desugars to u v^-1)
//   word         := factor+
//   factor       := ( ident | '(' word ')' ) [ '^' int ]
// ident matches [A-Za-z][A-Za-z0-9_]*, int is a nonzero signed decimal,
// whitespace is insignificant. Errors carry line and column.
Presentation parse_presentation(const std::string& text);

// A standalone word over whatever identifiers it mentions.
Word parse_word(const std::string& text);

// Comma-separated words ("a, b^-1 a b^-1").
std::vector<Word> parse_word_list(const std::string& text);

// Round-trip forms: parse(serialize(p)) == p.
std::string serialize(const Presentation& p);
std::string serialize(const Word& w);  // "a b^-1 a", identity -> "1" (output only)

}  // namespace splitfox
