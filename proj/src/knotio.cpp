#include "splitfox/knotio.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "splitfox/dsl.hpp"
#include "splitfox/errors.hpp"

namespace splitfox {

void PDCode::validate() const {
  if (crossings.empty()) throw domain_error("PD code: no crossings");
  if (!signs.empty() && signs.size() != crossings.size())
    throw domain_error("PD code: sign list length does not match crossing count");
  for (int s : signs)
    if (s != -1 && s != 0 && s != 1)
      throw domain_error("PD code: crossing signs must be -1, 0, or +1");
  int n2 = static_cast<int>(crossings.size()) * 2;
  std::vector<int> count(n2 + 1, 0);
  for (const auto& x : crossings)
    for (int e : x) {
      if (e < 1 || e > n2)
        throw domain_error("PD code: edge label " + std::to_string(e) + " out of range 1.." +
                           std::to_string(n2));
      ++count[e];
    }
  for (int e = 1; e <= n2; ++e)
    if (count[e] != 2)
      throw domain_error("PD code: edge label " + std::to_string(e) + " appears " +
                         std::to_string(count[e]) + " times, expected 2");
}

PDCode parse_pd(const std::string& text) {
  PDCode pd;
  std::size_t i = 0;
  int line = 1, col = 1;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) advance();
  };
  auto expect = [&](char c) {
    if (i >= text.size() || text[i] != c)
      throw parse_error(std::string("PD code: expected '") + c + "'", line, col);
    advance();
  };
  auto read_int = [&] {
    skip_ws();
    std::size_t start = i;
    if (i < text.size() && text[i] == '-') advance();
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) advance();
    if (i == start || (text[start] == '-' && i == start + 1))
      throw parse_error("PD code: expected an integer", line, col);
    return std::stoi(text.substr(start, i - start));
  };

  skip_ws();
  if (i >= text.size()) throw parse_error("PD code: empty input", line, col);
  while (i < text.size()) {
    if (text[i] != 'X') throw parse_error("PD code: expected 'X'", line, col);
    advance();
    expect('[');
    std::array<int, 4> x{};
    for (int k = 0; k < 4; ++k) {
      x[static_cast<std::size_t>(k)] = read_int();
      skip_ws();
      if (k < 3) expect(',');
    }
    expect(']');
    pd.crossings.push_back(x);
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      advance();  // crossings may be comma-separated
      skip_ws();
    }
  }
  pd.validate();
  return pd;
}

std::pair<Presentation, Epimorphism> wirtinger_from_pd(const PDCode& pd) {
  pd.validate();
  int n = static_cast<int>(pd.crossings.size());
  int n2 = 2 * n;

  // arcs = edge classes joined across every crossing's over-strand (b and d)
  std::vector<int> parent(n2 + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  for (const auto& x : pd.crossings) {
    int rb = find(x[1]), rd = find(x[3]);
    if (rb != rd) parent[std::max(rb, rd)] = std::min(rb, rd);
  }

  std::map<int, std::string> arc_gen;  // class root (its minimum) -> generator
  std::vector<std::string> gens;
  for (int e = 1; e <= n2; ++e) {
    int r = find(e);
    if (!arc_gen.count(r)) {
      arc_gen[r] = "x" + std::to_string(arc_gen.size() + 1);
      gens.push_back(arc_gen[r]);
    }
  }
  if (static_cast<int>(gens.size()) != n)
    throw domain_error("PD code: expected one arc per crossing (is this a knot diagram?)");
  auto gen_of = [&](int e) { return arc_gen.at(find(e)); };

  std::vector<Word> rels;
  for (int c = 0; c < n; ++c) {
    const auto& x = pd.crossings[static_cast<std::size_t>(c)];
    int sign = pd.signs.empty() ? 0 : pd.signs[static_cast<std::size_t>(c)];
    if (sign == 0) {
      // over-strand orientation from the edge numbering: b -> d if d follows b
      if (x[3] == x[1] % n2 + 1)
        sign = 1;
      else if (x[1] == x[3] % n2 + 1)
        sign = -1;
      else
        throw domain_error("PD code: crossing " + std::to_string(c + 1) +
                           " handedness is ambiguous; supply explicit signs");
    }
    // outgoing under-arc = over-arc^s * incoming under-arc * over-arc^-s
    Word in = Word::letter(gen_of(x[0]));
    Word out = Word::letter(gen_of(x[2]));
    Word over = Word::letter(gen_of(x[1]), sign);
    rels.push_back(out.inverse() * over * in * over.inverse());
  }
  rels.pop_back();  // any one Wirtinger relator is a consequence of the rest

  Epimorphism eps;
  for (const auto& g : gens) eps.values[g] = 1;
  Presentation p(std::move(gens), std::move(rels));
  eps.validate(p);
  return {std::move(p), std::move(eps)};
}

namespace {

LaurentPoly int_poly(std::initializer_list<std::pair<long, long>> coeffs) {
  ExactField q = ExactField::rationals();
  LaurentPoly p(q);
  for (const auto& [e, c] : coeffs) p = p + LaurentPoly::monomial(q, e, q.from_int(c));
  return p;
}

KnotFixture from_splitting(const std::string& name, SplittingData s, std::optional<int> genus,
                           std::optional<LaurentPoly> alexander) {
  auto [p, eps] = hnn_presentation(s);
  return {name, std::move(p), std::move(eps), genus, std::move(alexander), std::move(s)};
}

}  // namespace

KnotFixture builtin(const std::string& name) {
  if (name == "unknot") {
    Presentation p({"a"}, {});
    return {name, p, Epimorphism{{{"a", 1}}}, 0, int_poly({{0, 1}}), std::nullopt};
  }
  if (name == "trefoil") {
    Presentation p = parse_presentation("< a, b | a b a = b a b >");
    return {name, p, Epimorphism{{{"a", 1}, {"b", 1}}}, 1, int_poly({{0, 1}, {1, -1}, {2, 1}}),
            std::nullopt};
  }
  if (name == "figure8") {
    auto [p, eps] =
        wirtinger_from_pd(parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"));
    return {name, std::move(p), std::move(eps), 1, int_poly({{0, 1}, {1, -3}, {2, 1}}),
            std::nullopt};
  }
  if (name == "5_2") {
    SplittingData s = SplittingData::make(
        Presentation({"a", "b"}, {}), {parse_word("a"), parse_word("b^-1 a b^-1")},
        {parse_word("b"), parse_word("(b^-1 a)^2")}, "t");
    return from_splitting(name, std::move(s), 1, int_poly({{0, 2}, {1, -3}, {2, 2}}));
  }
  if (name == "5_2_rank3") {
    SplittingData s = SplittingData::make(
        Presentation({"a", "b", "c"}, {}),
        {parse_word("a"), parse_word("b^-1 a b^-1"), parse_word("b^-2 a b^-2")},
        {parse_word("b"), parse_word("b^-1 a b^-1 a"), parse_word("c")}, "t");
    return from_splitting(name, std::move(s), 1, int_poly({{0, 2}, {1, -3}, {2, 2}}));
  }
  if (name == "bs_1_2") {
    SplittingData s = SplittingData::make(Presentation({"a"}, {}), {parse_word("a")},
                                          {parse_word("a^2")}, "t");
    return from_splitting(name, std::move(s), std::nullopt, int_poly({{0, -2}, {1, 1}}));
  }
  throw domain_error("unknown fixture: " + name + " (known: unknot, trefoil, figure8, 5_2, "
                     "5_2_rank3, bs_1_2)");
}

std::vector<std::string> builtin_names() {
  return {"unknot", "trefoil", "figure8", "5_2", "5_2_rank3", "bs_1_2"};
}

}  // namespace splitfox
