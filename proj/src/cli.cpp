#include "splitfox/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "splitfox/dsl.hpp"
#include "splitfox/errors.hpp"
#include "splitfox/field.hpp"
#include "splitfox/foxcalc.hpp"
#include "splitfox/hnn.hpp"
#include "splitfox/json_io.hpp"
#include "splitfox/knotio.hpp"
#include "splitfox/presentation.hpp"
#include "splitfox/reps.hpp"
#include "splitfox/subgroup_graph.hpp"
#include "splitfox/wada.hpp"

namespace splitfox {

namespace {

struct Options {
  std::string present;
  std::string fixture;
  std::string eps;
  std::string rep = "trivial";
  std::string column;
  std::string field = "q";
  std::string gens;
  std::string alphabet;
  std::string pd;
  std::string pd_file;
  std::string splitting;
  std::string splitting_file;
  std::string out_path;
  std::string name;
  bool list = false;
  std::size_t dim = 1;
  long long mod = 2;
  long long limit = -1;
  int from = 0;
  int to = 0;
  int n = 0;
};

ExactField parse_field(const std::string& s) {
  if (s == "q" || s == "Q") return ExactField::rationals();
  if (s.rfind("fp:", 0) == 0) {
    try {
      return ExactField::prime(std::stoll(s.substr(3)));
    } catch (const std::logic_error&) {
      throw parse_error("--field: expected an integer after fp:, got \"" + s.substr(3) + "\"");
    }
  }
  throw parse_error("--field must be q or fp:P, got \"" + s + "\"");
}

// presentation plus the fixture's eps when one was named
std::pair<Presentation, std::optional<Epimorphism>> resolve_presentation(const Options& o) {
  if (!o.fixture.empty() && !o.present.empty())
    throw parse_error("give either --present or --fixture, not both");
  if (!o.fixture.empty()) {
    KnotFixture f = builtin(o.fixture);
    return {std::move(f.presentation), std::move(f.eps)};
  }
  if (!o.present.empty()) return {parse_presentation(o.present), std::nullopt};
  throw parse_error("need a presentation: --present \"< ... >\" or --fixture NAME");
}

Epimorphism resolve_eps(const Options& o, const Presentation& p,
                        const std::optional<Epimorphism>& from_fixture) {
  if (!o.eps.empty()) {
    Epimorphism e;
    std::istringstream in(o.eps);
    std::string item;
    while (std::getline(in, item, ',')) {
      auto pos = item.find('=');
      if (pos == std::string::npos)
        throw parse_error("--eps entries look like gen=value, got \"" + item + "\"");
      std::string g = item.substr(0, pos);
      g.erase(0, g.find_first_not_of(" \t"));
      g.erase(g.find_last_not_of(" \t") + 1);
      try {
        e.values[g] = std::stoll(item.substr(pos + 1));
      } catch (const std::logic_error&) {
        throw parse_error("--eps: expected an integer value in \"" + item + "\"");
      }
    }
    e.validate(p);
    return e;
  }
  if (from_fixture) return *from_fixture;
  return epimorphism_to_Z(p);
}

Representation resolve_rep(const Options& o, const Presentation& p) {
  if (o.rep == "trivial") return trivial_rep(p, parse_field(o.field));
  if (o.rep.rfind("search:", 0) == 0) {
    std::istringstream in(o.rep.substr(7));
    std::string part;
    std::vector<long long> nums;
    while (std::getline(in, part, ':')) {
      try {
        nums.push_back(std::stoll(part));
      } catch (const std::logic_error&) {
        throw parse_error("--rep search: expected integers, got \"" + part + "\"");
      }
    }
    if (nums.size() < 2 || nums.size() > 3)
      throw parse_error("--rep search:DIM:P or search:DIM:P:INDEX");
    std::size_t index = nums.size() == 3 ? static_cast<std::size_t>(nums[2]) : 0;
    auto found = search_homs(p, static_cast<std::size_t>(nums[0]), nums[1], index + 1);
    if (found.size() <= index)
      throw domain_error("--rep search: only " + std::to_string(found.size()) +
                         " representations exist, index " + std::to_string(index) +
                         " is out of range");
    return found[index];
  }
  throw parse_error("--rep must be trivial or search:DIM:P[:INDEX], got \"" + o.rep + "\"");
}

SplittingData resolve_splitting(const Options& o) {
  int sources = (!o.fixture.empty()) + (!o.splitting.empty()) + (!o.splitting_file.empty());
  if (sources != 1)
    throw parse_error("need exactly one of --fixture, --splitting, --splitting-file");
  if (!o.fixture.empty()) {
    KnotFixture f = builtin(o.fixture);
    if (!f.splitting)
      throw domain_error("fixture " + o.fixture + " carries no splitting data");
    return *std::move(f.splitting);
  }
  std::string text = o.splitting;
  if (!o.splitting_file.empty()) {
    std::ifstream in(o.splitting_file);
    if (!in) throw domain_error("cannot read " + o.splitting_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw parse_error("--splitting: malformed JSON");
  return splitting_from_json(j);
}

std::string read_pd_text(const Options& o) {
  if (!o.pd.empty() && !o.pd_file.empty())
    throw parse_error("give either --pd or --pd-file, not both");
  if (!o.pd.empty()) return o.pd;
  if (o.pd_file.empty()) throw parse_error("need a diagram: --pd \"X[...] ...\" or --pd-file");
  std::ifstream in(o.pd_file);
  if (!in) throw domain_error("cannot read " + o.pd_file);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// PD files may hold the JSON form [[1,4,2,5],...] with an optional sign array
PDCode pd_from_text(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("PD JSON: malformed");
    PDCode pd;
    const Json& crossings = j.is_object() ? j.at("crossings") : j;
    for (const auto& x : crossings) {
      if (!x.is_array() || x.size() != 4)
        throw parse_error("PD JSON: each crossing is [a,b,c,d]");
      pd.crossings.push_back({x[0].get<int>(), x[1].get<int>(), x[2].get<int>(),
                              x[3].get<int>()});
    }
    if (j.is_object() && j.contains("signs"))
      pd.signs = j.at("signs").get<std::vector<int>>();
    pd.validate();
    return pd;
  }
  return parse_pd(text);
}

std::vector<std::string> implied_alphabet(const std::vector<Word>& words) {
  std::vector<std::string> alphabet;
  for (const Word& w : words)
    for (const Letter& l : w.letters())
      if (std::find(alphabet.begin(), alphabet.end(), l.gen) == alphabet.end())
        alphabet.push_back(l.gen);
  return alphabet;
}

Presentation padded_to_deficiency(const Presentation& p) {
  if (p.num_relators() + 1 < p.num_generators()) return pad_relators(p, p.num_generators() - 1);
  return p;
}

Json bounds_json(const WadaResult& w, std::size_t dimension) {
  Json b;
  b["genus"] = w.degree ? Json(genus_bound_from_degree(*w.degree, dimension)) : Json(nullptr);
  b["rank"] = w.degree ? Json(rank_bound_from_degree(*w.degree, dimension)) : Json(nullptr);
  return b;
}

void emit(const Json& report, const Options& o, std::ostream& out, std::ostream& err) {
  if (o.out_path.empty()) {
    out << report.dump(2) << "\n";
    return;
  }
  std::ofstream file(o.out_path);
  if (!file) throw domain_error("cannot write " + o.out_path);
  file << report.dump(2) << "\n";
  err << "report written to " << o.out_path << "\n";
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"exact splitting invariants of finitely presented groups"};
  app.require_subcommand(1);

  auto add_presentation_opts = [&](CLI::App* sub) {
    sub->add_option("--present", o.present, "presentation text, e.g. \"< a, b | a b = b a >\"");
    sub->add_option("--fixture", o.fixture, "built-in fixture name (see the fixture verb)");
  };
  auto add_out_opt = [&](CLI::App* sub) {
    sub->add_option("--out", o.out_path, "write the JSON report to this file");
  };
  auto add_rep_opts = [&](CLI::App* sub) {
    sub->add_option("--rep", o.rep, "trivial (default) or search:DIM:P[:INDEX]");
    sub->add_option("--field", o.field, "coefficients for the trivial rep: q or fp:P");
    sub->add_option("--eps", o.eps, "override the map to Z, e.g. \"a=0,b=0,t=1\"");
  };
  auto add_splitting_opts = [&](CLI::App* sub) {
    sub->add_option("--fixture", o.fixture, "built-in fixture with splitting data");
    sub->add_option("--splitting", o.splitting, "splitting data as inline JSON");
    sub->add_option("--splitting-file", o.splitting_file, "file with splitting JSON");
  };

  std::function<Json()> handler;
  auto set = [&](CLI::App* sub, std::function<Json()> h) {
    add_out_opt(sub);
    sub->callback([&handler, h] { handler = h; });
  };

  CLI::App* parse = app.add_subcommand("parse", "parse a presentation and echo it");
  add_presentation_opts(parse);
  set(parse, [&] {
    auto [p, eps] = resolve_presentation(o);
    err << "parsed: " << p.num_generators() << " generators, " << p.num_relators()
        << " relators\n";
    return to_json(p);
  });

  CLI::App* abel = app.add_subcommand("abelianize", "first homology of the presented group");
  add_presentation_opts(abel);
  set(abel, [&] {
    auto [p, eps] = resolve_presentation(o);
    AbelianizationResult a = abelianize(p);
    Json j{{"presentation", to_json(p)}, {"abelianization", to_json(a)}};
    try {
      j["epimorphism_to_Z"] = to_json(epimorphism_to_Z(p));
    } catch (const domain_error&) {
      j["epimorphism_to_Z"] = nullptr;
    }
    err << "H1: free rank " << a.free_rank << ", " << a.torsion.size()
        << " torsion factor(s)\n";
    return j;
  });

  CLI::App* fox = app.add_subcommand("fox", "Fox Jacobian over the integral group ring");
  add_presentation_opts(fox);
  set(fox, [&] {
    auto [p, eps] = resolve_presentation(o);
    FoxMatrix m = fox_jacobian(p);
    err << "Fox Jacobian: " << p.num_relators() << " x " << p.num_generators() << "\n";
    return Json{{"presentation", to_json(p)}, {"jacobian", to_json(m)}};
  });

  CLI::App* fold = app.add_subcommand("fold", "fold subgroup generators into a core graph");
  fold->add_option("--gens", o.gens, "comma-separated generating words")->required();
  fold->add_option("--alphabet", o.alphabet,
                   "ambient free generators (default: symbols in --gens)");
  set(fold, [&] {
    std::vector<Word> words = parse_word_list(o.gens);
    std::vector<std::string> alphabet;
    if (o.alphabet.empty()) {
      alphabet = implied_alphabet(words);
    } else {
      std::istringstream in(o.alphabet);
      std::string item;
      while (std::getline(in, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        alphabet.push_back(item);
      }
    }
    SubgroupGraph g = stallings_fold(alphabet, words);
    err << "rank " << g.rank() << ", " << g.num_vertices() << " vertices, " << g.num_edges()
        << " edges\n";
    return to_json(g);
  });

  CLI::App* repsearch = app.add_subcommand("rep-search", "enumerate maps into GL(d, F_p)");
  add_presentation_opts(repsearch);
  repsearch->add_option("--dim", o.dim, "matrix dimension")->required();
  repsearch->add_option("--mod", o.mod, "prime modulus")->required();
  repsearch->add_option("--limit", o.limit, "stop after this many hits")
      ->check(CLI::NonNegativeNumber);
  set(repsearch, [&] {
    auto [p, eps] = resolve_presentation(o);
    std::optional<std::size_t> limit;
    if (o.limit >= 0) limit = static_cast<std::size_t>(o.limit);
    std::vector<Representation> found = search_homs(p, o.dim, o.mod, limit);
    Json reps = Json::array();
    for (const auto& r : found) reps.push_back(to_json(r));
    err << "found " << found.size() << " representation(s)\n";
    return Json{{"dimension", o.dim}, {"modulus", o.mod}, {"count", found.size()},
                {"representations", reps}};
  });

  CLI::App* wada = app.add_subcommand("wada", "twisted Alexander invariant and bounds");
  add_presentation_opts(wada);
  add_rep_opts(wada);
  wada->add_option("--column", o.column, "generator whose column is deleted");
  set(wada, [&] {
    auto [p0, feps] = resolve_presentation(o);
    Presentation p = padded_to_deficiency(p0);
    Epimorphism eps = resolve_eps(o, p, feps);
    Representation alpha = resolve_rep(o, p);
    std::optional<std::string> column;
    if (!o.column.empty()) column = o.column;
    WadaResult w = wada_invariant(p, eps, alpha, column);
    err << "delta = " << to_string(w.delta) << (w.degree ? "" : " (no information)") << "\n";
    return Json{{"presentation", to_json(p)},
                {"wada", to_json(w)},
                {"bounds", bounds_json(w, alpha.dimension)}};
  });

  CLI::App* bound = app.add_subcommand("bound", "genus and rank lower bounds (error if none)");
  add_presentation_opts(bound);
  add_rep_opts(bound);
  set(bound, [&] {
    auto [p0, feps] = resolve_presentation(o);
    Presentation p = padded_to_deficiency(p0);
    Epimorphism eps = resolve_eps(o, p, feps);
    Representation alpha = resolve_rep(o, p);
    WadaResult w = wada_invariant(p, eps, alpha);
    if (!w.degree)
      throw domain_error("bound undefined: the invariant vanished (no information)");
    long genus = genus_bound_from_degree(*w.degree, alpha.dimension);
    long rank = rank_bound_from_degree(*w.degree, alpha.dimension);
    err << "genus >= " << genus << ", splitting rank >= " << rank << "\n";
    return Json{{"degree", *w.degree},
                {"dimension", alpha.dimension},
                {"genus", genus},
                {"rank", rank},
                {"wada", to_json(w)}};
  });

  CLI::App* hpresent = app.add_subcommand("hnn-present", "presentation of the HNN extension");
  add_splitting_opts(hpresent);
  set(hpresent, [&] {
    SplittingData s = resolve_splitting(o);
    auto [p, eps] = hnn_presentation(s);
    err << "HNN presentation: " << p.num_generators() << " generators, " << p.num_relators()
        << " relators\n";
    return Json{{"presentation", to_json(p)}, {"eps", to_json(eps)},
                {"splitting", to_json(s)}};
  });

  CLI::App* hamalgam = app.add_subcommand("hnn-amalgam", "fiber-sum amalgam presentation");
  add_splitting_opts(hamalgam);
  hamalgam->add_option("--from", o.from, "lowest level")->required();
  hamalgam->add_option("--to", o.to, "highest level")->required();
  set(hamalgam, [&] {
    SplittingData s = resolve_splitting(o);
    Presentation p = amalgam_presentation(s, o.from, o.to);
    err << "amalgam levels " << o.from << ".." << o.to << ": " << p.num_generators()
        << " generators, " << p.num_relators() << " relators\n";
    return to_json(p);
  });

  CLI::App* hinduce = app.add_subcommand("hnn-induce", "splitting induced on a sub-tower");
  add_splitting_opts(hinduce);
  hinduce->add_option("--n", o.n, "tower height (base becomes levels 0..n+1)")->required();
  set(hinduce, [&] {
    SplittingData s = resolve_splitting(o);
    SplittingData ind = induced_splitting(s, o.n);
    err << "induced splitting: base " << ind.base.num_generators() << " generators, B rank "
        << ind.b_gens.size() << "\n";
    return to_json(ind);
  });

  CLI::App* hcheck = app.add_subcommand("hnn-check", "block-structure and degree-bound checks");
  add_splitting_opts(hcheck);
  add_rep_opts(hcheck);
  set(hcheck, [&] {
    SplittingData s = resolve_splitting(o);
    Representation alpha = resolve_rep(o, hnn_presentation(s).first);
    BlockStructureReport blocks = verify_fox_block_structure(s, alpha);
    DegreeBoundReport degrees = degree_bound_check(s, alpha);
    err << "block structure: " << (blocks.ok ? "ok" : "FAILED") << "; degree bound: "
        << (degrees.vacuous ? "vacuous" : degrees.ok ? "ok" : "FAILED") << "\n";
    return Json{{"block_structure", to_json(blocks)}, {"degree_bound", to_json(degrees)}};
  });

  CLI::App* knot = app.add_subcommand("knot-from-pd", "Wirtinger presentation from a PD code");
  knot->add_option("--pd", o.pd, "PD text, e.g. \"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\"");
  knot->add_option("--pd-file", o.pd_file, "file with PD text or JSON [[a,b,c,d],...]");
  knot->add_option("--field", o.field, "coefficients for the Alexander polynomial");
  set(knot, [&] {
    PDCode pd = pd_from_text(read_pd_text(o));
    auto [p, eps] = wirtinger_from_pd(pd);
    LaurentPoly alex = classical_alexander(p, eps, parse_field(o.field));
    err << p.num_generators() << " arcs; Alexander polynomial " << to_string(alex) << "\n";
    return Json{{"presentation", to_json(p)}, {"eps", to_json(eps)},
                {"alexander", to_json(alex)}};
  });

  CLI::App* fixture = app.add_subcommand("fixture", "show a built-in fixture");
  fixture->add_option("--name", o.name, "fixture name");
  fixture->add_flag("--list", o.list, "list fixture names");
  set(fixture, [&] {
    if (o.name.empty() || o.list) {
      err << builtin_names().size() << " fixtures\n";
      return Json{{"fixtures", builtin_names()}};
    }
    KnotFixture f = builtin(o.name);
    err << "fixture " << f.name << "\n";
    return to_json(f);
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    Json report = handler();
    emit(report, o, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace splitfox
