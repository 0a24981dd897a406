#include "splitfox/json_io.hpp"

#include "splitfox/dsl.hpp"
#include "splitfox/errors.hpp"

namespace splitfox {

Json to_json(const ExactField& f) {
  Json j;
  if (f.kind() == FieldKind::rationals) {
    j["kind"] = "Q";
  } else {
    j["kind"] = "Fp";
    j["p"] = f.modulus();
  }
  return j;
}

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.coeffs()) terms.push_back({e, p.field().to_string(c)});
  return Json{{"terms", terms}, {"string", to_string(p)}};
}

Json to_json(const RationalFunction& f) {
  return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}, {"string", to_string(f)}};
}

Json to_json(const Word& w) { return serialize(w); }

Json to_json(const Presentation& p) {
  Json rels = Json::array();
  for (const Word& r : p.relators()) rels.push_back(serialize(r));
  return Json{{"generators", p.generators()}, {"relators", rels}, {"string", serialize(p)}};
}

Json to_json(const Epimorphism& e) {
  Json j = Json::object();
  for (const auto& [g, v] : e.values) j[g] = v;
  return j;
}

Json to_json(const AbelianizationResult& a) {
  Json torsion = Json::array();
  for (const Int& t : a.torsion) torsion.push_back(t.str());
  return Json{{"free_rank", a.free_rank}, {"torsion", torsion}};
}

Json to_json(const SubgroupGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges())
    edges.push_back({e.from, g.alphabet()[static_cast<std::size_t>(e.label)], e.to});
  Json basis = Json::array();
  for (const Word& b : g.basis()) basis.push_back(serialize(b));
  Json j{{"alphabet", g.alphabet()},
         {"num_vertices", g.num_vertices()},
         {"basepoint", g.basepoint()},
         {"edges", edges},
         {"rank", g.rank()},
         {"basis", basis}};
  if (auto idx = g.covering_index())
    j["covering_index"] = *idx;
  else
    j["covering_index"] = nullptr;
  return j;
}

Json to_json(const GroupRingElement& e) {
  Json terms = Json::array();
  for (const auto& [w, c] : e.terms()) terms.push_back({serialize(w), c.str()});
  return Json{{"terms", terms}, {"string", to_string(e)}};
}

Json to_json(const FoxMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    rows.push_back(r);
  }
  return rows;
}

Json to_json(const FieldMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.field().to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const Representation& r) {
  Json images = Json::object();
  for (const auto& [g, m] : r.images) images[g] = to_json(m);
  return Json{{"dimension", r.dimension}, {"field", to_json(r.field)}, {"images", images}};
}

Json to_json(const WadaResult& w) {
  Json j{{"deleted_column", w.deleted_column},
         {"Q", to_json(w.Q)},
         {"denominator", to_json(w.denom)},
         {"delta", to_json(w.delta)},
         {"minors_evaluated", w.minors_evaluated}};
  if (w.degree)
    j["degree"] = *w.degree;
  else
    j["degree"] = nullptr;
  return j;
}

Json to_json(const ColumnIndependenceReport& r) {
  Json per = Json::array();
  for (const auto& [label, res] : r.per_column)
    per.push_back(Json{{"label", label}, {"result", to_json(res)}});
  return Json{{"ok", r.ok},
              {"vacuous", r.vacuous},
              {"pairs_compared", r.pairs_compared},
              {"per_column", per}};
}

Json to_json(const SplittingData& s) {
  Json b_gens = Json::array();
  for (const Word& w : s.b_gens) b_gens.push_back(serialize(w));
  Json phi = Json::array();
  for (const Word& w : s.phi_images) phi.push_back(serialize(w));
  return Json{{"base", to_json(s.base)},
              {"b_gens", b_gens},
              {"phi_images", phi},
              {"stable", s.stable},
              {"monomorphism_verified", s.monomorphism_verified}};
}

Json to_json(const BlockStructureReport& r) {
  Json support = Json::array();
  for (const auto& row : r.row_t_support) support.push_back(row);
  return Json{{"ok", r.ok},
              {"base_rows", r.base_rows},
              {"splitting_rows", r.splitting_rows},
              {"row_t_support", support}};
}

Json to_json(const DegreeBoundReport& r) {
  return Json{{"ok", r.ok},       {"vacuous", r.vacuous}, {"degree", r.degree},
              {"bound", r.bound}, {"slack", r.slack},     {"wada", to_json(r.wada)}};
}

Json to_json(const KnotFixture& f) {
  Json j{{"name", f.name}, {"presentation", to_json(f.presentation)}, {"eps", to_json(f.eps)}};
  j["known_genus"] = f.known_genus ? Json(*f.known_genus) : Json(nullptr);
  j["known_alexander"] = f.known_alexander ? to_json(*f.known_alexander) : Json(nullptr);
  j["splitting"] = f.splitting ? to_json(*f.splitting) : Json(nullptr);
  return j;
}

SplittingData splitting_from_json(const Json& j) {
  for (const char* key : {"base", "b_gens", "phi_images", "stable"})
    if (!j.contains(key))
      throw domain_error(std::string("splitting JSON: missing field \"") + key + "\"");

  Presentation base = [&] {
    const Json& b = j.at("base");
    if (b.is_string()) return parse_presentation(b.get<std::string>());
    std::vector<std::string> gens = b.at("generators").get<std::vector<std::string>>();
    std::vector<Word> rels;
    if (b.contains("relators"))
      for (const auto& r : b.at("relators")) rels.push_back(parse_word(r.get<std::string>()));
    return Presentation(std::move(gens), std::move(rels));
  }();

  auto words = [](const Json& arr) {
    std::vector<Word> ws;
    for (const auto& w : arr) ws.push_back(parse_word(w.get<std::string>()));
    return ws;
  };
  return SplittingData::make(std::move(base), words(j.at("b_gens")), words(j.at("phi_images")),
                             j.at("stable").get<std::string>());
}

}  // namespace splitfox
