#pragma once

#include <json.hpp>

#include "splitfox/foxcalc.hpp"
#include "splitfox/hnn.hpp"
#include "splitfox/knotio.hpp"
#include "splitfox/laurent.hpp"
#include "splitfox/presentation.hpp"
#include "splitfox/reps.hpp"
#include "splitfox/subgroup_graph.hpp"
#include "splitfox/wada.hpp"

namespace splitfox {

// Stable JSON forms. Coefficients are decimal strings ("-3", "2/3"); F_p
// residues print as their canonical representative in [0, p). Polynomials are
// sorted [exponent, coefficient] pairs; all maps iterate in key order, so a
// given computation serializes byte-identically across runs.
using Json = nlohmann::ordered_json;

Json to_json(const ExactField& f);
Json to_json(const LaurentPoly& p);
Json to_json(const RationalFunction& f);
Json to_json(const Word& w);
Json to_json(const Presentation& p);
Json to_json(const Epimorphism& e);
Json to_json(const AbelianizationResult& a);
Json to_json(const SubgroupGraph& g);
Json to_json(const GroupRingElement& e);
Json to_json(const FoxMatrix& m);
Json to_json(const FieldMatrix& m);
Json to_json(const Representation& r);
Json to_json(const WadaResult& w);
Json to_json(const ColumnIndependenceReport& r);
Json to_json(const SplittingData& s);
Json to_json(const BlockStructureReport& r);
Json to_json(const DegreeBoundReport& r);
Json to_json(const KnotFixture& f);

SplittingData splitting_from_json(const Json& j);

}  // namespace splitfox
