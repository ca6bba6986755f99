#pragma once

#include <string>

#include "json.hpp"

#include "cfgspace/oracle.hpp"

namespace cfgspace {

using json = nlohmann::json;

// Wire formats, one JSON document per file:
//   BoolElem      [1,0]              0/1 per atom
//   RingSpec      {"p":3,"omega":2}
//   RingElem      [2,0]              residues per atom
//   Point         [[2,0],[1,1]]      one RingElem per coordinate
//   PointedSpace  {"base":P,"generators":[P,...]} or {"empty":true,"n":1}
//   InvariantSeq  [[1,1],[1,0]] or {"empty":true}
//   Polynomial    {"n":1,"monomials":[{"exp":[2],"coeff":[2,2]},...]}
//                 monomials emitted in graded lexicographic order
//   RefMap        {"base":P,"base_image":P,"pairs":[[P,P],...]}

json to_json(const BoolElem& a);
json to_json(const RingSpec& spec);
json to_json(const RingElem& x);
json to_json(const Point& x);
json to_json(const PointedSpace& space);
json to_json(const InvariantSeq& seq);
json to_json(const Polynomial& poly);
json to_json(const RefMap& f);
json to_json(const OracleCheck& check);
json to_json(const OracleReport& report);

BoolElem bool_elem_from_json(const json& j, int omega, const std::string& path);
RingSpec ring_spec_from_json(const json& j, const std::string& path);
RingElem ring_elem_from_json(const json& j, const RingSpec& spec, const std::string& path);
Point point_from_json(const json& j, const RingSpec& spec, const std::string& path);
PointedSpace space_from_json(const json& j, const RingSpec& spec, const std::string& path);
Polynomial polynomial_from_json(const json& j, const RingSpec& spec, const std::string& path);
RefMap refmap_from_json(const json& j, const RingSpec& spec, const std::string& path);

} // namespace cfgspace
