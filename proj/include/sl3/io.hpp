#pragma once

#include <string>

#include "json.hpp"
#include "sl3/building.hpp"
#include "sl3/growth.hpp"
#include "sl3/webs.hpp"

namespace sl3 {

using Json = nlohmann::json;

// Scalars: [{"e": exponent, "c": "num/den"}, ...] sorted by exponent.
template <class K>
Json scalar_to_json(const Laurent<K>& f);
template <class K>
Laurent<K> scalar_from_json(const Json& j);

// {"field": "Q" | "Fp", "p": prime (Fp only), "columns": [[scalar, scalar, scalar], ...]}
template <class K>
Json lattice_to_json(const Lattice<K>& l);
template <class K>
Lattice<K> lattice_from_json(const Json& j);
// "Q" or "Fp"; for Fp the document's prime (if any) is returned through p.
std::string field_of(const Json& j, long* p = nullptr);

// {"word": "1212", "first_row": [[parts], ...]}
Json diagram_to_json(const GrowthDiagram& d);
GrowthDiagram diagram_from_json(const Json& j);

// {"boundary": nb, "loops": k, "vertices": [[half-edges in clockwise order], ...],
//  "twin": [...], "out": [...]}; vertices 0..nb-1 are the boundary in order.
Json web_to_json(const Web& w);
Web web_from_json(const Json& j);

// {"vertex_count": n, "triangles": [[a,b,c], ...], "edges": [[tail, head], ...], "boundary": [...]}
Json diskoid_to_json(const Diskoid& d);
Diskoid diskoid_from_json(const Json& j);

// [{"coeff": c, "web": web}, ...]
Json combination_to_json(const WebCombination& c);

std::string web_dot(const Web& w);
std::string diskoid_dot(const Diskoid& d);
// Boundary on a circle, everything else at the barycentre of its neighbours.
std::string web_tikz(const Web& w);
std::string diskoid_tikz(const Diskoid& d);

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace sl3
