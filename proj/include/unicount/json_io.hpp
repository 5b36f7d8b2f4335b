#pragma once

#include <json.hpp>
#include <string>
#include <variant>

#include "unicount/ehrhart.hpp"
#include "unicount/lattice.hpp"
#include "unicount/universal.hpp"

namespace unicount {

using json = nlohmann::json;

// a loaded polytope file: planar bodies (degenerate allowed) are polygons,
// higher dimensions are full-dimensional polytopes
using Body = std::variant<Polygon2, PolytopeN>;

int body_dim(const Body& b);

Body load_body(const json& j);
Body load_body_file(const std::string& path);
json load_json_file(const std::string& path);

Int json_to_int(const json& j);
json int_json(const Int& v);
json rat_json(const Rat& v);
json vec_json(const Vec2& v);
json vec_json(const VecN& v);

json to_json(const Polygon2& p);
json to_json(const PolytopeN& p);
json to_json(const Body& b);
json to_json(const Superlattice& s);
json to_json(const CountRecord& r);
json to_json(const SweepReport& r);
json to_json(const EhrhartPoly& e);
json to_json(const IdentityCheckReport& r);
json to_json(const NecessaryReport& r);
json to_json(const Decision& d);
json to_json(const EdgeProfile& p);
json to_json(const DecompWitness& w);
json to_json(const SynthReport& r);
json to_json(const VerifyReport& r);

EquidecompCert load_cert(const json& j);
json to_json(const EquidecompCert& c);

}  // namespace unicount
