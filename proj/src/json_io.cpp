#include "unicount/json_io.hpp"

#include <fstream>

namespace unicount {

int body_dim(const Body& b) {
    if (std::holds_alternative<Polygon2>(b)) return 2;
    return std::get<PolytopeN>(b).dim();
}

Int json_to_int(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<unsigned long long>()));
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw input_error("expected an integer, got " + j.dump());
}

json int_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json rat_json(const Rat& v) { return json(rat_str(v)); }

json vec_json(const Vec2& v) { return json::array({int_json(v.x), int_json(v.y)}); }

json vec_json(const VecN& v) {
    json a = json::array();
    for (const Int& c : v) a.push_back(int_json(c));
    return a;
}

Body load_body(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
        throw input_error("polytope file needs \"dim\" and \"vertices\"");
    Int dim_i = json_to_int(j.at("dim"));
    if (dim_i < 2 || !dim_i.fits_sint_p()) throw input_error("dim must be an integer >= 2");
    const int n = static_cast<int>(dim_i.get_si());
    const json& vj = j.at("vertices");
    if (!vj.is_array() || vj.empty()) throw input_error("vertices must be a nonempty array");
    std::vector<VecN> pts;
    for (const json& row : vj) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw input_error("every vertex needs exactly dim coordinates");
        VecN v;
        for (const json& c : row) v.push_back(json_to_int(c));
        pts.push_back(std::move(v));
    }
    if (n == 2) {
        std::vector<Vec2> ps;
        ps.reserve(pts.size());
        for (const VecN& v : pts) ps.push_back({v[0], v[1]});
        return Polygon2::from_points(ps);
    }
    return PolytopeN::from_points(n, std::move(pts));
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw input_error(path + ": " + e.what());
    }
    return j;
}

Body load_body_file(const std::string& path) { return load_body(load_json_file(path)); }

json to_json(const Polygon2& p) {
    json verts = json::array();
    for (const Vec2& v : p.verts()) verts.push_back(vec_json(v));
    return json{{"dim", 2}, {"vertices", verts}};
}

json to_json(const PolytopeN& p) {
    json verts = json::array();
    for (const VecN& v : p.verts()) verts.push_back(vec_json(v));
    return json{{"dim", p.dim()}, {"vertices", verts}};
}

json to_json(const Body& b) {
    if (std::holds_alternative<Polygon2>(b)) return to_json(std::get<Polygon2>(b));
    return to_json(std::get<PolytopeN>(b));
}

json to_json(const Superlattice& s) {
    json rows = json::array();
    for (const VecN& r : s.rows) rows.push_back(vec_json(r));
    return rows;
}

json to_json(const CountRecord& r) {
    return json{{"count", int_json(r.count)},
                {"H", to_json(r.lattice)},
                {"index", int_json(r.lattice.index)}};
}

json to_json(const SweepReport& r) {
    json j{{"tested", int_json(r.tested)}, {"discrepancy", nullptr}};
    if (r.discrepancy) {
        j["discrepancy"] = json{{"H", to_json(r.discrepancy->lattice)},
                                {"index", int_json(r.discrepancy->lattice.index)},
                                {"count_p", int_json(r.discrepancy->count_p)},
                                {"count_q", int_json(r.discrepancy->count_q)}};
    }
    return j;
}

json to_json(const EhrhartPoly& e) {
    json cs = json::array();
    for (const Rat& c : e.coeffs) cs.push_back(rat_json(c));
    return json{{"coeffs", cs}};
}

json to_json(const IdentityCheckReport& r) {
    return json{{"pass", r.pass},
                {"leading_coeff", rat_json(r.leading_coeff)},
                {"volume", rat_json(r.volume)},
                {"second_coeff", rat_json(r.second_coeff)},
                {"half_rvol_sum", rat_json(r.half_rvol_sum)}};
}

json to_json(const NecessaryReport& r) {
    json j{{"pass", r.pass}, {"violation", nullptr}};
    if (r.violation) {
        j["violation"] =
            json{{"z", vec_json(r.violation->z)},
                 {"rvol_p", json::array({rat_json(r.violation->rvol_p_pos),
                                         rat_json(r.violation->rvol_p_neg)})},
                 {"rvol_q", json::array({rat_json(r.violation->rvol_q_pos),
                                         rat_json(r.violation->rvol_q_neg)})}};
    }
    return j;
}

json to_json(const Decision& d) {
    json j{{"equal", d.equal}};
    if (!d.equal) {
        j["fail"] = d.fail;
        if (d.fail == "area") {
            j["area_p"] = int_json(d.area_p);
            j["area_q"] = int_json(d.area_q);
        }
        if (d.witness_class) j["witness_class"] = vec_json(*d.witness_class);
    }
    return j;
}

json to_json(const EdgeProfile& p) {
    json classes = json::array();
    for (const auto& [z, total] : p)
        classes.push_back(json{{"z", vec_json(z)}, {"total", int_json(total)}});
    return json{{"classes", classes}};
}

json to_json(const DecompWitness& w) {
    return json{{"x", to_json(w.x)},
                {"y", to_json(w.y)},
                {"shift_p", vec_json(w.shift_p)},
                {"shift_q", vec_json(w.shift_q)}};
}

json to_json(const SynthReport& r) {
    return json{{"p", to_json(r.p)},
                {"q", to_json(r.q)},
                {"area2_p", int_json(r.area2_p)},
                {"area2_q", int_json(r.area2_q)},
                {"equal", r.decision.equal}};
}

json to_json(const VerifyReport& r) {
    json j{{"pass", r.pass}};
    if (!r.pass) {
        j["failed_check"] = r.failed_check;
        if (!r.side.empty()) j["side"] = r.side;
        if (r.piece_i >= 0) j["piece_i"] = r.piece_i;
        if (r.piece_j >= 0) j["piece_j"] = r.piece_j;
        if (r.failed_check == "b") j["intersection_area2"] = rat_json(r.intersection_area2);
        j["message"] = r.message;
    }
    return j;
}

namespace {

Polygon2 polygon_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw input_error("piece vertices must be a nonempty array");
    std::vector<Vec2> pts;
    for (const json& row : j) {
        if (!row.is_array() || row.size() != 2)
            throw input_error("piece vertices must be integer pairs");
        pts.push_back({json_to_int(row[0]), json_to_int(row[1])});
    }
    return Polygon2::from_points(pts);
}

}  // namespace

EquidecompCert load_cert(const json& j) {
    if (!j.is_object() || !j.contains("pieces_p") || !j.contains("pieces_q"))
        throw input_error("malformed certificate: needs pieces_p and pieces_q");
    EquidecompCert cert;
    const json& pp = j.at("pieces_p");
    const json& qq = j.at("pieces_q");
    if (!pp.is_array() || !qq.is_array() || pp.size() != qq.size() || pp.empty())
        throw input_error("malformed certificate: piece lists must match and be nonempty");
    for (const json& e : pp) {
        if (!e.is_object() || !e.contains("vertices") || !e.contains("motion"))
            throw input_error("malformed certificate: each p piece needs vertices and motion");
        cert.pieces_p.push_back(polygon_from_json(e.at("vertices")));
        const json& mo = e.at("motion");
        if (!mo.is_object() || !mo.contains("translate") || !mo.contains("reflected") ||
            !mo.at("translate").is_array() || mo.at("translate").size() != 2 ||
            !mo.at("reflected").is_boolean())
            throw input_error("malformed certificate: invalid motion");
        Motion m;
        m.translate = {json_to_int(mo.at("translate")[0]), json_to_int(mo.at("translate")[1])};
        m.reflected = mo.at("reflected").get<bool>();
        cert.motions.push_back(m);
    }
    for (const json& e : qq) {
        if (!e.is_object() || !e.contains("vertices"))
            throw input_error("malformed certificate: each q piece needs vertices");
        cert.pieces_q.push_back(polygon_from_json(e.at("vertices")));
    }
    return cert;
}

json to_json(const EquidecompCert& c) {
    json pp = json::array(), qq = json::array();
    for (std::size_t i = 0; i < c.pieces_p.size(); ++i) {
        json verts = json::array();
        for (const Vec2& v : c.pieces_p[i].verts()) verts.push_back(vec_json(v));
        pp.push_back(json{{"vertices", verts},
                          {"motion", json{{"translate", vec_json(c.motions[i].translate)},
                                          {"reflected", c.motions[i].reflected}}}});
    }
    for (const Polygon2& piece : c.pieces_q) {
        json verts = json::array();
        for (const Vec2& v : piece.verts()) verts.push_back(vec_json(v));
        qq.push_back(json{{"vertices", verts}});
    }
    return json{{"pieces_p", pp}, {"pieces_q", qq}};
}

}  // namespace unicount
