#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "unicount/json_io.hpp"
#include "unicount/randgen.hpp"

namespace uc = unicount;

namespace {

enum ExitCode { kOk = 0, kNegative = 1, kInputError = 2, kInternalError = 3 };

std::vector<uc::Int> parse_int_list(const std::string& s, char sep) {
    std::vector<uc::Int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(uc::parse_int(tok));
    if (out.empty()) throw uc::input_error("empty list: " + s);
    return out;
}

// rows separated by ';', entries by ','
std::vector<uc::VecN> parse_matrix(const std::string& s) {
    std::vector<uc::VecN> rows;
    std::stringstream ss(s);
    std::string row;
    while (std::getline(ss, row, ';')) rows.push_back(parse_int_list(row, ','));
    return rows;
}

long budget_from_env() {
    const char* env = std::getenv("UNICOUNT_BUDGET");
    if (!env) return uc::kDefaultSweepBudget;
    uc::Int b = uc::parse_int(env);
    if (b < 1 || !b.fits_slong_p()) throw uc::input_error("UNICOUNT_BUDGET must be a positive integer");
    return b.get_si();
}

void emit(const uc::json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

std::string str(const uc::Vec2& v) { return "(" + v.x.get_str() + "," + v.y.get_str() + ")"; }

std::string str(const uc::VecN& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

std::string str(const uc::Polygon2& p) {
    std::string s;
    for (const uc::Vec2& v : p.verts()) s += (s.empty() ? "" : " ") + str(v);
    return s;
}

std::string str(const uc::Superlattice& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.rows.size(); ++i) out += (i ? "; " : "") + str(s.rows[i]).substr(1, str(s.rows[i]).size() - 2);
    return out + "]";
}

void emit_sweep(const uc::SweepReport& rep, bool pretty) {
    if (!pretty) {
        emit(uc::to_json(rep), false);
        return;
    }
    if (rep.discrepancy) {
        std::cout << "discrepancy at index " << rep.discrepancy->lattice.index.get_str()
                  << ", H = " << str(rep.discrepancy->lattice) << ": counts "
                  << rep.discrepancy->count_p.get_str() << " vs "
                  << rep.discrepancy->count_q.get_str() << " ("
                  << rep.tested.get_str() << " superlattices tested)\n";
    } else {
        std::cout << "no discrepancy among " << rep.tested.get_str() << " superlattices\n";
    }
}

void emit_decision(const uc::Decision& d, bool pretty) {
    if (!pretty) {
        emit(uc::to_json(d), false);
        return;
    }
    if (d.equal) {
        std::cout << "equal: yes\n";
    } else if (d.fail == "area") {
        std::cout << "equal: no (doubled areas " << d.area_p.get_str() << " vs "
                  << d.area_q.get_str() << ")\n";
    } else if (d.witness_class) {
        std::cout << "equal: no (edge profiles differ at class " << str(*d.witness_class)
                  << ")\n";
    } else {
        std::cout << "equal: no (degenerate shapes differ)\n";
    }
}

uc::Superlattice lattice_from_flags(const std::string& dilate_s, const std::string& lattice_s,
                                    int dim) {
    if (!dilate_s.empty() && !lattice_s.empty())
        throw uc::input_error("--dilate and --lattice are mutually exclusive");
    if (!dilate_s.empty()) {
        std::vector<uc::Int> ks = parse_int_list(dilate_s, ',');
        if (static_cast<int>(ks.size()) != dim)
            throw uc::input_error("dilation needs one factor per dimension");
        return uc::dilation(ks);
    }
    if (!lattice_s.empty()) {
        std::vector<uc::VecN> rows = parse_matrix(lattice_s);
        return uc::hnf_canonicalize(dim, std::move(rows));
    }
    std::vector<uc::Int> ones(dim, 1);
    return uc::dilation(ones);
}

struct SweepArgs {
    std::string p_file, q_file;
    long max_index = 20;
    int jobs = 1;
    bool pretty = false;
};

uc::SweepReport run_sweep(const SweepArgs& a) {
    uc::Body p = uc::load_body_file(a.p_file);
    uc::Body q = uc::load_body_file(a.q_file);
    if (uc::body_dim(p) != uc::body_dim(q)) throw uc::input_error("dimension mismatch");
    const long budget = budget_from_env();
    if (std::holds_alternative<uc::Polygon2>(p))
        return uc::sweep(std::get<uc::Polygon2>(p), std::get<uc::Polygon2>(q), a.max_index,
                         a.jobs, budget);
    return uc::sweep(std::get<uc::PolytopeN>(p), std::get<uc::PolytopeN>(q), a.max_index, a.jobs,
                     budget);
}

int run(int argc, char** argv) {
    CLI::App app{"exact counting of lattice points in polytopes over superlattices"};
    app.require_subcommand(1);

    // count
    auto* count_cmd = app.add_subcommand("count", "count |P ∩ L'| for one superlattice");
    std::string count_file, count_dilate, count_lattice;
    bool count_pretty = false;
    count_cmd->add_option("file", count_file, "polytope JSON file")->required();
    count_cmd->add_option("--dilate", count_dilate, "dilation factors k1,k2,...");
    count_cmd->add_option("--lattice", count_lattice, "integer matrix rows a,b;c,d (canonicalized)");
    count_cmd->add_flag("--pretty", count_pretty, "human-readable output");

    // check-equal
    auto* check_cmd = app.add_subcommand("check-equal", "compare the counting functions of P and Q");
    std::string check_p, check_q, check_mode = "exact2d";
    SweepArgs check_sweep;
    bool check_pretty = false;
    check_cmd->add_option("p", check_p, "P JSON file")->required();
    check_cmd->add_option("q", check_q, "Q JSON file")->required();
    check_cmd->add_option("--mode", check_mode, "exact2d | necessary | sweep")
        ->check(CLI::IsMember({"exact2d", "necessary", "sweep"}));
    check_cmd->add_option("--max-index", check_sweep.max_index, "sweep bound (sweep mode)");
    check_cmd->add_option("--jobs", check_sweep.jobs, "parallel jobs for sweep (0 = auto)");
    check_cmd->add_flag("--pretty", check_pretty, "human-readable output");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "compare counts over all superlattices up to an index");
    SweepArgs sweep_args;
    sweep_cmd->add_option("p", sweep_args.p_file, "P JSON file")->required();
    sweep_cmd->add_option("q", sweep_args.q_file, "Q JSON file")->required();
    sweep_cmd->add_option("--max-index", sweep_args.max_index, "largest superlattice index");
    sweep_cmd->add_option("--jobs", sweep_args.jobs, "parallel jobs (0 = auto)");
    sweep_cmd->add_flag("--pretty", sweep_args.pretty, "human-readable output");

    // decompose
    auto* dec_cmd = app.add_subcommand("decompose", "find summands X, Y with P = X+Y and Q = X-Y up to translation");
    std::string dec_p, dec_q;
    bool dec_pretty = false;
    dec_cmd->add_option("p", dec_p, "P JSON file")->required();
    dec_cmd->add_option("q", dec_q, "Q JSON file")->required();
    dec_cmd->add_flag("--pretty", dec_pretty, "human-readable output");

    // synth
    auto* synth_cmd = app.add_subcommand("synth", "build the sum/difference pair of X and Y");
    std::string synth_x, synth_y;
    bool synth_pretty = false;
    synth_cmd->add_option("x", synth_x, "X JSON file")->required();
    synth_cmd->add_option("y", synth_y, "Y JSON file")->required();
    synth_cmd->add_flag("--pretty", synth_pretty, "human-readable output");

    // ehrhart
    auto* ehr_cmd = app.add_subcommand("ehrhart", "exact counting polynomial by interpolation");
    std::string ehr_file;
    bool ehr_pretty = false;
    ehr_cmd->add_option("file", ehr_file, "polytope JSON file")->required();
    ehr_cmd->add_flag("--pretty", ehr_pretty, "human-readable output");

    // profile
    auto* prof_cmd = app.add_subcommand("profile", "edge profile of a lattice polygon");
    std::string prof_file;
    bool prof_pretty = false;
    prof_cmd->add_option("file", prof_file, "polygon JSON file")->required();
    prof_cmd->add_flag("--pretty", prof_pretty, "human-readable output");

    // width
    auto* width_cmd = app.add_subcommand("width", "lattice width in a direction");
    std::string width_file, width_z;
    bool width_pretty = false;
    width_cmd->add_option("file", width_file, "polytope JSON file")->required();
    width_cmd->add_option("--z", width_z, "direction a,b,...")->required();
    width_cmd->add_flag("--pretty", width_pretty, "human-readable output");

    // verify-equidecomp
    auto* ver_cmd = app.add_subcommand("verify-equidecomp", "check an equidecomposition certificate");
    std::string ver_p, ver_q, ver_cert;
    bool ver_pretty = false;
    ver_cmd->add_option("p", ver_p, "P JSON file")->required();
    ver_cmd->add_option("q", ver_q, "Q JSON file")->required();
    ver_cmd->add_option("cert", ver_cert, "certificate JSON file")->required();
    ver_cmd->add_flag("--pretty", ver_pretty, "human-readable output");

    // fuzz
    auto* fuzz_cmd = app.add_subcommand("fuzz", "self-check on seeded random polygons");
    long fuzz_seed = 0, fuzz_count = 20, fuzz_box = 8;
    int fuzz_points = 12;
    bool fuzz_pretty = false;
    fuzz_cmd->add_option("--seed", fuzz_seed, "generator seed");
    fuzz_cmd->add_option("--count", fuzz_count, "number of polygons");
    fuzz_cmd->add_option("--box", fuzz_box, "coordinate bound");
    fuzz_cmd->add_option("--points", fuzz_points, "max hull points per polygon");
    fuzz_cmd->add_flag("--pretty", fuzz_pretty, "human-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the usage error
        return code == 0 ? kOk : kInputError;
    }

    if (*count_cmd) {
        uc::Body body = uc::load_body_file(count_file);
        uc::Superlattice s = lattice_from_flags(count_dilate, count_lattice, uc::body_dim(body));
        uc::CountRecord rec = std::holds_alternative<uc::Polygon2>(body)
                                  ? uc::count_record(std::get<uc::Polygon2>(body), s)
                                  : uc::count_record(std::get<uc::PolytopeN>(body), s);
        if (count_pretty)
            std::cout << "count = " << rec.count.get_str() << "   (superlattice H = "
                      << str(rec.lattice) << ", index " << rec.lattice.index.get_str() << ")\n";
        else
            emit(uc::to_json(rec), false);
        return kOk;
    }

    if (*check_cmd) {
        if (check_mode == "sweep") {
            check_sweep.p_file = check_p;
            check_sweep.q_file = check_q;
            uc::SweepReport rep = run_sweep(check_sweep);
            emit_sweep(rep, check_pretty);
            return rep.discrepancy ? kNegative : kOk;
        }
        uc::Body p = uc::load_body_file(check_p);
        uc::Body q = uc::load_body_file(check_q);
        if (uc::body_dim(p) != uc::body_dim(q)) throw uc::input_error("dimension mismatch");
        if (check_mode == "exact2d") {
            if (!std::holds_alternative<uc::Polygon2>(p))
                throw uc::input_error("exact decision only in dimension 2");
            uc::Decision d =
                uc::equal_universal_2d(std::get<uc::Polygon2>(p), std::get<uc::Polygon2>(q));
            emit_decision(d, check_pretty);
            return d.equal ? kOk : kNegative;
        }
        uc::NecessaryReport rep =
            std::holds_alternative<uc::Polygon2>(p)
                ? uc::necessary_condition(std::get<uc::Polygon2>(p), std::get<uc::Polygon2>(q))
                : uc::necessary_condition(std::get<uc::PolytopeN>(p), std::get<uc::PolytopeN>(q));
        if (check_pretty) {
            if (rep.pass)
                std::cout << "necessary condition: pass\n";
            else
                std::cout << "necessary condition: violation at z = " << str(rep.violation->z)
                          << " (" << uc::rat_str(rep.violation->rvol_p_pos) << "+"
                          << uc::rat_str(rep.violation->rvol_p_neg) << " vs "
                          << uc::rat_str(rep.violation->rvol_q_pos) << "+"
                          << uc::rat_str(rep.violation->rvol_q_neg) << ")\n";
        } else {
            emit(uc::to_json(rep), false);
        }
        return rep.pass ? kOk : kNegative;
    }

    if (*sweep_cmd) {
        uc::SweepReport rep = run_sweep(sweep_args);
        emit_sweep(rep, sweep_args.pretty);
        return rep.discrepancy ? kNegative : kOk;
    }

    if (*dec_cmd) {
        uc::Body pb = uc::load_body_file(dec_p);
        uc::Body qb = uc::load_body_file(dec_q);
        if (!std::holds_alternative<uc::Polygon2>(pb) || !std::holds_alternative<uc::Polygon2>(qb))
            throw uc::input_error("decomposition only in dimension 2");
        const uc::Polygon2& p = std::get<uc::Polygon2>(pb);
        const uc::Polygon2& q = std::get<uc::Polygon2>(qb);
        if (!uc::equal_universal_2d(p, q).equal) {
            std::cerr << "not U-equal\n";
            return kNegative;
        }
        uc::DecompWitness w = uc::decompose(p, q);
        if (dec_pretty) {
            std::cout << "x       = " << str(w.x) << "\n";
            std::cout << "y       = " << str(w.y) << "\n";
            std::cout << "shift_p = " << str(w.shift_p) << "\n";
            std::cout << "shift_q = " << str(w.shift_q) << "\n";
        } else {
            emit(uc::to_json(w), false);
        }
        return kOk;
    }

    if (*synth_cmd) {
        uc::Body xb = uc::load_body_file(synth_x);
        uc::Body yb = uc::load_body_file(synth_y);
        if (!std::holds_alternative<uc::Polygon2>(xb) || !std::holds_alternative<uc::Polygon2>(yb))
            throw uc::input_error("synthesis only in dimension 2");
        uc::SynthReport rep = uc::synth(std::get<uc::Polygon2>(xb), std::get<uc::Polygon2>(yb));
        if (synth_pretty) {
            std::cout << "p = " << str(rep.p) << "   (area2 " << rep.area2_p.get_str() << ")\n";
            std::cout << "q = " << str(rep.q) << "   (area2 " << rep.area2_q.get_str() << ")\n";
            std::cout << "equal counting functions: " << (rep.decision.equal ? "yes" : "no")
                      << "\n";
        } else {
            emit(uc::to_json(rep), false);
        }
        return rep.decision.equal ? kOk : kNegative;
    }

    if (*ehr_cmd) {
        uc::Body body = uc::load_body_file(ehr_file);
        uc::EhrhartPoly poly = std::holds_alternative<uc::Polygon2>(body)
                                   ? uc::ehrhart_poly(std::get<uc::Polygon2>(body))
                                   : uc::ehrhart_poly(std::get<uc::PolytopeN>(body));
        if (ehr_pretty) {
            std::cout << "coefficients of k^0..k^" << poly.coeffs.size() - 1 << ":";
            for (const uc::Rat& c : poly.coeffs) std::cout << " " << uc::rat_str(c);
            std::cout << "\n";
        } else {
            emit(uc::to_json(poly), false);
        }
        return kOk;
    }

    if (*prof_cmd) {
        uc::Body body = uc::load_body_file(prof_file);
        if (!std::holds_alternative<uc::Polygon2>(body))
            throw uc::input_error("edge profiles only in dimension 2");
        uc::EdgeProfile prof = uc::edge_profile(std::get<uc::Polygon2>(body));
        if (prof_pretty) {
            for (const auto& [z, total] : prof)
                std::cout << "class " << str(z) << " : " << total.get_str() << "\n";
        } else {
            emit(uc::to_json(prof), false);
        }
        return kOk;
    }

    if (*width_cmd) {
        uc::Body body = uc::load_body_file(width_file);
        std::vector<uc::Int> zs = parse_int_list(width_z, ',');
        uc::json out;
        if (std::holds_alternative<uc::Polygon2>(body)) {
            if (zs.size() != 2) throw uc::input_error("direction needs one entry per dimension");
            const uc::Polygon2& p = std::get<uc::Polygon2>(body);
            uc::Vec2 z{zs[0], zs[1]};
            out = uc::json{{"width", uc::int_json(uc::width(p, z))},
                           {"boundary_formula", uc::int_json(uc::width_boundary_formula(p, z))}};
        } else {
            const uc::PolytopeN& p = std::get<uc::PolytopeN>(body);
            if (static_cast<int>(zs.size()) != p.dim())
                throw uc::input_error("direction needs one entry per dimension");
            out = uc::json{{"width", uc::int_json(uc::width(p, zs))}};
        }
        if (width_pretty) {
            std::cout << "width = " << out.at("width").dump();
            if (out.contains("boundary_formula"))
                std::cout << "   (boundary formula " << out.at("boundary_formula").dump() << ")";
            std::cout << "\n";
        } else {
            emit(out, false);
        }
        return kOk;
    }

    if (*ver_cmd) {
        uc::Body pb = uc::load_body_file(ver_p);
        uc::Body qb = uc::load_body_file(ver_q);
        if (!std::holds_alternative<uc::Polygon2>(pb) || !std::holds_alternative<uc::Polygon2>(qb))
            throw uc::input_error("certificates only in dimension 2");
        uc::EquidecompCert cert = uc::load_cert(uc::load_json_file(ver_cert));
        uc::VerifyReport rep = uc::verify_equidecomposition(std::get<uc::Polygon2>(pb),
                                                            std::get<uc::Polygon2>(qb), cert);
        if (ver_pretty) {
            if (rep.pass)
                std::cout << "certificate: pass\n";
            else
                std::cout << "certificate: failed check (" << rep.failed_check << ") -- "
                          << rep.message << "\n";
        } else {
            emit(uc::to_json(rep), false);
        }
        return rep.pass ? kOk : kNegative;
    }

    if (*fuzz_cmd) {
        if (fuzz_count < 1 || fuzz_box < 1 || fuzz_points < 3)
            throw uc::input_error("fuzz needs count >= 1, box >= 1, points >= 3");
        uc::Rng rng(static_cast<std::uint64_t>(fuzz_seed));
        uc::json polys = uc::json::array();
        for (long i = 0; i < fuzz_count; ++i) {
            uc::Polygon2 p = uc::random_polygon(rng, fuzz_points, fuzz_box, true);
            uc::Superlattice id = uc::dilation({1, 1});
            if (uc::pick_count(p) != uc::count_points_brute(p, id))
                throw uc::internal_error("pick/brute mismatch");
            if (!uc::ehrhart_identity_check(p).pass)
                throw uc::internal_error("coefficient identity failed");
            for (const uc::Vec2& z : uc::primitive_directions(2))
                if (uc::width(p, z) != uc::width_boundary_formula(p, z))
                    throw uc::internal_error("width formulas disagree");
            uc::Int total = 0;
            for (const auto& [cls, len] : uc::edge_profile(p)) total += len;
            if (total != p.boundary_length())
                throw uc::internal_error("profile does not sum to boundary length");
            polys.push_back(uc::to_json(p));
        }
        emit(uc::json{{"seed", fuzz_seed},
                      {"count", fuzz_count},
                      {"box", fuzz_box},
                      {"polygons", polys},
                      {"checks", "ok"}},
             fuzz_pretty);
        return kOk;
    }

    return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const uc::budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const uc::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const uc::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternalError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
