#pragma once

#include "bowen.hpp"
#include "lebesgue.hpp"
#include "shift.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace cocompact {

using nlohmann::json;

enum class log_base { natural, two };

inline double base_factor(log_base b) { return b == log_base::natural ? 1.0 : 1.0 / std::log(2.0); }
inline std::string base_name(log_base b) { return b == log_base::natural ? "e" : "2"; }

// fixed-format doubles so identical runs produce byte-identical files
inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// --- endpoint / interval_set -----------------------------------------------

inline json to_json(const endpoint& e) {
    return e.is_neg_inf() ? json("-inf") : e.is_pos_inf() ? json("+inf") : json(e.value().str());
}

inline endpoint endpoint_from_json(const json& j) {
    if (!j.is_string()) {
        if (j.is_number_integer()) return endpoint(rational(j.get<long long>()));
        throw invalid_input("endpoint: expected a string like \"p/q\", \"-inf\" or \"+inf\"");
    }
    const std::string s = j.get<std::string>();
    if (s == "-inf") return endpoint::neg_inf();
    if (s == "+inf" || s == "inf") return endpoint::pos_inf();
    return endpoint(rational::parse(s));
}

inline json to_json(const interval_set& u) {
    json ivs = json::array();
    for (const auto& iv : u.intervals()) ivs.push_back(json::array({to_json(iv.lo), to_json(iv.hi)}));
    return json{{"intervals", std::move(ivs)}};
}

inline interval_set interval_set_from_json(const json& j) {
    if (!j.contains("intervals") || !j["intervals"].is_array())
        throw invalid_input("interval_set: expected {\"intervals\": [[lo, hi], ...]}");
    std::vector<open_interval> raw;
    for (const auto& pair : j["intervals"]) {
        if (!pair.is_array() || pair.size() != 2) throw invalid_input("interval_set: bad interval entry");
        raw.push_back({endpoint_from_json(pair[0]), endpoint_from_json(pair[1])});
    }
    return interval_set::normalize(std::move(raw));
}

// --- piecewise-affine maps ---------------------------------------------------

inline json to_json(const piecewise_affine& f) {
    json breaks = json::array();
    for (const auto& b : f.breakpoints()) breaks.push_back(b.str());
    json pieces = json::array();
    for (const auto& p : f.pieces()) pieces.push_back(json{{"slope", p.slope.str()}, {"intercept", p.offset.str()}});
    return json{{"breakpoints", std::move(breaks)}, {"pieces", std::move(pieces)}};
}

inline piecewise_affine map_from_json(const json& j) {
    if (!j.contains("breakpoints") || !j.contains("pieces"))
        throw invalid_input("map: expected {\"breakpoints\": [...], \"pieces\": [...]}");
    std::vector<rational> breaks;
    for (const auto& b : j["breakpoints"]) breaks.push_back(rational::parse(b.get<std::string>()));
    std::vector<affine> pieces;
    for (const auto& p : j["pieces"]) {
        if (!p.contains("slope") || !p.contains("intercept")) throw invalid_input("map: piece needs slope/intercept");
        pieces.push_back(affine{rational::parse(p["slope"].get<std::string>()),
                                rational::parse(p["intercept"].get<std::string>())});
    }
    return piecewise_affine(std::move(breaks), std::move(pieces));
}

// "doubling", "identity", "tent", or a path to a JSON map file
inline piecewise_affine resolve_map(const std::string& name) {
    if (name == "doubling") return piecewise_affine::doubling();
    if (name == "identity") return piecewise_affine::identity();
    if (name == "tent") return piecewise_affine::tent();
    std::ifstream in(name);
    if (!in) throw invalid_input("unknown map preset or unreadable file: " + name);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw invalid_input("malformed JSON in " + name + ": " + e.what());
    }
    return map_from_json(j);
}

// --- spaces and covers -------------------------------------------------------

inline json to_json(const space& sp) {
    if (sp.is_real_line()) return json("R");
    return json{{"interval", json::array({sp.box().lo.str(), sp.box().hi.str()})}};
}

inline space space_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "R") return space::real_line();
    if (j.is_object() && j.contains("interval") && j["interval"].is_array() && j["interval"].size() == 2)
        return space::compact(rational::parse(j["interval"][0].get<std::string>()),
                              rational::parse(j["interval"][1].get<std::string>()));
    throw invalid_input("space: expected \"R\" or {\"interval\": [a, b]}");
}

inline json to_json(const finite_cover& u) {
    json elems = json::array();
    for (const auto& e : u.elements()) elems.push_back(to_json(e));
    return json{{"space", to_json(u.ambient())}, {"elements", std::move(elems)}};
}

inline finite_cover cover_from_json(const json& j) {
    if (!j.contains("space") || !j.contains("elements"))
        throw invalid_input("cover: expected {\"space\": ..., \"elements\": [...]}");
    std::vector<interval_set> elems;
    for (const auto& e : j["elements"]) elems.push_back(interval_set_from_json(e));
    return finite_cover(space_from_json(j["space"]), std::move(elems));
}

inline finite_cover cover_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot read cover file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw invalid_input("malformed JSON in " + path + ": " + e.what());
    }
    return cover_from_json(j);
}

// eps literals: "2^-6", "p/q", "0.125", "3"
inline rational parse_eps(const std::string& s) {
    if (s.rfind("2^", 0) == 0) {
        try {
            return rational::pow2(std::stol(s.substr(2)));
        } catch (const std::exception&) {
            throw invalid_input("bad power-of-two literal: " + s);
        }
    }
    const auto dot = s.find('.');
    if (dot != std::string::npos) {
        const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        rational den(1);
        for (std::size_t i = dot + 1; i < s.size(); ++i) den = den * rational(10);
        return rational::parse(digits) / den;
    }
    return rational::parse(s);
}

// --- CSV ----------------------------------------------------------------------

inline std::string entropy_sequence_csv(const entropy_sequence& seq, log_base base = log_base::natural) {
    const double k = base_factor(base);
    std::ostringstream os;
    os << "n,N_n,a_n,rate,exact\n";
    for (const auto& r : seq.rows)
        os << r.n << ',' << r.subcover_size << ',' << fmt(r.log_count * k) << ',' << fmt(r.rate * k) << ','
           << (r.exact ? 1 : 0) << '\n';
    return os.str();
}

inline std::string bowen_csv(const bowen_estimate& est) {
    std::ostringstream os;
    os << "eps,n,r_hat,s_hat,grid_step\n";
    for (const auto& er : est.ladder)
        for (const auto& rec : er.records)
            os << rec.eps.str() << ',' << rec.n << ',' << rec.r_hat << ',' << rec.s_hat << ','
               << rec.grid_step.str() << '\n';
    return os.str();
}

// --- reports ------------------------------------------------------------------

inline json to_json(const entropy_estimate& est, log_base base = log_base::natural) {
    const double k = base_factor(base);
    return json{{"value", est.value * k},
                {"method", est.method},
                {"n_max", est.n_max},
                {"all_exact", est.all_exact},
                {"log_base", base_name(base)},
                {"diagnostics",
                 {{"slope", est.diagnostics.slope * k},
                  {"slope_stderr", est.diagnostics.slope_stderr * k},
                  {"converged", est.diagnostics.converged}}}};
}

inline json to_json(const sup_result& res, const std::vector<finite_cover>& family,
                    log_base base = log_base::natural) {
    json covers = json::array();
    for (std::size_t i = 0; i < res.entries.size(); ++i) {
        json rows = json::array();
        for (const auto& r : res.entries[i].sequence.rows)
            rows.push_back(json{{"n", r.n}, {"N", r.subcover_size}, {"exact", r.exact}});
        covers.push_back(json{{"cover", to_json(family[i])},
                              {"estimate", to_json(res.entries[i].estimate, base)},
                              {"rows", std::move(rows)}});
    }
    return json{{"value", res.value * base_factor(base)},
                {"log_base", base_name(base)},
                {"witness_index", res.witness},
                {"covers", std::move(covers)}};
}

inline json to_json(const bowen_estimate& est, log_base base = log_base::natural) {
    const double k = base_factor(base);
    json ladder = json::array();
    for (const auto& er : est.ladder)
        ladder.push_back(json{{"eps", er.eps.str()},
                              {"spanning_rate", er.spanning_rate * k},
                              {"spanning_stderr", er.spanning_stderr * k},
                              {"separated_rate", er.separated_rate * k},
                              {"separated_stderr", er.separated_stderr * k}});
    return json{{"value", est.value * k},
                {"log_base", base_name(base)},
                {"monotone_trend", est.monotone_trend},
                {"ladder", std::move(ladder)}};
}

inline json to_json(const power_report& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows)
        rows.push_back(json{{"n", r.n}, {"N_power", r.subcover_power}, {"N_base", r.subcover_base},
                            {"equal", r.equal}});
    return json{{"m", rep.m},
                {"estimate_power", rep.estimate_power},
                {"estimate_scaled", rep.estimate_scaled},
                {"relative_gap", rep.relative_gap},
                {"identity_holds", rep.identity_holds},
                {"rows", std::move(rows)},
                {"pass", rep.pass}};
}

inline json to_json(const subsystem_report& rep) {
    json rows = json::array();
    for (const auto& r : rep.rows)
        rows.push_back(json{{"n", r.n}, {"N_sub", r.subcover_sub}, {"N_whole", r.subcover_whole}, {"ok", r.ok}});
    return json{{"estimate_sub", rep.estimate_sub},
                {"estimate_whole", rep.estimate_whole},
                {"rows", std::move(rows)},
                {"pass", rep.pass}};
}

inline json to_json(const conjugacy_report& rep) {
    json covers = json::array();
    for (const auto& rows : rep.per_cover) {
        json jr = json::array();
        for (const auto& r : rows)
            jr.push_back(json{{"n", r.n}, {"N_g", r.subcover_g}, {"N_f", r.subcover_f}, {"equal", r.equal}});
        covers.push_back(std::move(jr));
    }
    return json{{"intertwines", rep.intertwines}, {"per_cover", std::move(covers)}, {"pass", rep.pass}};
}

inline json to_json(const bound_report& rep, std::uint64_t seed = 0) {
    json rows = json::array();
    for (const auto& r : rep.rows)
        rows.push_back(json{{"n", r.n}, {"N", r.subcover_size}, {"r_hat", r.r_hat}, {"bound", r.bound},
                            {"ok", r.ok}});
    json out{{"delta", rep.delta.str()}, {"rows", std::move(rows)}, {"seed", seed},
             {"trivial", rep.trivial}, {"pass", rep.pass}};
    if (rep.core) out["core"] = json::array({rep.core->lo.str(), rep.core->hi.str()});
    return out;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw invalid_input("cannot write file: " + path);
    out << content;
}

}  // namespace cocompact
