#pragma once

#include <json.hpp>

#include "fracbox/completions.hpp"
#include "fracbox/covering.hpp"
#include "fracbox/engine.hpp"
#include "fracbox/interval.hpp"
#include "fracbox/rational.hpp"

namespace fracbox {

// Insertion order is preserved so serialized reports are stable across
// runs; all rationals appear as canonical "p/q" strings ("p" when q = 1).
using Json = nlohmann::ordered_json;

inline Json json_edge(const std::pair<int, int>& e) { return Json::array({e.first, e.second}); }

inline Json json_edge_list(const std::vector<std::pair<int, int>>& edges) {
    Json arr = Json::array();
    for (const auto& e : edges) arr.push_back(json_edge(e));
    return arr;
}

/// An EdgeSet rendered as the edges it selects from `universe`.
inline Json json_edge_set(const EdgeSet& set, const std::vector<std::pair<int, int>>& universe) {
    Json arr = Json::array();
    for (EdgeId id : set.to_vector()) arr.push_back(json_edge(universe[id]));
    return arr;
}

inline Json json_rational(const Rational& r) { return rational_to_string(r); }

inline Json json_rational_vector(const std::vector<Rational>& v) {
    Json arr = Json::array();
    for (const Rational& r : v) arr.push_back(json_rational(r));
    return arr;
}

inline Json json_lp_solution(const LpSolution& lp) {
    Json j;
    j["value"] = json_rational(lp.value);
    j["x"] = json_rational_vector(lp.x);
    j["y"] = json_rational_vector(lp.y);
    j["basis"] = lp.basis;
    return j;
}

inline Json json_interval_result(const IntervalResult& res) {
    Json j;
    j["interval"] = res.interval;
    if (res.model) {
        Json arr = Json::array();
        for (const auto& [l, r] : res.model->intervals) arr.push_back(Json::array({l, r}));
        j["model"] = arr;
    }
    if (res.obstruction) {
        Json o;
        if (const auto* hole = std::get_if<HoleObstruction>(&*res.obstruction)) {
            o["kind"] = "hole";
            o["cycle"] = hole->cycle;
        } else {
            const auto& at = std::get<ATObstruction>(*res.obstruction);
            o["kind"] = "asteroidal_triple";
            o["triple"] = Json::array({at.a, at.b, at.c});
            o["path_ab"] = at.path_ab;
            o["path_ac"] = at.path_ac;
            o["path_bc"] = at.path_bc;
        }
        j["obstruction"] = o;
    }
    return j;
}

inline Json json_completions(const Graph& g, const std::vector<FillSet>& fills,
                             const Hypergraph& hg) {
    Json j;
    j["n"] = g.vertex_count();
    j["complement_edges"] = json_edge_list(hg.ground);
    Json fill_arr = Json::array();
    for (const FillSet& f : fills) fill_arr.push_back(json_edge_set(f, hg.ground));
    j["fills"] = fill_arr;
    Json he_arr = Json::array();
    for (const EdgeSet& he : hg.hyperedges) he_arr.push_back(json_edge_set(he, hg.ground));
    j["hyperedges"] = he_arr;
    return j;
}

inline Json json_system(const CoveringSystem& sys) {
    Json j;
    j["rows"] = json_edge_list(sys.rows);
    Json cols = Json::array();
    for (const EdgeSet& col : sys.columns) cols.push_back(json_edge_set(col, sys.rows));
    j["columns"] = cols;
    Json matrix = Json::array();
    for (int i = 0; i < int(sys.rows.size()); ++i) {
        Json row = Json::array();
        for (const EdgeSet& col : sys.columns) row.push_back(col.test(i) ? 1 : 0);
        matrix.push_back(row);
    }
    j["matrix"] = matrix;
    return j;
}

inline Json json_report(const AnalysisReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["edges"] = rep.edges;
    j["complement_edges"] = rep.complement_edges;
    j["box"] = json_rational(Rational(rep.box));
    j["box_f"] = json_rational(rep.box_f);
    Json table = Json::array();
    for (const auto& [s, v] : rep.box_s) {
        Json entry;
        entry["s"] = s;
        entry["value"] = json_rational(Rational(v));
        table.push_back(entry);
    }
    j["box_s"] = table;
    j["e_max"] = rep.e_max;
    j["lemma1_bound"] = json_rational(rep.lemma1_bound);
    j["edge_transitive_complement"] = rep.edge_transitive_complement;
    j["theorem3_equality_holds"] = rep.theorem3_equality_holds;
    Json cover = Json::array();
    for (const EdgeSet& he : rep.cover) cover.push_back(json_edge_set(he, rep.complement_edge_list));
    j["cover"] = cover;
    j["lp"] = json_lp_solution(rep.lp);
    return j;
}

} // namespace fracbox
