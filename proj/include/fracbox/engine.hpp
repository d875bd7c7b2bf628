#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "fracbox/automorphism.hpp"
#include "fracbox/covering.hpp"

namespace fracbox {

inline constexpr int kMaxFoldS = 6; // ILP cost grows quickly with s

struct BoxicityResult {
    int value = 0;
    std::vector<EdgeSet> cover; // chosen hyperedges, one entry per unit of x
};

struct FractionalBoxicityResult {
    Rational value;
    LpSolution lp; // primal and dual certificates
};

struct FeketeRow {
    int s = 0;
    int box_s = 0;
    Rational ratio; // box_s / s
};

struct FeketeTable {
    std::vector<FeketeRow> rows;
    Rational box_f;
    bool equality_attained = false; // ratio == box_f at some listed s
};

struct AnalysisReport {
    int n = 0;
    int edges = 0;
    int complement_edges = 0;
    std::vector<std::pair<int, int>> complement_edge_list; // row order of the system
    int box = 0;
    Rational box_f;
    std::vector<std::pair<int, int>> box_s; // (s, box_s) for s = 1..s_max
    int e_max = 0;
    Rational lemma1_bound;
    bool edge_transitive_complement = false;
    bool theorem3_equality_holds = false;
    std::vector<EdgeSet> cover; // certificate for box
    LpSolution lp;              // certificates for box_f
};

namespace detail {

inline void check_fold(int s) {
    if (s < 1) throw std::invalid_argument("s must be at least 1");
    if (s > kMaxFoldS) throw SizeLimitError("max s", kMaxFoldS, s);
}

/// Chosen hyperedges of an integer cover, one copy per unit of
/// multiplicity, each re-verified to be cointerval; their union must cover
/// every row the required number of times.
inline std::vector<EdgeSet> certified_cover(const CoveringSystem& sys, const IlpSolution& ilp,
                                            int rhs_s) {
    std::vector<EdgeSet> cover;
    for (int j = 0; j < int(sys.columns.size()); ++j) {
        if (ilp.x[j] == 0) continue;
        if (!is_cointerval_edge_set(sys.gbar, sys.columns[j]))
            throw std::logic_error("cover certificate: chosen column is not cointerval");
        for (int copy = 0; copy < ilp.x[j]; ++copy) cover.push_back(sys.columns[j]);
    }
    std::vector<int> hits(sys.rows.size(), 0);
    for (const EdgeSet& he : cover)
        for (EdgeId id : he.to_vector()) ++hits[id];
    for (int h : hits)
        if (h < rhs_s) throw std::logic_error("cover certificate: union misses a row");
    return cover;
}

inline int max_column_size(const CoveringSystem& sys) {
    int e = 0;
    for (const EdgeSet& col : sys.columns) e = std::max(e, col.count());
    return e;
}

} // namespace detail

inline BoxicityResult boxicity(const Graph& g, const CompletionLimits& limits = {}) {
    const CoveringSystem sys = build_system(g, limits);
    const IlpSolution ilp = solve_ilp(sys, 1);
    return BoxicityResult{ilp.value, detail::certified_cover(sys, ilp, 1)};
}

inline FractionalBoxicityResult fractional_boxicity(const Graph& g,
                                                    const CompletionLimits& limits = {}) {
    const CoveringSystem sys = build_system(g, limits);
    LpSolution lp = solve_lp(sys, 1);
    Rational value = lp.value;
    return FractionalBoxicityResult{std::move(value), std::move(lp)};
}

inline int s_fold_boxicity(const Graph& g, int s, const CompletionLimits& limits = {}) {
    detail::check_fold(s);
    return solve_ilp(build_system(g, limits), s).value;
}

/// |E(gbar)| / e_max with e_max the largest hyperedge size; 0 when gbar has
/// no edges, consistent with box(complete graph) = 0.
inline Rational lemma1_bound(const Graph& g, const CompletionLimits& limits = {}) {
    const CoveringSystem sys = build_system(g, limits);
    if (sys.rows.empty()) return Rational(0);
    return Rational(int(sys.rows.size())) / detail::max_column_size(sys);
}

/// box_s and box_s/s for s = 1..s_max, checked against subadditivity and
/// the fractional lower bound before returning.
inline FeketeTable fekete_table(const Graph& g, int s_max, const CompletionLimits& limits = {}) {
    detail::check_fold(s_max);
    const CoveringSystem sys = build_system(g, limits);
    FeketeTable table;
    table.box_f = solve_lp(sys, 1).value;
    for (int s = 1; s <= s_max; ++s) {
        const int v = solve_ilp(sys, s).value;
        table.rows.push_back(FeketeRow{s, v, Rational(v) / s});
    }
    for (const FeketeRow& row : table.rows) {
        if (row.ratio < table.box_f)
            throw std::logic_error("fekete_table: ratio dips below the fractional value");
        if (row.ratio == table.box_f) table.equality_attained = true;
    }
    for (int s = 1; s <= s_max; ++s)
        for (int t = s; s + t <= s_max; ++t)
            if (table.rows[s + t - 1].box_s > table.rows[s - 1].box_s + table.rows[t - 1].box_s)
                throw std::logic_error("fekete_table: subadditivity violated");
    return table;
}

/// Full report: box, box_f, the s-fold table, the uniform-dual bound and
/// the transitivity flags, with every claimed inequality re-checked
/// exactly before the report is returned.
inline AnalysisReport analyze(const Graph& g, int s_max = 4, const CompletionLimits& limits = {}) {
    detail::check_fold(s_max);
    const CoveringSystem sys = build_system(g, limits);

    AnalysisReport rep;
    rep.n = g.vertex_count();
    rep.edges = g.edge_count();
    rep.complement_edges = int(sys.rows.size());
    rep.complement_edge_list = sys.rows;

    const IlpSolution ilp = solve_ilp(sys, 1);
    rep.box = ilp.value;
    rep.cover = detail::certified_cover(sys, ilp, 1);
    rep.lp = solve_lp(sys, 1);
    rep.box_f = rep.lp.value;
    for (int s = 1; s <= s_max; ++s)
        rep.box_s.emplace_back(s, s == 1 ? rep.box : solve_ilp(sys, s).value);

    rep.e_max = detail::max_column_size(sys);
    rep.lemma1_bound =
        rep.complement_edges == 0 ? Rational(0) : Rational(rep.complement_edges) / rep.e_max;
    rep.edge_transitive_complement = is_edge_transitive(sys.gbar);
    rep.theorem3_equality_holds = rep.box_f == rep.lemma1_bound;

    if (Rational(rep.box) < rep.box_f || rep.box_f < rep.lemma1_bound)
        throw std::logic_error("analyze: bound chain violated");
    if (rep.edge_transitive_complement && !rep.theorem3_equality_holds)
        throw std::logic_error("analyze: edge-transitive complement without equality");
    for (const auto& [s, v] : rep.box_s) {
        if (v > s * rep.box || Rational(v) < Rational(s) * rep.box_f)
            throw std::logic_error("analyze: s-fold value outside its bounds");
    }
    return rep;
}

} // namespace fracbox
