#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "fracbox/engine.hpp"
#include "fracbox/errors.hpp"
#include "fracbox/json_io.hpp"

namespace fracbox {

struct RunConfig {
    std::string subcommand;
    std::string input_path; // empty or "-" reads the provided input stream
    std::string format;     // "graph6", "edgelist", or "" for auto-detection
    int s = 1;
    int s_max = 4;
    bool json = false;
    int max_n = kDefaultMaxVertices;
    int max_cedges = 0; // 0 keeps the built-in completion limits
};

namespace detail {

inline CompletionLimits limits_from(const RunConfig& cfg) {
    CompletionLimits limits;
    if (cfg.max_cedges > 0) {
        limits.enumerate_limit = cfg.max_cedges;
        limits.brute_limit = std::min(limits.brute_limit, cfg.max_cedges);
        limits.fallback_threshold = std::min(limits.fallback_threshold, cfg.max_cedges);
    }
    return limits;
}

inline std::string approx(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", rational_to_double(r));
    return std::string(buf);
}

/// "p/q (approx. d)" for proper fractions, plain "p" for integers.
inline std::string pretty_rational(const Rational& r) {
    std::string s = rational_to_string(r);
    if (!is_integer(r)) s += " (approx. " + approx(r) + ")";
    return s;
}

inline std::string edge_set_text(const EdgeSet& set,
                                 const std::vector<std::pair<int, int>>& universe) {
    std::string s;
    for (EdgeId id : set.to_vector()) {
        if (!s.empty()) s += ' ';
        s += '(' + std::to_string(universe[id].first) + ',' +
             std::to_string(universe[id].second) + ')';
    }
    return s.empty() ? "(none)" : s;
}

inline Graph parse_input(const RunConfig& cfg, const std::string& text) {
    std::string format = cfg.format;
    if (format.empty()) {
        const bool g6 = cfg.input_path.size() >= 3 &&
                        cfg.input_path.rfind(".g6") == cfg.input_path.size() - 3;
        format = g6 ? "graph6" : "edgelist";
    }
    if (format == "graph6") return parse_graph6(text, cfg.max_n);
    if (format == "edgelist") return parse_edge_list(text, cfg.max_n);
    throw std::invalid_argument("unknown format: " + format);
}

inline void emit(const RunConfig& cfg, const Json& j, const std::string& text,
                 std::ostream& out) {
    if (cfg.json)
        out << j.dump(2) << '\n';
    else
        out << text;
}

inline int run_single(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    const Graph g = parse_input(cfg, text);
    const CompletionLimits limits = limits_from(cfg);
    const std::string& cmd = cfg.subcommand;

    if (cmd == "box") {
        const BoxicityResult res = boxicity(g, limits);
        const auto universe = edge_universe(complement(g));
        Json j;
        j["box"] = json_rational(Rational(res.value));
        Json cover = Json::array();
        for (const EdgeSet& he : res.cover) cover.push_back(json_edge_set(he, universe));
        j["cover"] = cover;
        std::ostringstream t;
        t << "box = " << res.value << '\n';
        for (std::size_t i = 0; i < res.cover.size(); ++i)
            t << "cover " << i + 1 << ": " << edge_set_text(res.cover[i], universe) << '\n';
        emit(cfg, j, t.str(), out);
        return 0;
    }
    if (cmd == "boxf") {
        const FractionalBoxicityResult res = fractional_boxicity(g, limits);
        Json j;
        j["box_f"] = json_rational(res.value);
        j["lp"] = json_lp_solution(res.lp);
        emit(cfg, j, "box_f = " + pretty_rational(res.value) + "\n", out);
        return 0;
    }
    if (cmd == "boxs") {
        const int value = s_fold_boxicity(g, cfg.s, limits);
        Json j;
        j["s"] = cfg.s;
        j["box_s"] = json_rational(Rational(value));
        emit(cfg, j, "box_" + std::to_string(cfg.s) + " = " + std::to_string(value) + "\n",
             out);
        return 0;
    }
    if (cmd == "bounds") {
        const CoveringSystem sys = build_system(g, limits);
        const int m = int(sys.rows.size());
        const int e_max = m == 0 ? 0 : [&] {
            int e = 0;
            for (const EdgeSet& col : sys.columns) e = std::max(e, col.count());
            return e;
        }();
        const Rational bound = m == 0 ? Rational(0) : Rational(m) / e_max;
        const Rational box_f = solve_lp(sys, 1).value;
        const int box = solve_ilp(sys, 1).value;
        Json j;
        j["complement_edges"] = m;
        j["e_max"] = e_max;
        j["lemma1_bound"] = json_rational(bound);
        j["box_f"] = json_rational(box_f);
        j["box"] = json_rational(Rational(box));
        std::ostringstream t;
        t << "complement_edges = " << m << '\n'
          << "e_max = " << e_max << '\n'
          << "lemma1_bound = " << pretty_rational(bound) << '\n'
          << "box_f = " << pretty_rational(box_f) << '\n'
          << "box = " << box << '\n';
        emit(cfg, j, t.str(), out);
        return 0;
    }
    if (cmd == "completions") {
        const auto fills = enumerate_minimal_completions(g, limits);
        const Hypergraph hg = maximal_hyperedges(g, limits);
        std::ostringstream t;
        for (std::size_t i = 0; i < fills.size(); ++i)
            t << "fill " << i + 1 << ": " << edge_set_text(fills[i], hg.ground) << '\n';
        for (std::size_t i = 0; i < hg.hyperedges.size(); ++i)
            t << "hyperedge " << i + 1 << ": " << edge_set_text(hg.hyperedges[i], hg.ground)
              << '\n';
        emit(cfg, json_completions(g, fills, hg), t.str(), out);
        return 0;
    }
    if (cmd == "hypergraph") {
        const CoveringSystem sys = build_system(g, limits);
        std::ostringstream t;
        for (std::size_t i = 0; i < sys.rows.size(); ++i)
            t << "row " << i + 1 << ": (" << sys.rows[i].first << ',' << sys.rows[i].second
              << ")\n";
        for (std::size_t i = 0; i < sys.columns.size(); ++i)
            t << "column " << i + 1 << ": " << edge_set_text(sys.columns[i], sys.rows) << '\n';
        for (std::size_t i = 0; i < sys.rows.size(); ++i) {
            t << "matrix " << i + 1 << ":";
            for (const EdgeSet& col : sys.columns) t << ' ' << (col.test(int(i)) ? 1 : 0);
            t << '\n';
        }
        emit(cfg, json_system(sys), t.str(), out);
        return 0;
    }
    if (cmd == "interval") {
        const IntervalResult res = is_interval(g);
        std::ostringstream t;
        if (res.interval) {
            t << "interval = yes\n";
            for (std::size_t v = 0; v < res.model->intervals.size(); ++v)
                t << "vertex " << v << ": [" << res.model->intervals[v].first << ','
                  << res.model->intervals[v].second << "]\n";
        } else {
            t << "interval = no\n";
            if (const auto* hole = std::get_if<HoleObstruction>(&*res.obstruction)) {
                t << "hole:";
                for (int v : hole->cycle) t << ' ' << v;
                t << '\n';
            } else {
                const auto& at = std::get<ATObstruction>(*res.obstruction);
                t << "asteroidal triple: " << at.a << ' ' << at.b << ' ' << at.c << '\n';
            }
        }
        emit(cfg, json_interval_result(res), t.str(), out);
        return 0;
    }
    if (cmd == "analyze") {
        const AnalysisReport rep = analyze(g, cfg.s_max, limits);
        std::ostringstream t;
        t << "n = " << rep.n << '\n'
          << "edges = " << rep.edges << '\n'
          << "complement_edges = " << rep.complement_edges << '\n'
          << "box = " << rep.box << '\n';
        t << "box_s:";
        for (const auto& [s, v] : rep.box_s) t << " s=" << s << "->" << v;
        t << '\n';
        t << "box_f = " << pretty_rational(rep.box_f) << '\n'
          << "e_max = " << rep.e_max << '\n'
          << "lemma1_bound = " << pretty_rational(rep.lemma1_bound) << '\n'
          << "edge_transitive_complement = "
          << (rep.edge_transitive_complement ? "true" : "false") << '\n'
          << "theorem3_equality_holds = " << (rep.theorem3_equality_holds ? "true" : "false")
          << '\n';
        for (std::size_t i = 0; i < rep.cover.size(); ++i)
            t << "cover " << i + 1 << ": "
              << edge_set_text(rep.cover[i], rep.complement_edge_list) << '\n';
        emit(cfg, json_report(rep), t.str(), out);
        return 0;
    }
    throw std::invalid_argument("unknown subcommand: " + cmd);
}

inline int run_batch(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    bool parse_failure = false, size_failure = false;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        Json j;
        try {
            const Graph g = parse_graph6(line, cfg.max_n);
            j = json_report(analyze(g, cfg.s_max, limits_from(cfg)));
        } catch (const SizeLimitError& e) {
            size_failure = true;
            j = Json{{"error", e.what()}};
        } catch (const std::exception& e) {
            parse_failure = true;
            j = Json{{"error", e.what()}};
        }
        out << j.dump() << '\n';
    }
    if (parse_failure) return 1;
    if (size_failure) return 2;
    return 0;
}

} // namespace detail

/// Execute one subcommand against `in`/`out`/`err`; returns the process
/// exit code (0 success, 1 input error, 2 size limit exceeded).
inline int run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        std::string text;
        if (cfg.input_path.empty() || cfg.input_path == "-") {
            std::ostringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        } else {
            std::ifstream file(cfg.input_path);
            if (!file) {
                err << "error: cannot open " << cfg.input_path << '\n';
                return 1;
            }
            std::ostringstream buf;
            buf << file.rdbuf();
            text = buf.str();
        }
        if (cfg.subcommand == "batch") return detail::run_batch(cfg, text, out);
        return detail::run_single(cfg, text, out);
    } catch (const SizeLimitError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace fracbox
