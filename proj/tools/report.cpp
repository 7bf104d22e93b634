#include "report.hpp"

namespace ramsey {

namespace {

json pair_json(const std::optional<std::pair<Vertex, Vertex>>& p) {
    if (!p) return nullptr;
    return json::array({p->first, p->second});
}

template <typename T>
json optional_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    return json(*v);
}

} // namespace

json graph_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.n()}, {"m", g.m()}, {"edges", edges}};
}

json coloured_json(const ColouredGraph& c) {
    json edges = json::array();
    for (auto [u, v] : c.graph().edges()) edges.push_back({u, v, c.colour(u, v)});
    return {{"n", c.n()}, {"q", c.q()}, {"edges", edges}};
}

json bound_json(const Bound& b) { return optional_json(b); }

json to_report(const NeighbourhoodProfile& p) {
    return {{"u", p.u},
            {"unique_min", p.unique_min},
            {"delta", p.delta},
            {"neighbours", p.neighbours},
            {"lambda_F", p.lambda_F},
            {"Delta_F", p.Delta_F},
            {"e_F", p.e_F},
            {"is_forest_F", p.is_forest_F},
            {"F", graph_json(p.F)}};
}

json to_report(const WellBehavedReport& r) {
    return {{"overall", r.overall},
            {"w1", {{"ok", r.w1}, {"tie", pair_json(r.w1_tie)}}},
            {"w2", {{"ok", r.w2}, {"pair", pair_json(r.w2_pair)}, {"codegree", r.w2_codegree}}},
            {"w3", {{"ok", r.w3}, {"cut", r.w3_cut}}},
            {"w4",
             {{"ok", r.w4},
              {"exact", r.w4_exact},
              {"cutsets_checked", r.w4_cutsets_checked},
              {"window", {r.w4_window_lo, r.w4_window_hi}},
              {"cutset", r.w4_cutset},
              {"component", r.w4_component}}}};
}

json to_report(const EstimateReport& r) {
    return {{"property", r.property}, {"n", r.n},         {"p", r.p},     {"trials", r.trials},
            {"seed", r.seed},         {"successes", r.successes}, {"estimate", r.estimate},
            {"wilson95", {r.lo, r.hi}}};
}

json to_report(const DenseSubsetReport& r) {
    return {{"threshold_size", r.threshold_size}, {"capped", r.capped},       {"exhaustive", r.exhaustive},
            {"subsets_checked", r.subsets_checked}, {"min_ratio", r.min_ratio}, {"worst_subset", r.worst_subset},
            {"passed", r.passed}};
}

json to_report(const GammaCheckReport& r) {
    json w = nullptr;
    if (r.witness) w = {{"U", r.witness->U}, {"colour", r.witness->colour}};
    return {{"degree_ok", r.degree_ok},
            {"max_degree", r.max_degree},
            {"cover_ok", r.cover_ok},
            {"mode", r.mode == CoverMode::Exhaustive ? "exhaustive" : "sampled"},
            {"subsets_checked", r.samples_checked},
            {"violation", w}};
}

json to_report(const ArrowResult& r, bool timing) {
    json out = {{"arrows", r.budget_hit ? json(nullptr) : json(r.arrows)},
                {"budget_hit", r.budget_hit},
                {"nodes", r.nodes},
                {"witness", r.witness ? coloured_json(*r.witness) : json(nullptr)}};
    if (timing) out["millis"] = r.millis;
    return out;
}

json to_report(const MinimalityReport& r) {
    json edges = json::array();
    for (std::size_t i = 0; i < r.edges.size(); ++i)
        edges.push_back({{"edge", {r.edges[i].first, r.edges[i].second}}, {"arrows", r.edge_verdicts[i].arrows}});
    json vertices = json::array();
    for (const auto& d : r.vertex_verdicts) vertices.push_back({{"vertex", d.index}, {"arrows", d.arrows}});
    return {{"is_ramsey", r.is_ramsey}, {"minimal", r.minimal}, {"nodes", r.nodes},
            {"edge_deletions", edges},  {"vertex_deletions", vertices}};
}

json to_report(const NecessityReport& r) {
    return {{"w", r.w},
            {"u", r.u},
            {"delta", r.delta},
            {"F", graph_json(r.F)},
            {"gamma_vertices", r.gamma_vertices},
            {"gamma", coloured_json(r.gamma)},
            {"subsets_checked", r.subsets_checked},
            {"holds", r.holds},
            {"violation", r.holds ? json(nullptr) : json{{"U", r.violation_U}, {"colour", r.violation_colour}}}};
}

json to_report(const RefuterResult& r) {
    return {{"v", r.v}, {"shared_colour", r.shared_colour}, {"U", r.U}, {"extended", coloured_json(r.extended)}};
}

json to_report(const ProbeResult& r) {
    return {{"found", r.found},
            {"exhausted", r.exhausted},
            {"target_degree", r.target_degree},
            {"hosts_examined", r.hosts_examined},
            {"low_vertex", r.low_vertex},
            {"witness", r.witness ? graph_json(*r.witness) : json(nullptr)}};
}

json to_report(const SzzGraph& g) {
    return {{"a", g.a},   {"b", g.b},   {"r", g.r},   {"s", g.s},   {"t", g.t},       {"q", g.q},
            {"A", g.A},   {"B", g.B},   {"B1", g.B1}, {"B2", g.B2}, {"n", g.n()},     {"m", g.m()},
            {"min_degree", g.G.min_degree()}};
}

json to_report(const MonoForest& r) {
    return {{"case", r.case_number},         {"colour", r.colour},
            {"pendant_colour", r.pendant_colour}, {"profile", r.profile},
            {"profile_vertices", r.profile_vertices}, {"X_block", r.X_block},
            {"embedding", r.map}};
}

json to_report(const BoundsReport& r) {
    return {{"delta", r.delta},
            {"lambda_F", r.lambda_F},
            {"Delta_F", r.Delta_F},
            {"e_F", r.e_F},
            {"n", r.n},
            {"eps", r.eps},
            {"log_constant", r.log_constant},
            {"lower_affine", bound_json(r.lower_affine)},
            {"lower_log", r.lower_log},
            {"lower", bound_json(r.lower)},
            {"upper_maxdeg", bound_json(r.upper_maxdeg)},
            {"upper_edges", bound_json(r.upper_edges)},
            {"upper", bound_json(r.upper)},
            {"simple_all_q", r.simple_all_q},
            {"null_means", "unbounded"}};
}

json to_report(const KoganReport& r) {
    return {{"k", r.k},           {"size", r.U.size()},         {"U", r.U},
            {"average_degree", r.average_degree}, {"bound", r.bound}, {"target", r.target},
            {"exhaustive", r.exhaustive}, {"attained", r.attained}, {"restarts", r.restarts}};
}

json to_report(const CurveRow& r) {
    return {{"p", r.p}, {"regime", r.regime}, {"k_or_f", r.k_or_f}, {"lower", r.lower}, {"upper", r.upper},
            {"flags", r.flags}};
}

json envelope(const std::string& command, json config, json result) {
    return {{"schema", kSchema}, {"command", command}, {"config", std::move(config)}, {"result", std::move(result)}};
}

} // namespace ramsey
