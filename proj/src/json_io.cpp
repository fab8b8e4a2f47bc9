#include "fibindex/json_io.hpp"

namespace fibindex {

ordered_json graph_to_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.order();
    j["m"] = g.size();
    auto edges = ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(ordered_json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const ordered_json& j) {
    std::vector<std::pair<int, int>> es;
    for (const auto& e : j.at("edges")) es.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph::from_edges(j.at("n").get<int>(), es);
}

ordered_json to_json(const CanonicalForm& form) {
    ordered_json j;
    j["n"] = form.n;
    j["bits"] = std::to_string(form.bits);
    return j;
}

ordered_json to_json(const BoundReport& report) {
    ordered_json j;
    j["class"] = to_string(report.graph_class);
    j["n"] = report.n;
    j["m"] = report.m;
    j["alpha"] = report.alpha;
    j["fibonacci_index"] = report.fib.str();
    j["lower"] = report.lower.str();
    j["upper"] = report.upper.str();
    j["lower_tight"] = report.lower_tight;
    j["upper_tight"] = report.upper_tight;
    return j;
}

ordered_json to_json(const AlphaRecord& record) {
    ordered_json j;
    j["alpha"] = record.alpha;
    j["graph_count"] = record.graph_count;
    j["min_fib"] = record.min_fib.str();
    j["max_fib"] = record.max_fib.str();
    auto mins = ordered_json::array();
    for (const auto& f : record.minimizers) mins.push_back(to_json(f));
    j["minimizers"] = std::move(mins);
    auto maxs = ordered_json::array();
    for (const auto& f : record.maximizers) maxs.push_back(to_json(f));
    j["maximizers"] = std::move(maxs);
    return j;
}

ordered_json to_json(const ExtremalReport& report) {
    ordered_json j;
    j["n"] = report.n;
    j["class"] = to_string(report.graph_class);
    j["enumeration_total"] = report.enumeration_total;
    auto records = ordered_json::array();
    for (const auto& rec : report.records) records.push_back(to_json(rec));
    j["records"] = std::move(records);
    return j;
}

ordered_json to_json(const VerificationVerdict& verdict) {
    ordered_json j;
    j["theorem"] = theorem_name(verdict.theorem);
    j["n"] = verdict.n;
    j["pass"] = verdict.pass;
    auto ds = ordered_json::array();
    for (const auto& d : verdict.discrepancies) {
        ordered_json dj;
        dj["alpha"] = d.alpha;
        auto exp = ordered_json::array();
        for (const auto& f : d.expected) exp.push_back(to_json(f));
        dj["expected"] = std::move(exp);
        auto obs = ordered_json::array();
        for (const auto& f : d.observed) obs.push_back(to_json(f));
        dj["observed"] = std::move(obs);
        ds.push_back(std::move(dj));
    }
    j["discrepancies"] = std::move(ds);
    return j;
}

ordered_json to_json(const CounterexampleReport& report) {
    ordered_json j;
    ordered_json w;
    w["g3"] = graph_to_json(report.witness.g3);
    w["g4"] = graph_to_json(report.witness.g4);
    w["f3"] = report.witness.f3.str();
    w["f4"] = report.witness.f4.str();
    w["holds"] = report.witness.holds;
    j["size_vs_fib"] = std::move(w);
    auto pairs = ordered_json::array();
    for (const auto& p : report.ratio_pairs) {
        ordered_json pj;
        pj["r"] = p.r;
        pj["turan_fib"] = p.turan_fib.str();
        pj["star_fib"] = p.star_fib.str();
        pairs.push_back(std::move(pj));
    }
    j["turan_vs_star"] = std::move(pairs);
    j["all_hold"] = report.all_hold;
    return j;
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace fibindex
