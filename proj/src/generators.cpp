#include "fibindex/generators.hpp"

#include <map>
#include <random>

#include "fibindex/canonical.hpp"

namespace fibindex {

std::string family_name(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::empty_complement: return "empty-complement";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::star: return "star";
        case Family::complete_split: return "complete-split";
        case Family::turan: return "turan";
        case Family::turan_connected: return "turan-connected";
    }
    throw std::invalid_argument("unknown family");
}

namespace {

const std::map<std::string, Family>& family_table() {
    static const std::map<std::string, Family> table = {
        {"complete", Family::complete},
        {"empty-complement", Family::empty_complement},
        {"path", Family::path},
        {"cycle", Family::cycle},
        {"star", Family::star},
        {"complete-split", Family::complete_split},
        {"turan", Family::turan},
        {"turan-connected", Family::turan_connected},
    };
    return table;
}

bool parse_number(const std::string& text, int& out) {
    if (text.empty() || text.size() > 6) return false;
    long long v = 0;
    for (char c : text) {
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
    }
    out = static_cast<int>(v);
    return true;
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    const auto it = family_table().find(name);
    if (it == family_table().end())
        throw std::invalid_argument("unknown family \"" + name + "\"");

    FamilySpec spec;
    spec.family = it->second;
    bool have_n = false, have_alpha = false;
    std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string item = rest.substr(0, comma);
        rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected key=value, got \"" + item + "\"");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        int number = 0;
        if (!parse_number(value, number))
            throw std::invalid_argument("value for \"" + key + "\" must be a decimal number, got \"" +
                                        value + "\"");
        if (key == "n") {
            if (have_n) throw std::invalid_argument("duplicate key n");
            spec.n = number;
            have_n = true;
        } else if (key == "alpha") {
            if (have_alpha) throw std::invalid_argument("duplicate key alpha");
            spec.alpha = number;
            have_alpha = true;
        } else {
            throw std::invalid_argument("unknown key \"" + key + "\"");
        }
    }
    if (!have_n) throw std::invalid_argument("family \"" + name + "\" requires key n");
    const bool needs_alpha = spec.family == Family::complete_split ||
                             spec.family == Family::turan ||
                             spec.family == Family::turan_connected;
    if (needs_alpha && !have_alpha)
        throw std::invalid_argument("family \"" + name + "\" requires key alpha");
    return spec;
}

std::vector<std::pair<int, int>> turan_blocks(int n, int alpha) {
    if (alpha < 1 || alpha > n)
        throw std::invalid_argument("turan requires 1 <= alpha <= n (got n=" + std::to_string(n) +
                                    ", alpha=" + std::to_string(alpha) + ")");
    const int small = n / alpha;
    const int p = n % alpha;
    std::vector<std::pair<int, int>> blocks;
    blocks.reserve(static_cast<std::size_t>(alpha));
    int start = 0;
    for (int i = 0; i < alpha; ++i) {
        const int size = small + (i < p ? 1 : 0);
        blocks.emplace_back(start, size);
        start += size;
    }
    return blocks;
}

std::vector<std::pair<int, int>> turan_connected_bridges(int n, int alpha) {
    if (alpha < 1 || alpha > n - 1)
        throw std::invalid_argument("turan-connected requires 1 <= alpha <= n-1 (got n=" +
                                    std::to_string(n) + ", alpha=" + std::to_string(alpha) + ")");
    std::vector<std::pair<int, int>> out;
    const auto blocks = turan_blocks(n, alpha);
    for (std::size_t i = 1; i < blocks.size(); ++i) out.emplace_back(0, blocks[i].first);
    return out;
}

Graph generate(const FamilySpec& spec) {
    const int n = spec.n;
    const int alpha = spec.alpha;
    if (n > kMaxVertices)
        throw std::invalid_argument("generators support n <= " + std::to_string(kMaxVertices) +
                                    " (got n=" + std::to_string(n) + ")");
    std::vector<std::pair<int, int>> es;
    switch (spec.family) {
        case Family::complete:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
            return Graph::from_edges(n, es);
        case Family::empty_complement:
            return Graph(n);
        case Family::path:
            if (n < 1) throw std::invalid_argument("path requires n >= 1");
            for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
            return Graph::from_edges(n, es);
        case Family::cycle:
            if (n < 3) throw std::invalid_argument("cycle requires n >= 3 (got n=" +
                                                   std::to_string(n) + ")");
            for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
            es.emplace_back(0, n - 1);
            return Graph::from_edges(n, es);
        case Family::star:
            if (n < 1) throw std::invalid_argument("star requires n >= 1");
            for (int i = 1; i < n; ++i) es.emplace_back(0, i);
            return Graph::from_edges(n, es);
        case Family::complete_split:
            if (alpha < 1 || alpha > n)
                throw std::invalid_argument("complete-split requires 1 <= alpha <= n (got n=" +
                                            std::to_string(n) + ", alpha=" + std::to_string(alpha) +
                                            ")");
            // stable set 0..alpha-1, clique alpha..n-1, all cross edges
            for (int i = alpha; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
                for (int j = 0; j < alpha; ++j) es.emplace_back(j, i);
            }
            return Graph::from_edges(n, es);
        case Family::turan:
            for (const auto& [start, size] : turan_blocks(n, alpha))
                for (int i = start; i < start + size; ++i)
                    for (int j = i + 1; j < start + size; ++j) es.emplace_back(i, j);
            return Graph::from_edges(n, es);
        case Family::turan_connected: {
            const auto hub_edges = turan_connected_bridges(n, alpha);  // also validates
            for (const auto& [start, size] : turan_blocks(n, alpha))
                for (int i = start; i < start + size; ++i)
                    for (int j = i + 1; j < start + size; ++j) es.emplace_back(i, j);
            es.insert(es.end(), hub_edges.begin(), hub_edges.end());
            return Graph::from_edges(n, es);
        }
    }
    throw std::invalid_argument("unknown family");
}

bool family_identities_check(int n) {
    if (n < 3)
        throw std::invalid_argument("family identities need n >= 3 (got n=" + std::to_string(n) +
                                    ")");
    auto form = [](const FamilySpec& spec) { return canonical_form(generate(spec)); };
    const bool clique_like = form({Family::turan, n, 1}) == form({Family::complete, n, 0}) &&
                             form({Family::turan_connected, n, 1}) == form({Family::complete, n, 0}) &&
                             form({Family::complete_split, n, 1}) == form({Family::complete, n, 0});
    const bool stable_like = form({Family::turan, n, n}) == form({Family::empty_complement, n, 0}) &&
                             form({Family::complete_split, n, n}) == form({Family::empty_complement, n, 0});
    const bool star_like = form({Family::turan_connected, n, n - 1}) == form({Family::star, n, 0}) &&
                           form({Family::complete_split, n, n - 1}) == form({Family::star, n, 0});
    return clique_like && stable_like && star_like;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("random_graph requires 0 <= n <= " +
                                    std::to_string(kMaxVertices) + " (got n=" + std::to_string(n) +
                                    ")");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0,1]");
    std::vector<std::pair<int, int>> es;
    if (p >= 1.0) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    } else if (p > 0.0) {
        std::mt19937_64 rng(seed);
        const auto threshold =
            static_cast<std::uint64_t>(p * 18446744073709551616.0L);  // floor(p * 2^64)
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() < threshold) es.emplace_back(u, v);
    }
    return Graph::from_edges(n, es);
}

}  // namespace fibindex
