#include "degdiam/cayley.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <set>
#include <utility>

namespace degdiam {

GeneratorSet GeneratorSet::close_under_inverses(const Group& group,
                                                const std::vector<Element>& raw) {
    if (raw.empty()) throw EmptySet("generator set is empty");
    const Element id = group.identity();
    std::vector<Element> elements;
    std::set<Element> seen;
    for (const Element& r : raw) {
        if (r == id) throw ContainsIdentity("generator " + to_string(r) + " is the identity");
        if (seen.insert(r).second) elements.push_back(r);
    }
    const std::size_t base_count = elements.size();
    for (std::size_t i = 0; i < base_count; ++i) {
        const Element inv = group.inverse(elements[i]);
        if (seen.insert(inv).second) elements.push_back(inv);
    }
    int involutions = 0;
    for (const Element& s : elements)
        if (group.inverse(s) == s) ++involutions;
    return GeneratorSet(group, std::move(elements), involutions);
}

std::vector<Element> neighbors(const GeneratorSet& S, const Element& v) {
    std::vector<Element> out;
    out.reserve(S.elements().size());
    for (const Element& s : S.elements()) out.push_back(S.group().multiply(v, s));
    return out;
}

CayleyStats bfs_stats(const GeneratorSet& S, std::int64_t max_vertices) {
    const Group& G = S.group();
    const std::int64_t N = G.order();
    if (N > max_vertices)
        throw MemoryBudgetExceeded("group order " + std::to_string(N) +
                                   " exceeds the vertex budget " +
                                   std::to_string(max_vertices));
    if (N > std::numeric_limits<std::uint32_t>::max())
        throw MemoryBudgetExceeded("group order " + std::to_string(N) +
                                   " exceeds 32-bit vertex indices");

    constexpr std::uint8_t kUnvisited = 0xFF;
    std::vector<std::uint8_t> dist(static_cast<std::size_t>(N), kUnvisited);
    std::vector<std::uint32_t> frontier{0};  // index(identity) = 0
    dist[0] = 0;

    CayleyStats stats;
    stats.order = N;
    stats.degree = S.degree();
    stats.distance_histogram.push_back(1);
    stats.reached = 1;

    std::vector<std::uint32_t> next;
    int level = 0;
    while (!frontier.empty()) {
        if (level == kUnvisited - 1) {
            // Next distance would be 255, the unvisited sentinel.
            next.clear();
            for (std::uint32_t v : frontier)
                for (const Element& nb : neighbors(S, G.unindex(v)))
                    if (dist[static_cast<std::size_t>(G.index(nb))] == kUnvisited)
                        throw DistanceOverflow("distance 255 does not fit the 8-bit "
                                               "distance array");
            break;
        }
        next.clear();
        for (std::uint32_t v : frontier) {
            const Element ve = G.unindex(v);
            for (const Element& s : S.elements()) {
                const auto w = static_cast<std::size_t>(G.index(G.multiply(ve, s)));
                if (dist[w] == kUnvisited) {
                    dist[w] = static_cast<std::uint8_t>(level + 1);
                    next.push_back(static_cast<std::uint32_t>(w));
                }
            }
        }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        ++level;
        stats.distance_histogram.push_back(static_cast<std::int64_t>(next.size()));
        stats.reached += static_cast<std::int64_t>(next.size());
        frontier.swap(next);
    }

    stats.connected = (stats.reached == N);
    if (stats.connected) stats.diameter = level;
    return stats;
}

std::optional<int> all_pairs_diameter_oracle(const GeneratorSet& S) {
    const Group& G = S.group();
    const std::int64_t N = G.order();
    if (N > 5000)
        throw TooLarge("all-pairs oracle limited to 5000 vertices, got " + std::to_string(N));

    const auto n = static_cast<std::size_t>(N);
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (std::size_t v = 0; v < n; ++v) {
        const Element ve = G.unindex(static_cast<std::int64_t>(v));
        for (const Element& s : S.elements())
            adj[v].push_back(static_cast<std::uint32_t>(G.index(G.multiply(ve, s))));
    }

    int diameter = 0;
    std::vector<std::int32_t> dist(n);
    std::vector<std::uint32_t> queue(n);
    for (std::size_t src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        std::size_t head = 0, tail = 0;
        queue[tail++] = static_cast<std::uint32_t>(src);
        dist[src] = 0;
        int ecc = 0;
        while (head < tail) {
            const std::uint32_t v = queue[head++];
            for (std::uint32_t w : adj[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    ecc = std::max(ecc, dist[w]);
                    queue[tail++] = w;
                }
        }
        if (tail != n) return std::nullopt;
        diameter = std::max(diameter, ecc);
    }
    return diameter;
}

std::int64_t export_graph(const GeneratorSet& S, GraphFormat format, std::ostream& out) {
    const Group& G = S.group();
    const std::int64_t N = G.order();
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    for (std::int64_t v = 0; v < N; ++v) {
        const Element ve = G.unindex(v);
        for (const Element& s : S.elements()) {
            const std::int64_t w = G.index(G.multiply(ve, s));
            if (v < w) edges.emplace_back(v, w);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    if (format == GraphFormat::dimacs) {
        out << "p edge " << N << ' ' << edges.size() << '\n';
        for (const auto& [u, v] : edges) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
    } else {
        for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
    }
    if (!out) throw SinkError("graph export sink failed");
    return static_cast<std::int64_t>(edges.size());
}

}  // namespace degdiam
