#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "degdiam/group.hpp"

namespace degdiam {

/// Inverse-closed, identity-free list of distinct elements. Edges of the
/// Cayley graph are {v, v*s} for members s; inverse closure makes the graph
/// undirected and involutions contribute one edge each.
class GeneratorSet {
public:
    /// Deduplicates raw (keeping first occurrences in input order), then
    /// appends missing inverses in the corresponding order.
    /// Throws EmptySet and ContainsIdentity.
    static GeneratorSet close_under_inverses(const Group& group, const std::vector<Element>& raw);

    const Group& group() const { return group_; }
    const std::vector<Element>& elements() const { return elements_; }
    int degree() const { return static_cast<int>(elements_.size()); }
    int involution_count() const { return involution_count_; }

private:
    GeneratorSet(Group group, std::vector<Element> elements, int involutions)
        : group_(std::move(group)), elements_(std::move(elements)),
          involution_count_(involutions) {}

    Group group_;
    std::vector<Element> elements_;
    int involution_count_ = 0;
};

/// Result of one BFS from the identity. Vertex transitivity makes the
/// identity's eccentricity the diameter of the whole graph.
struct CayleyStats {
    std::int64_t order = 0;
    int degree = 0;
    /// Empty when the set does not generate the group (graph disconnected).
    std::optional<int> diameter;
    /// distance_histogram[d] = number of vertices at distance exactly d.
    std::vector<std::int64_t> distance_histogram;
    std::int64_t reached = 0;
    bool connected = false;

    friend bool operator==(const CayleyStats&, const CayleyStats&) = default;
};

/// Default vertex budget for BFS scratch arrays (one byte per vertex).
inline constexpr std::int64_t kDefaultMaxVertices = std::int64_t{1} << 27;

/// [v*s for s in S], in S's stored order.
std::vector<Element> neighbors(const GeneratorSet& S, const Element& v);

/// Level-synchronous BFS from the identity over index-encoded vertices.
/// Frontiers are expanded in ascending index order. Throws
/// MemoryBudgetExceeded when |G| > max_vertices and DistanceOverflow when a
/// distance would exceed the 8-bit distance array.
CayleyStats bfs_stats(const GeneratorSet& S, std::int64_t max_vertices = kDefaultMaxVertices);

/// Max eccentricity over all vertices via |G| independent BFS runs; the slow
/// oracle validating the vertex-transitivity shortcut. Requires |G| <= 5000
/// (throws TooLarge); empty result when disconnected.
std::optional<int> all_pairs_diameter_oracle(const GeneratorSet& S);

enum class GraphFormat { edgelist, dimacs };

/// Writes the simple undirected graph on vertex indices and returns the edge
/// count. edgelist: "u v" per line, u < v, sorted, 0-indexed. dimacs:
/// "p edge N M" then "e u v", 1-indexed, same order. Parallel edges collapse.
/// Throws SinkError when the sink fails.
std::int64_t export_graph(const GeneratorSet& S, GraphFormat format, std::ostream& out);

}  // namespace degdiam
