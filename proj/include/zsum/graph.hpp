#pragma once

#include <cstdint>
#include <vector>

namespace zsum {

// Undirected simple graph on [0, n); adjacency kept as bit rows.
class SimpleGraph {
public:
    explicit SimpleGraph(int n);

    int n() const { return n_; }
    void add_edge(int u, int v);
    void clear_edges();
    bool adjacent(int u, int v) const;
    int degree(int v) const;
    long long num_edges() const;

    // Raw adjacency row of v, (n+63)/64 words, bit u set iff {u,v} is an edge.
    const uint64_t* row(int v) const { return rows_.data() + static_cast<size_t>(v) * words_; }
    int words_per_row() const { return words_; }

private:
    int n_;
    int words_;
    std::vector<uint64_t> rows_;
};

enum class ComponentType { K1, K2, P2, C4, Other };

// Multiset of component types. P2 is the 2-edge path on 3 vertices.
struct ComponentProfile {
    int k1 = 0;
    int k2 = 0;
    int p2 = 0;
    int c4 = 0;
    int other = 0;          // component count
    int other_vertices = 0; // vertices inside Other components

    bool operator==(const ComponentProfile&) const = default;
    int total_vertices() const { return k1 + 2 * k2 + 3 * p2 + 4 * c4 + other_vertices; }
};

// Components fingerprinted by (size, edges, degrees):
// (1,0) K1, (2,1) K2, (3,2,maxdeg 2) P2, (4,4,all deg 2) C4, anything else Other.
ComponentProfile classify_components(const SimpleGraph& g);

// True iff no 3-subset induces 3 edges.
bool is_triangle_free(const SimpleGraph& g);

} // namespace zsum
