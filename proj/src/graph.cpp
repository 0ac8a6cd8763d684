#include "zsum/graph.hpp"

#include <bit>

#include "zsum/errors.hpp"

namespace zsum {

SimpleGraph::SimpleGraph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0) throw ArgumentOutOfRange("vertex count must be nonnegative");
    rows_.assign(static_cast<size_t>(n_) * words_, 0);
}

void SimpleGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        throw ArgumentOutOfRange("bad edge endpoints");
    rows_[static_cast<size_t>(u) * words_ + v / 64] |= 1ull << (v % 64);
    rows_[static_cast<size_t>(v) * words_ + u / 64] |= 1ull << (u % 64);
}

void SimpleGraph::clear_edges() {
    rows_.assign(rows_.size(), 0);
}

bool SimpleGraph::adjacent(int u, int v) const {
    return (rows_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

int SimpleGraph::degree(int v) const {
    int d = 0;
    const uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

long long SimpleGraph::num_edges() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

ComponentProfile classify_components(const SimpleGraph& g) {
    const int n = g.n();
    const int words = g.words_per_row();
    ComponentProfile profile;
    std::vector<uint64_t> visited(words, 0);

    auto test = [&](const std::vector<uint64_t>& bits, int v) {
        return (bits[v / 64] >> (v % 64)) & 1;
    };

    for (int start = 0; start < n; ++start) {
        if (test(visited, start)) continue;
        // flood fill from start
        std::vector<uint64_t> comp(words, 0);
        comp[start / 64] |= 1ull << (start % 64);
        bool grew = true;
        while (grew) {
            grew = false;
            for (int v = 0; v < n; ++v) {
                if (!test(comp, v)) continue;
                const uint64_t* r = g.row(v);
                for (int w = 0; w < words; ++w) {
                    uint64_t add = r[w] & ~comp[w];
                    if (add) {
                        comp[w] |= add;
                        grew = true;
                    }
                }
            }
        }
        int size = 0;
        long long deg_sum = 0;
        int max_deg = 0, min_deg = n;
        for (int v = 0; v < n; ++v) {
            if (!test(comp, v)) continue;
            ++size;
            int d = g.degree(v);
            deg_sum += d;
            max_deg = std::max(max_deg, d);
            min_deg = std::min(min_deg, d);
        }
        long long edges = deg_sum / 2;

        if (size == 1 && edges == 0) {
            ++profile.k1;
        } else if (size == 2 && edges == 1) {
            ++profile.k2;
        } else if (size == 3 && edges == 2 && max_deg == 2) {
            ++profile.p2;
        } else if (size == 4 && edges == 4 && min_deg == 2 && max_deg == 2) {
            ++profile.c4;
        } else {
            ++profile.other;
            profile.other_vertices += size;
        }
        for (int w = 0; w < words; ++w) visited[w] |= comp[w];
    }
    return profile;
}

bool is_triangle_free(const SimpleGraph& g) {
    const int n = g.n();
    const int words = g.words_per_row();
    for (int u = 0; u < n; ++u) {
        const uint64_t* ru = g.row(u);
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) continue;
            const uint64_t* rv = g.row(v);
            // any common neighbor above v closes a triangle; checking all
            // common neighbors is equivalent and simpler
            for (int w = 0; w < words; ++w)
                if (ru[w] & rv[w]) return false;
        }
    }
    return true;
}

} // namespace zsum
