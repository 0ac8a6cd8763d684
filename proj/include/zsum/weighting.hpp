#pragma once

// Signed edge weightings of K_n and the explicit constructions that are
// either balanced or extremal zero-sum-K4 free, plus the h(n)/g(n)
// threshold formulas.

#include <cstdint>
#include <utility>
#include <vector>

#include "zsum/graph.hpp"

namespace zsum {

inline long long choose2(long long n) { return n * (n - 1) / 2; }

// Lexicographic edge index of pair (u,v), 0 <= u < v < n.
int edge_index(int n, int u, int v);
std::pair<int, int> edge_endpoints(int n, int index);

struct ThresholdValues {
    int n = 0;
    int h = 0; // n+1 when n ≡ 0 (mod 4), else n
    int g = 0; // 2h
};

ThresholdValues threshold_values(int n);

// Assignment of integer weights to the C(n,2) edges of K_n, in edge-index
// order. The declared range r is 1 ({-1,+1}, zero forbidden) or 2
// ({-2..2}). Immutable after construction.
class SignedWeighting {
public:
    static SignedWeighting from_weights(int n, int range, std::vector<int8_t> weights);
    // r=1 weighting from a packed bit vector, bit set <=> weight +1.
    static SignedWeighting from_bits(int n, uint64_t positive_bits);

    int n() const { return n_; }
    int range() const { return range_; }
    const std::vector<int8_t>& weights() const { return weights_; }
    int weight(int u, int v) const { return weights_[edge_index(n_, u, v)]; }

    long long weight_sum() const;
    long long count_weight(int value) const; // e(i)
    bool balanced() const;                   // r=1 only: e(-1) == e(1)

    // Packed view for exhaustive scans; requires r=1 and C(n,2) <= 64.
    uint64_t to_bits() const;

    // Graph induced by the i-weighted edges (G_i).
    SimpleGraph weight_class_graph(int value) const;

    SignedWeighting negated() const;

    bool operator==(const SignedWeighting&) const = default;

private:
    SignedWeighting(int n, int range, std::vector<int8_t> weights);

    int n_;
    int range_;
    std::vector<int8_t> weights_;
};

// Self-test identity for r=1: |sum| == C(n,2) - 2*min{e(-1), e(1)}.
bool imbalance_identity_check(const SignedWeighting& w);

// -1 inside A = [0,a), +1 elsewhere.
SignedWeighting clique_negative_weighting(int n, int a);

// +1 across the (A,B) cut with A = [0,a), -1 inside either side.
SignedWeighting bipartition_weighting(int n, int a);

enum class JChoice { Empty, K1, K2, P2 };

// G_1 = floor(n/4) disjoint 4-cycles on the first vertices plus J on the
// remainder; every other edge -1. Requires |J| = n mod 4.
SignedWeighting extremal_k4_free_weighting(int n, JChoice j_choice);

// r=2: -2 inside X = [0,x_size), +1 inside Y, 0 across.
SignedWeighting wide_range_weighting(int n, int x_size);

} // namespace zsum
