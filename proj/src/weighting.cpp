#include "zsum/weighting.hpp"

#include <cstdlib>
#include <string>

#include "zsum/errors.hpp"

namespace zsum {

int edge_index(int n, int u, int v) {
    if (u < 0 || v <= u || v >= n) throw ArgumentOutOfRange("edge endpoints must satisfy 0 <= u < v < n");
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

std::pair<int, int> edge_endpoints(int n, int index) {
    if (index < 0 || index >= choose2(n)) throw ArgumentOutOfRange("edge index out of range");
    int u = 0;
    // row u covers [offset(u), offset(u) + n - u - 1)
    while (u * n - u * (u + 1) / 2 + (n - u - 1) <= index) ++u;
    int v = index - (u * n - u * (u + 1) / 2) + u + 1;
    return {u, v};
}

ThresholdValues threshold_values(int n) {
    if (n < 1) throw ArgumentOutOfRange("n must be >= 1");
    int h = (n % 4 == 0) ? n + 1 : n;
    return {n, h, 2 * h};
}

SignedWeighting::SignedWeighting(int n, int range, std::vector<int8_t> weights)
    : n_(n), range_(range), weights_(std::move(weights)) {}

SignedWeighting SignedWeighting::from_weights(int n, int range, std::vector<int8_t> weights) {
    if (n < 1) throw ArgumentOutOfRange("n must be >= 1");
    if (range != 1 && range != 2) throw ArgumentOutOfRange("range must be 1 or 2");
    if (static_cast<long long>(weights.size()) != choose2(n))
        throw ArgumentOutOfRange("weights length must be C(n,2)");
    for (int8_t w : weights) {
        if (w < -range || w > range) throw ArgumentOutOfRange("weight outside declared range");
        if (range == 1 && w == 0) throw ArgumentOutOfRange("zero weight forbidden for range 1");
    }
    return SignedWeighting(n, range, std::move(weights));
}

SignedWeighting SignedWeighting::from_bits(int n, uint64_t positive_bits) {
    if (n < 1) throw ArgumentOutOfRange("n must be >= 1");
    long long edges = choose2(n);
    if (edges > 64) throw ArgumentOutOfRange("packed view requires C(n,2) <= 64");
    std::vector<int8_t> weights(edges);
    for (long long i = 0; i < edges; ++i)
        weights[i] = (positive_bits >> i & 1) ? 1 : -1;
    return SignedWeighting(n, 1, std::move(weights));
}

uint64_t SignedWeighting::to_bits() const {
    if (range_ != 1) throw ArgumentOutOfRange("packed view requires range 1");
    if (static_cast<long long>(weights_.size()) > 64)
        throw ArgumentOutOfRange("packed view requires C(n,2) <= 64");
    uint64_t bits = 0;
    for (size_t i = 0; i < weights_.size(); ++i)
        if (weights_[i] > 0) bits |= 1ull << i;
    return bits;
}

long long SignedWeighting::weight_sum() const {
    long long s = 0;
    for (int8_t w : weights_) s += w;
    return s;
}

long long SignedWeighting::count_weight(int value) const {
    long long c = 0;
    for (int8_t w : weights_) c += (w == value);
    return c;
}

bool SignedWeighting::balanced() const {
    if (range_ != 1) throw ArgumentOutOfRange("balancedness is a range-1 notion");
    return count_weight(-1) == count_weight(1);
}

SimpleGraph SignedWeighting::weight_class_graph(int value) const {
    SimpleGraph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (weight(u, v) == value) g.add_edge(u, v);
    return g;
}

SignedWeighting SignedWeighting::negated() const {
    std::vector<int8_t> neg(weights_.size());
    for (size_t i = 0; i < weights_.size(); ++i) neg[i] = static_cast<int8_t>(-weights_[i]);
    return SignedWeighting(n_, range_, std::move(neg));
}

bool imbalance_identity_check(const SignedWeighting& w) {
    if (w.range() != 1) throw ArgumentOutOfRange("identity applies to range-1 weightings");
    long long sum = w.weight_sum();
    long long m = std::min(w.count_weight(-1), w.count_weight(1));
    return std::llabs(sum) == choose2(w.n()) - 2 * m;
}

SignedWeighting clique_negative_weighting(int n, int a) {
    if (n < 1) throw ArgumentOutOfRange("n must be >= 1");
    if (a < 1 || a > n) throw InvalidPartition("need 1 <= a <= n");
    std::vector<int8_t> weights(choose2(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            weights[edge_index(n, u, v)] = (v < a) ? -1 : 1;
    return SignedWeighting::from_weights(n, 1, std::move(weights));
}

SignedWeighting bipartition_weighting(int n, int a) {
    if (n < 1) throw ArgumentOutOfRange("n must be >= 1");
    if (a < 1 || a > n) throw InvalidPartition("need 1 <= a <= n");
    std::vector<int8_t> weights(choose2(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            weights[edge_index(n, u, v)] = (u < a && v >= a) ? 1 : -1;
    return SignedWeighting::from_weights(n, 1, std::move(weights));
}

SignedWeighting extremal_k4_free_weighting(int n, JChoice j_choice) {
    if (n < 5) throw ArgumentOutOfRange("n must be >= 5");
    int rem = n % 4;
    auto j_size = [](JChoice j) {
        switch (j) {
            case JChoice::Empty: return 0;
            case JChoice::K1: return 1;
            case JChoice::K2: return 2;
            case JChoice::P2: return 3;
        }
        return -1;
    };
    if (j_size(j_choice) != rem)
        throw IncompatibleRemainder("J must span n mod 4 = " + std::to_string(rem) + " vertices");

    std::vector<int8_t> weights(choose2(n), -1);
    int q = n / 4;
    for (int c = 0; c < q; ++c) {
        int base = 4 * c;
        // 4-cycle base - base+1 - base+2 - base+3 - base
        weights[edge_index(n, base, base + 1)] = 1;
        weights[edge_index(n, base + 1, base + 2)] = 1;
        weights[edge_index(n, base + 2, base + 3)] = 1;
        weights[edge_index(n, base, base + 3)] = 1;
    }
    int r0 = 4 * q;
    if (j_choice == JChoice::K2) {
        weights[edge_index(n, r0, r0 + 1)] = 1;
    } else if (j_choice == JChoice::P2) {
        weights[edge_index(n, r0, r0 + 1)] = 1;
        weights[edge_index(n, r0 + 1, r0 + 2)] = 1;
    }
    return SignedWeighting::from_weights(n, 1, std::move(weights));
}

SignedWeighting wide_range_weighting(int n, int x_size) {
    if (n < 1) throw ArgumentOutOfRange("n must be >= 1");
    if (x_size < 1 || x_size > n) throw InvalidPartition("need 1 <= x_size <= n");
    std::vector<int8_t> weights(choose2(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int8_t w = 0;
            if (v < x_size)
                w = -2; // both inside X
            else if (u >= x_size)
                w = 1; // both inside Y
            weights[edge_index(n, u, v)] = w;
        }
    return SignedWeighting::from_weights(n, 2, std::move(weights));
}

} // namespace zsum
