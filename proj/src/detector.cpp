#include "zsum/detector.hpp"

#include <string>

#include "zsum/errors.hpp"

namespace zsum {

namespace {

// Advance a sorted index vector to the next m-combination of [0, n).
// Returns false after the last one.
bool next_combination(std::vector<int>& idx, int n) {
    int m = static_cast<int>(idx.size());
    int i = m - 1;
    while (i >= 0 && idx[i] == n - m + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

std::vector<int8_t> weight_matrix(const SignedWeighting& w) {
    int n = w.n();
    std::vector<int8_t> mat(static_cast<size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int8_t x = static_cast<int8_t>(w.weight(u, v));
            mat[static_cast<size_t>(u) * n + v] = x;
            mat[static_cast<size_t>(v) * n + u] = x;
        }
    return mat;
}

} // namespace

Certificate find_zero_sum_clique(const SignedWeighting& w, int m) {
    int n = w.n();
    if (m < 2 || m > n) throw BadOrder("clique order must be in [2, n]");

    if (w.range() == 1 && (choose2(m) % 2) != 0) {
        return {CertificateKind::NoneExists, m, {},
                "parity shortcut: C(m,2) odd, range-1 weights cannot cancel"};
    }

    const std::vector<int8_t> mat = weight_matrix(w);
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    long long scanned = 0;
    do {
        ++scanned;
        long long sum = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                sum += mat[static_cast<size_t>(idx[i]) * n + idx[j]];
        if (sum == 0) {
            return {CertificateKind::ZeroSumWitness, m, idx,
                    "lexicographic scan, witness after " + std::to_string(scanned) + " subsets"};
        }
    } while (next_combination(idx, n));
    return {CertificateKind::NoneExists, m, {},
            "exhaustive scan of " + std::to_string(scanned) + " subsets, no zero-weight clique"};
}

bool zero_sum_k4_free_by_scan(const SignedWeighting& w) {
    if (w.n() < 4) return true;
    return find_zero_sum_clique(w, 4).kind == CertificateKind::NoneExists;
}

bool zero_sum_k4_free_by_structure(const SignedWeighting& w) {
    if (w.range() != 1) throw ArgumentOutOfRange("structural path requires range 1");
    if (w.n() < 4) return true;
    SimpleGraph neg = w.weight_class_graph(-1);
    return !induced_forbidden_scan(neg).has_value();
}

bool is_zero_sum_k4_free(const SignedWeighting& w) {
    if (w.range() != 1) throw ArgumentOutOfRange("zero-sum-K4 freeness test requires range 1");
    bool by_scan = zero_sum_k4_free_by_scan(w);
    bool by_structure = zero_sum_k4_free_by_structure(w);
    if (by_scan != by_structure)
        throw InternalInconsistency("4-subset scan and induced forbidden scan disagree");
    return by_scan;
}

std::optional<ForbiddenWitness> induced_forbidden_scan(const SimpleGraph& g) {
    int n = g.n();
    if (n < 4) return std::nullopt;
    std::vector<int> idx = {0, 1, 2, 3};
    do {
        int deg[4] = {0, 0, 0, 0};
        int edges = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (g.adjacent(idx[i], idx[j])) {
                    ++edges;
                    ++deg[i];
                    ++deg[j];
                }
        if (edges != 3) continue;
        ForbiddenPattern pat = ForbiddenPattern::P3;
        for (int d : deg) {
            if (d == 3) pat = ForbiddenPattern::K13;
            if (d == 0) pat = ForbiddenPattern::K3uK1;
        }
        return ForbiddenWitness{pat, {idx[0], idx[1], idx[2], idx[3]}};
    } while (next_combination(idx, n));
    return std::nullopt;
}

bool is_triangle_free(const SignedWeighting& w, int weight_class) {
    return is_triangle_free(w.weight_class_graph(weight_class));
}

long long clique_weight_formula(Construction c, int n, int a, int m, int t) {
    if (n < 1 || a < 1 || a > n) throw ArgumentOutOfRange("need 1 <= a <= n");
    if (m < 0 || m > n) throw ArgumentOutOfRange("need 0 <= m <= n");
    if (t < 0 || t > std::min(a, m) || m - t > n - a)
        throw ArgumentOutOfRange("t must embed: 0 <= t <= min(a,m), m-t <= n-a");
    switch (c) {
        case Construction::CliqueNeg:
            return choose2(m) - 2 * choose2(t);
        case Construction::Bipartition:
            return 2LL * t * (m - t) - choose2(m);
        case Construction::WideRange:
            return -2 * choose2(t) + choose2(m - t);
    }
    throw ArgumentOutOfRange("unknown construction");
}

std::vector<uint64_t> four_subset_edge_masks(int n) {
    if (choose2(n) > 64) throw ArgumentOutOfRange("edge masks require C(n,2) <= 64");
    std::vector<uint64_t> out;
    if (n < 4) return out;
    std::vector<int> idx = {0, 1, 2, 3};
    do {
        uint64_t mask = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                mask |= 1ull << edge_index(n, idx[i], idx[j]);
        out.push_back(mask);
    } while (next_combination(idx, n));
    return out;
}

std::vector<uint64_t> triangle_edge_masks(int n) {
    if (choose2(n) > 64) throw ArgumentOutOfRange("edge masks require C(n,2) <= 64");
    std::vector<uint64_t> out;
    if (n < 3) return out;
    std::vector<int> idx = {0, 1, 2};
    do {
        uint64_t mask = (1ull << edge_index(n, idx[0], idx[1])) |
                        (1ull << edge_index(n, idx[0], idx[2])) |
                        (1ull << edge_index(n, idx[1], idx[2]));
        out.push_back(mask);
    } while (next_combination(idx, n));
    return out;
}

} // namespace zsum
