#include "zsum/auditor.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "zsum/errors.hpp"

namespace zsum {

namespace {

int resolve_workers(int parallelism) {
    if (parallelism > 0) return parallelism;
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

std::vector<std::pair<uint64_t, uint64_t>> split_range(uint64_t total, int workers) {
    if (total == 0) return {};
    uint64_t w = std::min<uint64_t>(static_cast<uint64_t>(std::max(workers, 1)), total);
    std::vector<std::pair<uint64_t, uint64_t>> out;
    uint64_t chunk = total / w, rest = total % w, begin = 0;
    for (uint64_t i = 0; i < w; ++i) {
        uint64_t end = begin + chunk + (i < rest ? 1 : 0);
        out.emplace_back(begin, end);
        begin = end;
    }
    return out;
}

// Keeps the `kViolationCap` smallest offending masks plus the exact total.
struct ViolationSet {
    std::vector<uint64_t> masks; // ascending
    long long total = 0;

    void insert_capped(uint64_t m) {
        auto it = std::lower_bound(masks.begin(), masks.end(), m);
        if (masks.size() < AuditReport::kViolationCap) {
            masks.insert(it, m);
        } else if (!masks.empty() && m < masks.back()) {
            masks.insert(it, m);
            masks.pop_back();
        }
    }
    void add(uint64_t m) {
        ++total;
        insert_capped(m);
    }
    void merge(const ViolationSet& o) {
        total += o.total;
        for (uint64_t m : o.masks) insert_capped(m);
    }
};

uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<uint64_t>(n - k + i) / i;
    return r;
}

// C(n,k) capped at `cap`; safe for large n where the exact value overflows.
long long binom_capped(long long n, long long k, long long cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        if (r > static_cast<unsigned long long>(cap)) return cap + 1;
        r = r * static_cast<unsigned long long>(n - k + i) / i;
    }
    return r > static_cast<unsigned long long>(cap) ? cap + 1 : static_cast<long long>(r);
}

// Next k-bit mask in increasing numeric order (Gosper).
uint64_t next_support(uint64_t v) {
    uint64_t u = v & (~v + 1);
    uint64_t s = v + u;
    return s | (((v ^ s) >> 2) / u);
}

// Mask of the rank-th k-subset in increasing numeric (colex) order.
uint64_t unrank_support(uint64_t rank, int k) {
    uint64_t mask = 0;
    for (int i = k; i >= 1; --i) {
        int p = i - 1;
        while (binom(p + 1, i) <= rank) ++p;
        mask |= 1ull << p;
        rank -= binom(p, i);
    }
    return mask;
}

ComponentProfile extremal_target_profile(int n) {
    ComponentProfile t;
    t.c4 = n / 4;
    switch (n % 4) {
        case 1: t.k1 = 1; break;
        case 2: t.k2 = 1; break;
        case 3: t.p2 = 1; break;
        default: break;
    }
    return t;
}

// Component classification straight off a packed edge mask, n <= 11.
// Mirrors classify_components on the positive graph; cross-checked in tests.
ComponentProfile classify_support(int n, uint64_t mask,
                                  const std::vector<std::pair<int, int>>& endpoints) {
    std::array<uint16_t, 11> adj{};
    for (uint64_t bits = mask; bits; bits &= bits - 1) {
        int i = std::countr_zero(bits);
        adj[endpoints[i].first] |= static_cast<uint16_t>(1u << endpoints[i].second);
        adj[endpoints[i].second] |= static_cast<uint16_t>(1u << endpoints[i].first);
    }
    ComponentProfile profile;
    uint16_t visited = 0;
    for (int v = 0; v < n; ++v) {
        if (visited >> v & 1) continue;
        uint16_t comp = static_cast<uint16_t>(1u << v);
        uint16_t frontier = comp;
        while (frontier) {
            uint16_t grow = 0;
            for (uint16_t f = frontier; f; f &= f - 1) grow |= adj[std::countr_zero(f)];
            frontier = grow & ~comp;
            comp |= frontier;
        }
        int size = std::popcount(comp);
        int deg_sum = 0, max_deg = 0, min_deg = n;
        for (uint16_t c = comp; c; c &= c - 1) {
            int d = std::popcount(adj[std::countr_zero(c)]);
            deg_sum += d;
            max_deg = std::max(max_deg, d);
            min_deg = std::min(min_deg, d);
        }
        int edges = deg_sum / 2;
        if (size == 1 && edges == 0) ++profile.k1;
        else if (size == 2 && edges == 1) ++profile.k2;
        else if (size == 3 && edges == 2 && max_deg == 2) ++profile.p2;
        else if (size == 4 && edges == 4 && min_deg == 2 && max_deg == 2) ++profile.c4;
        else {
            ++profile.other;
            profile.other_vertices += size;
        }
        visited |= comp;
    }
    return profile;
}

std::vector<std::pair<int, int>> edge_endpoint_table(int n) {
    std::vector<std::pair<int, int>> out(choose2(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) out[edge_index(n, u, v)] = {u, v};
    return out;
}

void require_desk_scale(int n) {
    if (n < 5 || n > 8) throw ScaleRefused("exhaustive audit supports 5 <= n <= 8");
}

} // namespace

AuditReport audit_threshold_k4(int n, const ThresholdOptions& opt) {
    require_desk_scale(n);
    const int edges = static_cast<int>(choose2(n));
    const ThresholdValues tv = threshold_values(n);
    const int h = opt.threshold_override > 0 ? opt.threshold_override : tv.h;
    const int g = 2 * h;
    const auto subs = four_subset_edge_masks(n);
    const auto tris = triangle_edge_masks(n);
    const uint64_t space = 1ull << edges;
    const uint64_t full = space - 1;

    struct Acc {
        long long filtered = 0;
        long long equiv_mismatch = 0;
        long long free_total = 0;
        long long sharp_min = 0;
        long long sharp_e1 = 0;
        long long one_side_violations = 0;
        ViolationSet violations;
    };

    auto has_triangle = [&](uint64_t mask) {
        for (uint64_t t : tris)
            if ((mask & t) == t) return true;
        return false;
    };
    auto is_free = [&](uint64_t mask) {
        for (uint64_t s : subs)
            if (std::popcount(mask & s) == 3) return false;
        return true;
    };

    auto visit = [&](Acc& acc, uint64_t mask) {
        int e1 = std::popcount(mask);
        int eneg = edges - e1;
        int mn = std::min(e1, eneg);
        long long sum = e1 - eneg;
        bool filter_min = mn >= h;
        bool filter_sum = std::abs(sum) <= edges - g;
        if (filter_min != filter_sum) ++acc.equiv_mismatch;
        if (filter_min) ++acc.filtered;
        if (!is_free(mask)) return;
        ++acc.free_total;
        if (n >= 5 && has_triangle(mask) && has_triangle(full & ~mask)) ++acc.one_side_violations;
        if (mn == h - 1) ++acc.sharp_min;
        if (e1 == h - 1) ++acc.sharp_e1;
        if (filter_min) acc.violations.add(mask);
    };

    // With complement symmetry only masks with the first edge positive are
    // visited; the complement's contribution is derived from the same scan.
    auto visit_pair = [&](Acc& acc, uint64_t mask) {
        uint64_t comp = full & ~mask;
        int e1 = std::popcount(mask);
        int eneg = edges - e1;
        int mn = std::min(e1, eneg);
        long long sum = e1 - eneg;
        bool filter_min = mn >= h;
        bool filter_sum = std::abs(sum) <= edges - g;
        if (filter_min != filter_sum) acc.equiv_mismatch += 2;
        if (filter_min) acc.filtered += 2;
        if (!is_free(mask)) return;
        acc.free_total += 2;
        if (n >= 5 && has_triangle(mask) && has_triangle(comp)) acc.one_side_violations += 2;
        if (mn == h - 1) acc.sharp_min += 2;
        if (e1 == h - 1) ++acc.sharp_e1;
        if (eneg == h - 1) ++acc.sharp_e1;
        if (filter_min) {
            acc.violations.add(mask);
            acc.violations.add(comp);
        }
    };

    const uint64_t iterations = opt.complement_symmetry ? space / 2 : space;
    auto ranges = split_range(iterations, resolve_workers(opt.parallelism));
    std::vector<Acc> accs(ranges.size());
    {
        std::vector<std::thread> pool;
        pool.reserve(ranges.size());
        for (size_t w = 0; w < ranges.size(); ++w) {
            pool.emplace_back([&, w] {
                auto [lo, hi] = ranges[w];
                Acc& acc = accs[w];
                if (opt.complement_symmetry) {
                    for (uint64_t k = lo; k < hi; ++k) visit_pair(acc, 2 * k + 1);
                } else {
                    for (uint64_t mask = lo; mask < hi; ++mask) visit(acc, mask);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    Acc total;
    for (const Acc& a : accs) {
        total.filtered += a.filtered;
        total.equiv_mismatch += a.equiv_mismatch;
        total.free_total += a.free_total;
        total.sharp_min += a.sharp_min;
        total.sharp_e1 += a.sharp_e1;
        total.one_side_violations += a.one_side_violations;
        total.violations.merge(a.violations);
    }

    AuditReport report;
    report.statement = AuditStatement::ThresholdK4;
    report.n = n;
    report.total_scanned = static_cast<long long>(space);
    report.violation_count = total.violations.total;
    for (uint64_t mask : total.violations.masks)
        report.violations.push_back(SignedWeighting::from_bits(n, mask));
    report.statistics["filter_equivalence_mismatches"] = total.equiv_mismatch;
    report.statistics["filtered"] = total.filtered;
    report.statistics["one_side_triangle_free_violations"] = total.one_side_violations;
    report.statistics["sharpness_witnesses_e1"] = total.sharp_e1;
    report.statistics["sharpness_witnesses_min"] = total.sharp_min;
    report.statistics["zero_sum_k4_free_total"] = total.free_total;
    return report;
}

AuditReport audit_extremal_k4(int n, int parallelism) {
    require_desk_scale(n);
    const int edges = static_cast<int>(choose2(n));
    const int support_size = threshold_values(n).h - 1;
    const auto subs = four_subset_edge_masks(n);
    const auto endpoints = edge_endpoint_table(n);
    const ComponentProfile target = extremal_target_profile(n);
    const uint64_t total_supports = binom(edges, support_size);

    struct Acc {
        long long free_supports = 0;
        long long match_supports = 0;
        ViolationSet violations;
    };

    auto ranges = split_range(total_supports, resolve_workers(parallelism));
    std::vector<Acc> accs(ranges.size());
    {
        std::vector<std::thread> pool;
        pool.reserve(ranges.size());
        for (size_t w = 0; w < ranges.size(); ++w) {
            pool.emplace_back([&, w] {
                auto [lo, hi] = ranges[w];
                Acc& acc = accs[w];
                uint64_t mask = unrank_support(lo, support_size);
                for (uint64_t r = lo; r < hi; ++r, mask = next_support(mask)) {
                    bool free = true;
                    for (uint64_t s : subs)
                        if (std::popcount(mask & s) == 3) {
                            free = false;
                            break;
                        }
                    bool match = classify_support(n, mask, endpoints) == target;
                    if (free) ++acc.free_supports;
                    if (match) ++acc.match_supports;
                    if (free != match) acc.violations.add(mask);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    Acc total;
    for (const Acc& a : accs) {
        total.free_supports += a.free_supports;
        total.match_supports += a.match_supports;
        total.violations.merge(a.violations);
    }

    AuditReport report;
    report.statement = AuditStatement::ExtremalK4;
    report.n = n;
    report.total_scanned = static_cast<long long>(total_supports);
    report.violation_count = total.violations.total;
    for (uint64_t mask : total.violations.masks)
        report.violations.push_back(SignedWeighting::from_bits(n, mask));
    report.statistics["profile_match_supports"] = total.match_supports;
    report.statistics["zero_sum_k4_free_supports"] = total.free_supports;
    return report;
}

AuditReport audit_balanced_construction(Construction kind, int n, int m_max,
                                        const BalancedOptions& opt) {
    if (kind == Construction::WideRange)
        throw ArgumentOutOfRange("balanced audit covers the clique-negative and bipartition constructions");
    if (n < 1) throw ArgumentOutOfRange("n must be >= 1");
    if (m_max < 2 || m_max > n) throw ArgumentOutOfRange("need 2 <= m_max <= n");

    // Derive the paired partition size from the membership streams.
    int a = -1;
    if (kind == Construction::CliqueNeg) {
        pell::BigInt bound = n;
        for (const auto& sol : pell::bal_clique_stream(64)) {
            pell::BigInt nk = (1 + sol.y) / 2;
            if (nk == bound) {
                a = static_cast<int>(sol.x.get_si());
                break;
            }
            if (nk > bound) break;
        }
        if (a < 0) throw NotBalanced("n is not an admissible order for the clique-negative construction");
    } else {
        pell::BigInt root;
        mpz_sqrt(root.get_mpz_t(), pell::BigInt(n).get_mpz_t());
        long k = root.get_si();
        if (k * k != n) throw NotBalanced("n is not a perfect square");
        a = static_cast<int>(k * (k + 1) / 2);
    }

    SignedWeighting w =
        kind == Construction::CliqueNeg ? clique_negative_weighting(n, a) : bipartition_weighting(n, a);
    if (!w.balanced()) throw InternalInconsistency("membership-derived construction is not balanced");

    // Orders for which the matching membership set promises zero-sum freeness.
    auto is_member = [&](int m) {
        if (kind == Construction::Bipartition) return pell::is_perfect_square(m);
        for (const pell::BigInt& s : pell::s1_members(m))
            if (s == m) return true;
        return false;
    };

    AuditReport report;
    report.statement = AuditStatement::BalancedNoZsKm;
    report.n = n;
    report.statistics["balanced"] = 1;

    long long mismatches = 0, guarantee_violations = 0;
    for (int m = 2; m <= m_max; ++m) {
        bool zs_formula = false;
        int t_lo = std::max(0, m - (n - a));
        int t_hi = std::min(a, m);
        for (int t = t_lo; t <= t_hi; ++t) {
            if (clique_weight_formula(kind, n, a, m, t) == 0) {
                zs_formula = true;
                break;
            }
        }
        long long subsets = binom_capped(n, m, opt.subset_budget);
        bool within_budget = subsets <= opt.subset_budget;
        if (within_budget) {
            Certificate cert = find_zero_sum_clique(w, m);
            bool zs_scan = cert.kind == CertificateKind::ZeroSumWitness;
            if (zs_scan != zs_formula) ++mismatches;
            report.total_scanned += subsets;
        } else {
            report.budget_exceeded = true;
        }
        if (!is_member(m) && zs_formula) ++guarantee_violations;

        char key[32];
        std::snprintf(key, sizeof key, "m%02d_", m);
        report.statistics[std::string(key) + "zero_sum"] = zs_formula ? 1 : 0;
        report.statistics[std::string(key) + "formula_only"] = within_budget ? 0 : 1;
    }
    report.statistics["formula_scan_mismatches"] = mismatches;
    report.statistics["guarantee_violations"] = guarantee_violations;
    report.violation_count = mismatches + guarantee_violations;
    if (report.violation_count > 0) report.violations.push_back(w);
    return report;
}

AuditReport audit_s1s2(const pell::BigInt& limit) {
    if (limit < 1) throw ArgumentOutOfRange("limit must be >= 1");
    std::vector<pell::BigInt> members = pell::s1_s2_intersection(limit);
    std::vector<pell::BigInt> expected;
    if (limit >= 1) expected.emplace_back(1);
    if (limit >= 4) expected.emplace_back(4);

    long long mismatch = 0;
    {
        size_t i = 0, j = 0;
        while (i < members.size() || j < expected.size()) {
            if (i < members.size() && j < expected.size() && members[i] == expected[j]) {
                ++i;
                ++j;
            } else if (j >= expected.size() || (i < members.size() && members[i] < expected[j])) {
                ++mismatch;
                ++i;
            } else {
                ++mismatch;
                ++j;
            }
        }
    }

    AuditReport report;
    report.statement = AuditStatement::S1S2Scan;
    report.limit = limit;
    report.intersection = members;
    report.total_scanned = static_cast<long long>(pell::s1_members(limit).size());
    report.violation_count = mismatch;
    report.statistics["intersection_size"] = static_cast<long long>(members.size());
    report.statistics["s1_terms_scanned"] = report.total_scanned;
    report.statistics["unexpected_or_missing_members"] = mismatch;
    return report;
}

FamilyScanReport scan_component_family(int n, int parallelism) {
    if (n < 1 || n > 8) throw ScaleRefused("family scan supports 1 <= n <= 8");
    const int edges = static_cast<int>(choose2(n));
    const int h = threshold_values(n).h;
    const auto subs = four_subset_edge_masks(n);
    const auto tris = triangle_edge_masks(n);
    const auto endpoints = edge_endpoint_table(n);
    const ComponentProfile target = extremal_target_profile(n);
    const uint64_t space = 1ull << edges;

    struct Acc {
        long long members = 0;
        long long profile_violations = 0;
        long long bound_violations = 0;
        long long iff_violations = 0;
        long long extremal = 0;
    };

    auto ranges = split_range(space, resolve_workers(parallelism));
    std::vector<Acc> accs(ranges.size());
    {
        std::vector<std::thread> pool;
        pool.reserve(ranges.size());
        for (size_t w = 0; w < ranges.size(); ++w) {
            pool.emplace_back([&, w] {
                auto [lo, hi] = ranges[w];
                Acc& acc = accs[w];
                for (uint64_t mask = lo; mask < hi; ++mask) {
                    bool skip = false;
                    for (uint64_t t : tris)
                        if ((mask & t) == t) {
                            skip = true;
                            break;
                        }
                    if (skip) continue;
                    // triangle-free; induced 3-edge 4-subsets are K13 or P3
                    for (uint64_t s : subs)
                        if (std::popcount(mask & s) == 3) {
                            skip = true;
                            break;
                        }
                    if (skip) continue;
                    ++acc.members;
                    ComponentProfile profile = classify_support(n, mask, endpoints);
                    if (profile.other != 0) ++acc.profile_violations;
                    int ecount = std::popcount(mask);
                    if (ecount > h - 1) ++acc.bound_violations;
                    bool extremal_profile = profile == target;
                    if (extremal_profile) ++acc.extremal;
                    if ((ecount == h - 1) != extremal_profile) ++acc.iff_violations;
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    FamilyScanReport report;
    report.n = n;
    report.graphs_scanned = static_cast<long long>(space);
    for (const Acc& a : accs) {
        report.family_members += a.members;
        report.profile_violations += a.profile_violations;
        report.bound_violations += a.bound_violations;
        report.extremal_iff_violations += a.iff_violations;
        report.extremal_members += a.extremal;
    }
    return report;
}

} // namespace zsum
