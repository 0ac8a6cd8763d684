#pragma once

// Exhaustive desk-scale certification: the zero-sum-K4 threshold, the
// extremal characterization at e(1) = h(n)-1, balancedness and zero-sum
// freeness of the explicit constructions, and the S1 ∩ S2 scan.

#include <map>
#include <string>
#include <vector>

#include "zsum/detector.hpp"
#include "zsum/pell.hpp"
#include "zsum/weighting.hpp"

namespace zsum {

enum class AuditStatement { ThresholdK4, ExtremalK4, BalancedNoZsKm, S1S2Scan };

struct AuditReport {
    static constexpr int kViolationCap = 100;

    AuditStatement statement = AuditStatement::ThresholdK4;
    int n = 0;           // all statements except S1S2Scan
    pell::BigInt limit;  // S1S2Scan
    long long total_scanned = 0;
    long long violation_count = 0;                // exact even when the list is capped
    std::vector<SignedWeighting> violations;      // at most kViolationCap entries
    std::map<std::string, long long> statistics;  // stable key order
    std::vector<pell::BigInt> intersection;       // S1S2Scan
    bool budget_exceeded = false;

    bool ok() const { return violation_count == 0; }
};

struct ThresholdOptions {
    int parallelism = 0;              // 0 = hardware concurrency
    bool complement_symmetry = false; // halve the sweep via f -> -f
    int threshold_override = -1;      // test harness only: replaces h(n)
};

// Sweeps all 2^C(n,2) r=1 weightings of K_n, 5 <= n <= 8. Asserts a
// zero-sum K4 for every weighting with min{e(-1),e(1)} >= h(n), tallies
// sharpness witnesses at h(n)-1, checks the min-count filter against the
// |sum| filter, and checks that every zero-sum-K4-free weighting has a
// triangle-free side.
AuditReport audit_threshold_k4(int n, const ThresholdOptions& opt = {});

// Enumerates the C(C(n,2), h(n)-1) supports with e(1) = h(n)-1,
// 5 <= n <= 8, and asserts: zero-sum-K4-free <=> the positive graph is
// floor(n/4) C4s plus the J matching n mod 4.
AuditReport audit_extremal_k4(int n, int parallelism = 0);

struct BalancedOptions {
    long long subset_budget = 10'000'000; // largest C(n,m) scanned directly
};

// Builds the balanced construction for n (CliqueNeg needs n in S1,
// Bipartition n in S2), asserts balancedness, and for each m in
// [2, m_max] decides zero-sum K_m existence by the closed-form t-scan
// and, within budget, by direct subset scan; the two must agree, and
// every m outside the matching membership set must be zero-sum free.
AuditReport audit_balanced_construction(Construction kind, int n, int m_max,
                                        const BalancedOptions& opt = {});

// Wraps the S1/S2 stream merge; success iff the result is {1,4} ∩ [1,limit].
AuditReport audit_s1s2(const pell::BigInt& limit);

struct FamilyScanReport {
    int n = 0;
    long long graphs_scanned = 0;
    long long family_members = 0;          // triangle-free and induced-{K13,P3}-free
    long long profile_violations = 0;      // a member with an Other component
    long long bound_violations = 0;        // a member with more than h(n)-1 edges
    long long extremal_iff_violations = 0; // edges == h(n)-1 xor extremal profile
    long long extremal_members = 0;

    bool ok() const {
        return profile_violations == 0 && bound_violations == 0 && extremal_iff_violations == 0;
    }
};

// Exhaustive check over every graph on n vertices (n <= 8): members of
// the triangle-free + induced-{K13,P3}-free family have only
// K1/K2/P2/C4 components, at most h(n)-1 edges, and hit h(n)-1 exactly
// on the floor(n/4) C4s + J graphs.
FamilyScanReport scan_component_family(int n, int parallelism = 0);

} // namespace zsum
