#pragma once

// Zero-sum clique detection, the forbidden-induced-subgraph view of
// zero-sum-K4 freeness, and closed-form weight oracles for the
// constructions.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zsum/graph.hpp"
#include "zsum/weighting.hpp"

namespace zsum {

enum class CertificateKind { ZeroSumWitness, NoneExists };

// Machine-checkable outcome of a zero-sum K_m search: either a vertex
// subset realizing weight 0, or an exhaustiveness statement.
struct Certificate {
    CertificateKind kind = CertificateKind::NoneExists;
    int m = 0;
    std::vector<int> witness; // sorted, size m when kind is ZeroSumWitness
    std::string context;
};

// Scans m-subsets in lexicographic order, returns the first zero-weight
// clique. For r=1 an odd C(m,2) rules out zero sums and the scan
// shortcuts to NoneExists.
Certificate find_zero_sum_clique(const SignedWeighting& w, int m);

// Direct 4-subset scan (works for any range).
bool zero_sum_k4_free_by_scan(const SignedWeighting& w);
// Structural path: induced forbidden-subgraph test on G_{-1}. r=1 only.
bool zero_sum_k4_free_by_structure(const SignedWeighting& w);
// Runs both paths and requires agreement. n < 4 is vacuously free.
bool is_zero_sum_k4_free(const SignedWeighting& w);

enum class ForbiddenPattern { K13, K3uK1, P3 };

struct ForbiddenWitness {
    ForbiddenPattern pattern;
    std::array<int, 4> vertices; // sorted
};

// First 4-subset (lexicographic) inducing exactly 3 edges, classified:
// K13 iff some induced degree is 3, K3uK1 iff some induced degree is 0,
// else P3. Empty when no such subset exists.
std::optional<ForbiddenWitness> induced_forbidden_scan(const SimpleGraph& g);

bool is_triangle_free(const SignedWeighting& w, int weight_class);

enum class Construction { CliqueNeg, Bipartition, WideRange };

// Weight of any K_m copy meeting A (resp. X) in exactly t vertices:
//   CliqueNeg   C(m,2) - 2*C(t,2)
//   Bipartition 2t(m-t) - C(m,2)
//   WideRange   -2*C(t,2) + C(m-t,2)
long long clique_weight_formula(Construction c, int n, int a, int m, int t);

// Precomputed edge-index masks, lexicographic subset order. Require
// C(n,2) <= 64.
std::vector<uint64_t> four_subset_edge_masks(int n);
std::vector<uint64_t> triangle_edge_masks(int n);

} // namespace zsum
