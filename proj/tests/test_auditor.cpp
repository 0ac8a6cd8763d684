#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "oracles.hpp"
#include "zsum/auditor.hpp"
#include "zsum/errors.hpp"
#include "zsum/json_io.hpp"

using namespace zsum;

namespace {

// independent recount of the threshold statistics by direct enumeration
struct ThresholdRecount {
    long long filtered = 0, free_total = 0, sharp_min = 0, sharp_e1 = 0;
};

ThresholdRecount recount_threshold(int n) {
    ThresholdRecount r;
    int h = threshold_values(n).h;
    long long edges = choose2(n);
    for (uint64_t bits = 0; bits < (1ull << edges); ++bits) {
        auto w = SignedWeighting::from_bits(n, bits);
        long long e1 = std::popcount(bits);
        long long mn = std::min(e1, edges - e1);
        bool free = oracles::zero_sum_k4_free(w);
        if (mn >= h) ++r.filtered;
        if (!free) continue;
        ++r.free_total;
        if (mn == h - 1) ++r.sharp_min;
        if (e1 == h - 1) ++r.sharp_e1;
    }
    return r;
}

std::string report_bytes(const AuditReport& r) { return report_to_json(r).dump(); }

} // namespace

TEST_CASE("threshold audit at n=5") {
    auto report = audit_threshold_k4(5);
    CHECK(report.total_scanned == 1024);
    CHECK(report.violation_count == 0);
    CHECK(report.violations.empty());
    CHECK(report.statistics.at("filter_equivalence_mismatches") == 0);
    CHECK(report.statistics.at("one_side_triangle_free_violations") == 0);
    CHECK(report.statistics.at("filtered") == 252); // min >= 5 forces e(1) = 5
    CHECK(report.statistics.at("sharpness_witnesses_e1") == 15);
    CHECK(report.statistics.at("sharpness_witnesses_min") == 30);
    CHECK(report.statistics.at("zero_sum_k4_free_total") == 202);

    auto recount = recount_threshold(5);
    CHECK(report.statistics.at("filtered") == recount.filtered);
    CHECK(report.statistics.at("zero_sum_k4_free_total") == recount.free_total);
    CHECK(report.statistics.at("sharpness_witnesses_min") == recount.sharp_min);
    CHECK(report.statistics.at("sharpness_witnesses_e1") == recount.sharp_e1);

    // the e1-side count equals the number of labeled extremal supports
    CHECK(report.statistics.at("sharpness_witnesses_e1") ==
          static_cast<long long>(oracles::labeled_extremal_supports(5).size()));
}

TEST_CASE("threshold audit at n=6 matches an independent recount") {
    auto report = audit_threshold_k4(6);
    CHECK(report.violation_count == 0);
    auto recount = recount_threshold(6);
    CHECK(report.statistics.at("filtered") == recount.filtered);
    CHECK(report.statistics.at("zero_sum_k4_free_total") == recount.free_total);
    CHECK(report.statistics.at("sharpness_witnesses_min") == recount.sharp_min);
    CHECK(report.statistics.at("sharpness_witnesses_e1") == recount.sharp_e1);
    CHECK(report.statistics.at("sharpness_witnesses_e1") ==
          static_cast<long long>(oracles::labeled_extremal_supports(6).size()));
}

TEST_CASE("weakened threshold is violated by the extremal weightings") {
    ThresholdOptions opt;
    opt.threshold_override = threshold_values(5).h - 1;
    auto report = audit_threshold_k4(5, opt);
    CHECK(report.violation_count == 30);
    REQUIRE(report.violations.size() == 30);
    uint64_t prev = 0;
    bool first = true;
    for (const auto& w : report.violations) {
        CHECK(is_zero_sum_k4_free(w));
        long long e1 = w.count_weight(1);
        CHECK(std::min(e1, choose2(5) - e1) >= 4);
        uint64_t bits = w.to_bits();
        if (!first) CHECK(bits > prev); // deterministic ascending order
        prev = bits;
        first = false;
    }
}

TEST_CASE("threshold reports are identical across worker counts") {
    ThresholdOptions one;
    one.parallelism = 1;
    ThresholdOptions many;
    many.parallelism = 3;
    CHECK(report_bytes(audit_threshold_k4(6, one)) == report_bytes(audit_threshold_k4(6, many)));
}

TEST_CASE("complement-symmetry halving changes nothing") {
    for (int n : {5, 6}) {
        ThresholdOptions plain;
        ThresholdOptions halved;
        halved.complement_symmetry = true;
        CHECK(report_bytes(audit_threshold_k4(n, plain)) ==
              report_bytes(audit_threshold_k4(n, halved)));
    }
    // also under the weakened threshold, where violations are nonempty
    ThresholdOptions a;
    a.threshold_override = 4;
    ThresholdOptions b = a;
    b.complement_symmetry = true;
    CHECK(report_bytes(audit_threshold_k4(5, a)) == report_bytes(audit_threshold_k4(5, b)));
}

TEST_CASE("scale gate") {
    CHECK_THROWS_AS(audit_threshold_k4(4), ScaleRefused);
    CHECK_THROWS_AS(audit_threshold_k4(9), ScaleRefused);
    CHECK_THROWS_AS(audit_extremal_k4(4), ScaleRefused);
    CHECK_THROWS_AS(scan_component_family(9), ScaleRefused);
}

TEST_CASE("extremal audit at n=5 and n=6") {
    auto r5 = audit_extremal_k4(5);
    CHECK(r5.total_scanned == 210); // C(10,4)
    CHECK(r5.violation_count == 0);
    CHECK(r5.statistics.at("zero_sum_k4_free_supports") == 15);
    CHECK(r5.statistics.at("profile_match_supports") == 15);

    auto r6 = audit_extremal_k4(6);
    CHECK(r6.violation_count == 0);
    CHECK(r6.statistics.at("zero_sum_k4_free_supports") == 45);
    CHECK(r6.statistics.at("profile_match_supports") ==
          static_cast<long long>(oracles::labeled_extremal_supports(6).size()));

    CHECK(report_bytes(audit_extremal_k4(6, 1)) == report_bytes(audit_extremal_k4(6, 4)));
}

TEST_CASE("balanced audit of the clique-negative host") {
    auto report = audit_balanced_construction(Construction::CliqueNeg, 21, 8);
    CHECK(report.violation_count == 0);
    CHECK_FALSE(report.budget_exceeded);
    CHECK(report.statistics.at("balanced") == 1);
    CHECK(report.statistics.at("formula_scan_mismatches") == 0);
    CHECK(report.statistics.at("guarantee_violations") == 0);
    for (int m = 2; m <= 8; ++m) {
        char key[24];
        std::snprintf(key, sizeof key, "m%02d_zero_sum", m);
        CHECK(report.statistics.at(key) == (m == 4 ? 1 : 0));
        std::snprintf(key, sizeof key, "m%02d_formula_only", m);
        CHECK(report.statistics.at(key) == 0);
    }
}

TEST_CASE("balanced audit of the bipartition host") {
    auto report = audit_balanced_construction(Construction::Bipartition, 9, 8);
    CHECK(report.violation_count == 0);
    for (int m = 2; m <= 8; ++m) {
        char key[24];
        std::snprintf(key, sizeof key, "m%02d_zero_sum", m);
        CHECK(report.statistics.at(key) == (m == 4 ? 1 : 0)); // squares admit zero sums
    }
}

TEST_CASE("balanced audit of the degenerate n=4 host") {
    auto report = audit_balanced_construction(Construction::CliqueNeg, 4, 4);
    CHECK(report.violation_count == 0);
    CHECK(report.statistics.at("m04_zero_sum") == 1); // the host itself is balanced
    CHECK(report.statistics.at("m02_zero_sum") == 0);
    CHECK(report.statistics.at("m03_zero_sum") == 0);
}

TEST_CASE("balanced audit rejects inadmissible orders") {
    CHECK_THROWS_AS(audit_balanced_construction(Construction::CliqueNeg, 5, 4), NotBalanced);
    CHECK_THROWS_AS(audit_balanced_construction(Construction::Bipartition, 8, 4), NotBalanced);
    CHECK_THROWS_AS(audit_balanced_construction(Construction::WideRange, 7, 4), ArgumentOutOfRange);
    CHECK_THROWS_AS(audit_balanced_construction(Construction::CliqueNeg, 21, 22), ArgumentOutOfRange);
}

TEST_CASE("balanced audit marks over-budget orders formula-only") {
    BalancedOptions opt;
    opt.subset_budget = 1000;
    auto report = audit_balanced_construction(Construction::CliqueNeg, 21, 8, opt);
    CHECK(report.budget_exceeded);
    CHECK(report.statistics.at("m02_formula_only") == 0); // C(21,2) = 210
    CHECK(report.statistics.at("m03_formula_only") == 1); // C(21,3) = 1330
    CHECK(report.statistics.at("m08_formula_only") == 1);
    CHECK(report.violation_count == 0);
}

TEST_CASE("s1s2 audit") {
    auto r25 = audit_s1s2(25);
    CHECK(r25.violation_count == 0);
    CHECK(r25.total_scanned == 3); // 1, 4, 21
    REQUIRE(r25.intersection.size() == 2);
    CHECK(r25.intersection[0] == 1);
    CHECK(r25.intersection[1] == 4);

    auto r3 = audit_s1s2(3);
    CHECK(r3.violation_count == 0);
    REQUIRE(r3.intersection.size() == 1);
    CHECK(r3.intersection[0] == 1);

    auto r4 = audit_s1s2(4);
    CHECK(r4.violation_count == 0);
    CHECK(r4.intersection.size() == 2);
}

TEST_CASE("component family scan at small n") {
    for (int n = 1; n <= 6; ++n) {
        auto report = scan_component_family(n);
        CHECK(report.graphs_scanned == (1LL << choose2(n)));
        CHECK(report.profile_violations == 0);
        CHECK(report.bound_violations == 0);
        CHECK(report.extremal_iff_violations == 0);
        CHECK(report.ok());
    }
    CHECK(scan_component_family(4).extremal_members == 3); // labeled 4-cycles
    CHECK(scan_component_family(5).extremal_members == 15);
    CHECK(scan_component_family(6).extremal_members == 45);
    CHECK(scan_component_family(6).extremal_members ==
          static_cast<long long>(oracles::labeled_extremal_supports(6).size()));
}

TEST_CASE("report JSON shape") {
    auto j = report_to_json(audit_threshold_k4(5));
    CHECK(j["statement"] == "THRESHOLD_K4");
    CHECK(j["n"] == 5);
    CHECK(j["violations"].is_array());
    CHECK(j["violations"].empty());
    CHECK(j["statistics"].is_object());

    auto js = report_to_json(audit_s1s2(100));
    CHECK(js["statement"] == "S1S2_SCAN");
    CHECK(js["limit"] == "100");
    CHECK(js["intersection"] == nlohmann::json::array({"1", "4"}));
}
