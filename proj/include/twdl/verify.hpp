#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace twdl {

/// One checked instance. Values are exact strings (rationals as "p/q").
/// status is "pass", "fail", or "skip" (the budget ran out first). The
/// instance descriptor plus the report seed regenerate the exact input.
struct VerifyRecord {
    std::string theorem;
    std::string instance;
    std::string expected;
    std::string observed;
    std::string status = "pass";
    std::string note;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    double budget_seconds = -1; // < 0: unlimited
    std::vector<VerifyRecord> records;
    double runtime_seconds = 0;

    long long pass_count() const;
    long long fail_count() const;
    long long skip_count() const;
    bool all_passed() const { return fail_count() == 0 && skip_count() == 0; }
};

/// The ten checks behind the acceptance gate: a stable id (the record
/// theorem field) and the suite that owns it.
struct CriterionInfo {
    int number = 0;
    const char* id = "";
    const char* suite = "";
};

const std::vector<CriterionInfo>& criteria();

/// Runs one criterion (1..10) to completion (no budget) and returns its
/// records sorted by instance.
std::vector<VerifyRecord> run_criterion(int number, std::uint64_t seed);

/// Suite names: tset, kset, clique-degrees, bounded-treewidth, dtset, trees,
/// outerplanar, interval, all. Instances fan out over a worker pool sized by
/// TWDL_WORKERS (default: hardware concurrency); per-instance seeds are
/// derived from the master seed, and records are sorted by
/// (theorem, instance), so the report does not depend on scheduling.
/// budget_seconds >= 0 marks instances that miss the deadline "skip".
/// Throws std::invalid_argument for unknown suite names.
VerifyReport run_suite(const std::string& suite, std::uint64_t seed,
                       double budget_seconds = -1);

/// JSON form of the report. runtime_seconds is the only field two identical
/// runs can disagree on; include_runtime=false drops it.
std::string report_to_json(const VerifyReport& report, bool include_runtime = true);

} // namespace twdl
