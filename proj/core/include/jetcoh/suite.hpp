#pragma once

#include "jetcoh/corrections.hpp"
#include "jetcoh/report.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jetcoh {

enum class Suite { all, theorem1, table3, global, covariant, witt, nontrivial };

std::optional<Suite> suite_from_name(std::string_view name);
std::string_view suite_name(Suite s);

struct SuiteOptions {
    int window = 6;
    JetLimits limits{};
};

/// Records sorted by check_id; every suite also carries the "conventions" record.
std::vector<CheckRecord> run_suite(Suite suite, const SuiteOptions& options = {});

/// Correction of 2 det(3,6) - 9 det(4,5) at weight 7, computed once per jet cap.
const CorrectionResult& derived_c7(const JetLimits& limits = {});

/// Fixed text describing the sign conventions and the normalizations in force.
std::string convention_ledger();

/// Expected rows of the determinant table: (p, q, summary, trivial-action cocycle).
struct TableRow {
    int p, q;
    std::string expected;
    bool expect_trivial;
};
const std::vector<TableRow>& determinant_table();

}  // namespace jetcoh
