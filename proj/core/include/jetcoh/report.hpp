#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace jetcoh {

enum class Status { pass, fail, nontrivial, inconclusive };

std::string_view status_name(Status s);  // "PASS", "FAIL", "NONTRIVIAL", "INCONCLUSIVE"

struct CheckRecord {
    std::string check_id;
    std::string description;
    std::string lambda = "symbolic";  // a rational or "symbolic"
    Status status = Status::pass;
    std::string residual;   // empty unless there is something left over
    std::string paper_ref;  // descriptive anchor or "derived"
};

/// Throws InvalidArgument when a FAIL record has no residual or a record has no reference.
void validate(const CheckRecord& r);

void sort_records(std::vector<CheckRecord>& records);
bool any_failure(const std::vector<CheckRecord>& records);

/// JSON array of objects with keys in declaration order; "[]" when empty.
std::string to_json(const std::vector<CheckRecord>& records);
std::string to_text(const std::vector<CheckRecord>& records);

enum class ReportFormat { json, text };

/// Writes the report; throws Error if the path cannot be written.
void emit_report(const std::vector<CheckRecord>& records, ReportFormat format, const std::string& path);

}  // namespace jetcoh
