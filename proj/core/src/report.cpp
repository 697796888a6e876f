#include "jetcoh/report.hpp"

#include "jetcoh/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace jetcoh {

std::string_view status_name(Status s) {
    switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::nontrivial: return "NONTRIVIAL";
    case Status::inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

void validate(const CheckRecord& r) {
    if (r.check_id.empty()) throw InvalidArgument("check record without id");
    if (r.status == Status::fail && r.residual.empty())
        throw InvalidArgument("FAIL record " + r.check_id + " carries no residual");
    if (r.paper_ref.empty()) throw InvalidArgument("record " + r.check_id + " carries no reference");
}

void sort_records(std::vector<CheckRecord>& records) {
    std::stable_sort(records.begin(), records.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.check_id < b.check_id; });
}

bool any_failure(const std::vector<CheckRecord>& records) {
    return std::any_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.status == Status::fail; });
}

std::string to_json(const std::vector<CheckRecord>& records) {
    if (records.empty()) return "[]";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        validate(r);
        nlohmann::ordered_json o;
        o["check_id"] = r.check_id;
        o["description"] = r.description;
        o["lambda"] = r.lambda;
        o["status"] = std::string(status_name(r.status));
        o["residual"] = r.residual;
        o["paper_ref"] = r.paper_ref;
        arr.push_back(std::move(o));
    }
    return arr.dump(2);
}

std::string to_text(const std::vector<CheckRecord>& records) {
    std::size_t w = 8;
    for (const auto& r : records) w = std::max(w, r.check_id.size());
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& r : records) {
        validate(r);
        os << r.check_id << std::string(w + 2 - r.check_id.size(), ' ');
        const std::string_view st = status_name(r.status);
        os << st << std::string(14 - st.size(), ' ') << "lam=" << r.lambda << "  " << r.description << "\n";
        if (!r.residual.empty() && r.status != Status::pass) os << std::string(w + 2, ' ') << "residual: " << r.residual << "\n";
        if (r.status == Status::fail) ++failed;
    }
    os << records.size() << " checks, " << failed << " failed\n";
    return os.str();
}

void emit_report(const std::vector<CheckRecord>& records, ReportFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write report to " + path);
    out << (format == ReportFormat::json ? to_json(records) + "\n" : to_text(records));
    if (!out) throw Error("failed writing report to " + path);
}

}  // namespace jetcoh
