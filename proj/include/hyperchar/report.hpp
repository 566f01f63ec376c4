#pragma once
#include <string>
#include <utility>
#include <vector>

namespace hyperchar {

// Outcome record for one identity check at one parameter tuple.
struct Report {
    enum class Status { pass, fail, skip };

    std::string id;
    // ordered key/value pairs; keys drawn from {p, q, d, lambda, x, k, ...}
    std::vector<std::pair<std::string, std::string>> params;
    Status status = Status::pass;
    std::string lhs;
    std::string rhs;
    bool has_diff_valuation = false;
    long diff_valuation = 0;
    bool has_exact_zero = false;
    bool exact_zero = false;
    std::string skip_reason;
    double ms = 0.0;

    void set_param(const std::string& key, const std::string& value) {
        params.emplace_back(key, value);
    }
    bool passed() const { return status == Status::pass; }
    bool failed() const { return status == Status::fail; }
    bool skipped() const { return status == Status::skip; }
};

std::string status_name(Report::Status s);

// single-line human rendering
std::string report_text(const Report& r);
// JSON object with fixed key order {id, params, status, lhs, rhs,
// diff_valuation|exact_zero, skip_reason?, ms}
std::string report_json(const Report& r);
std::string reports_json(const std::vector<Report>& rs);
// same rows flattened: id,p,q,d,lambda,x,k,status,lhs,rhs,diff_valuation,exact_zero,skip_reason,ms
std::string reports_csv(const std::vector<Report>& rs);
// inverse of report_json (round-trip checks)
Report report_from_json(const std::string& text);

// aggregate pass/fail/skip tallies
struct Tally {
    long pass = 0, fail = 0, skip = 0;
    void add(const Report& r);
    void add(const std::vector<Report>& rs);
    long total() const { return pass + fail + skip; }
};

}  // namespace hyperchar
