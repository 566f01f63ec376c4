#include "hyperchar/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hyperchar {

using ordered_json = nlohmann::ordered_json;

std::string status_name(Report::Status s) {
    switch (s) {
        case Report::Status::pass: return "pass";
        case Report::Status::fail: return "fail";
        case Report::Status::skip: return "skip";
    }
    throw std::logic_error("unreachable status");
}

static Report::Status status_from_name(const std::string& s) {
    if (s == "pass") return Report::Status::pass;
    if (s == "fail") return Report::Status::fail;
    if (s == "skip") return Report::Status::skip;
    throw std::invalid_argument("unknown status: " + s);
}

std::string report_text(const Report& r) {
    std::ostringstream os;
    os << r.id << " [";
    bool first = true;
    for (const auto& kv : r.params) {
        if (!first) os << " ";
        first = false;
        os << kv.first << "=" << kv.second;
    }
    os << "] " << status_name(r.status);
    if (r.skipped()) {
        os << " (" << r.skip_reason << ")";
    } else {
        os << " lhs=" << r.lhs << " rhs=" << r.rhs;
        if (r.has_exact_zero) os << " exact_zero=" << (r.exact_zero ? "true" : "false");
        if (r.has_diff_valuation) os << " diff_valuation=" << r.diff_valuation;
    }
    return os.str();
}

static ordered_json to_ordered_json(const Report& r) {
    ordered_json j;
    j["id"] = r.id;
    ordered_json params;
    for (const auto& kv : r.params) params[kv.first] = kv.second;
    j["params"] = params;
    j["status"] = status_name(r.status);
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    if (r.has_diff_valuation) j["diff_valuation"] = r.diff_valuation;
    if (r.has_exact_zero) j["exact_zero"] = r.exact_zero;
    if (r.skipped()) j["skip_reason"] = r.skip_reason;
    j["ms"] = r.ms;
    return j;
}

static Report from_ordered_json(const ordered_json& j) {
    Report r;
    r.id = j.at("id").get<std::string>();
    for (const auto& item : j.at("params").items())
        r.params.emplace_back(item.key(), item.value().get<std::string>());
    r.status = status_from_name(j.at("status").get<std::string>());
    r.lhs = j.at("lhs").get<std::string>();
    r.rhs = j.at("rhs").get<std::string>();
    if (j.contains("diff_valuation")) {
        r.has_diff_valuation = true;
        r.diff_valuation = j.at("diff_valuation").get<long>();
    }
    if (j.contains("exact_zero")) {
        r.has_exact_zero = true;
        r.exact_zero = j.at("exact_zero").get<bool>();
    }
    if (j.contains("skip_reason")) r.skip_reason = j.at("skip_reason").get<std::string>();
    r.ms = j.at("ms").get<double>();
    return r;
}

std::string report_json(const Report& r) { return to_ordered_json(r).dump(); }

std::string reports_json(const std::vector<Report>& rs) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rs) arr.push_back(to_ordered_json(r));
    return arr.dump(2);
}

static std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string reports_csv(const std::vector<Report>& rs) {
    static const char* kKeys[] = {"p", "q", "d", "lambda", "x", "k"};
    std::ostringstream os;
    os << "id,p,q,d,lambda,x,k,status,lhs,rhs,diff_valuation,exact_zero,skip_reason,ms\n";
    for (const auto& r : rs) {
        os << csv_escape(r.id);
        for (const char* key : kKeys) {
            std::string v;
            for (const auto& kv : r.params)
                if (kv.first == key) v = kv.second;
            os << "," << csv_escape(v);
        }
        os << "," << status_name(r.status);
        os << "," << csv_escape(r.lhs) << "," << csv_escape(r.rhs);
        os << ",";
        if (r.has_diff_valuation) os << r.diff_valuation;
        os << ",";
        if (r.has_exact_zero) os << (r.exact_zero ? "true" : "false");
        os << "," << csv_escape(r.skip_reason);
        os << "," << r.ms << "\n";
    }
    return os.str();
}

Report report_from_json(const std::string& text) {
    return from_ordered_json(ordered_json::parse(text));
}

void Tally::add(const Report& r) {
    switch (r.status) {
        case Report::Status::pass: ++pass; break;
        case Report::Status::fail: ++fail; break;
        case Report::Status::skip: ++skip; break;
    }
}

void Tally::add(const std::vector<Report>& rs) {
    for (const auto& r : rs) add(r);
}

}  // namespace hyperchar
