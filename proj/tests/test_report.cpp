#include <string>

#include "doctest.h"
#include "hyperchar/report.hpp"

namespace hc = hyperchar;

namespace {

hc::Report sample_pass() {
    hc::Report r;
    r.id = "MT1";
    r.set_param("p", "7");
    r.set_param("d", "3");
    r.set_param("x", "2");
    r.set_param("k", "5");
    r.lhs = "7^0 * 16799 mod 7^5";
    r.rhs = "7^0 * 6 mod 7^5";
    r.has_diff_valuation = true;
    r.diff_valuation = 4;
    r.ms = 1.5;
    return r;
}

}  // namespace

TEST_CASE("status names and tallies") {
    CHECK(hc::status_name(hc::Report::Status::pass) == "pass");
    CHECK(hc::status_name(hc::Report::Status::fail) == "fail");
    CHECK(hc::status_name(hc::Report::Status::skip) == "skip");

    hc::Report p = sample_pass();
    hc::Report f = sample_pass();
    f.status = hc::Report::Status::fail;
    hc::Report s = sample_pass();
    s.status = hc::Report::Status::skip;
    s.skip_reason = "x = 0";

    hc::Tally t;
    t.add({p, f, s, p});
    CHECK(t.pass == 2);
    CHECK(t.fail == 1);
    CHECK(t.skip == 1);
    CHECK(t.total() == 4);
}

TEST_CASE("single-line rendering carries the verdict and the key parameters") {
    auto r = sample_pass();
    auto line = hc::report_text(r);
    CHECK(line.find("MT1") != std::string::npos);
    CHECK(line.find("pass") != std::string::npos);
    CHECK(line.find("p=7") != std::string::npos);
    CHECK(line.find("d=3") != std::string::npos);
    CHECK(line.find("diff_valuation=4") != std::string::npos);
    CHECK(line.find('\n') == std::string::npos);

    r.status = hc::Report::Status::skip;
    r.skip_reason = "lambda = 0";
    CHECK(hc::report_text(r).find("lambda = 0") != std::string::npos);
}

TEST_CASE("JSON round trip") {
    auto r = sample_pass();
    auto back = hc::report_from_json(hc::report_json(r));
    CHECK(back.id == r.id);
    CHECK(back.params == r.params);
    CHECK(back.status == r.status);
    CHECK(back.lhs == r.lhs);
    CHECK(back.rhs == r.rhs);
    CHECK(back.has_diff_valuation);
    CHECK(back.diff_valuation == 4);
    CHECK(back.ms == doctest::Approx(1.5));

    hc::Report s;
    s.id = "POINT_F";
    s.set_param("q", "25");
    s.status = hc::Report::Status::skip;
    s.skip_reason = "lambda = 0";
    auto sback = hc::report_from_json(hc::report_json(s));
    CHECK(sback.skipped());
    CHECK(sback.skip_reason == "lambda = 0");

    hc::Report e;
    e.id = "GREENE_SUM";
    e.set_param("q", "9");
    e.has_exact_zero = true;
    e.exact_zero = true;
    auto eback = hc::report_from_json(hc::report_json(e));
    CHECK(eback.has_exact_zero);
    CHECK(eback.exact_zero);
}

TEST_CASE("batch renderings") {
    auto r = sample_pass();
    hc::Report s = sample_pass();
    s.status = hc::Report::Status::skip;
    s.skip_reason = "x = 0";

    auto js = hc::reports_json({r, s});
    CHECK(js.find("\"MT1\"") != std::string::npos);
    CHECK(js.find("x = 0") != std::string::npos);

    auto csv = hc::reports_csv({r, s});
    size_t lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == 3);  // header plus one row per report
    CHECK(csv.rfind("id,p,q,d,lambda,x,k,", 0) == 0);
}
