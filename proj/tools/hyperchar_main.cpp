#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperchar/char_sums.hpp"
#include "hyperchar/characters.hpp"
#include "hyperchar/eisenstein.hpp"
#include "hyperchar/finite_field.hpp"
#include "hyperchar/greene_f.hpp"
#include "hyperchar/identities.hpp"
#include "hyperchar/mccarthy_g.hpp"
#include "hyperchar/padic.hpp"
#include "hyperchar/report.hpp"
#include "hyperchar/varieties.hpp"

namespace hc = hyperchar;

namespace {

struct OutputOpts {
    std::string format = "text";
    std::string out;
};

void add_output_flags(CLI::App* cmd, OutputOpts& o) {
    cmd->add_option("--format", o.format, "output format (text, json, csv)")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", o.out, "write the report to this file instead of stdout");
}

int write_body(const std::string& body, const OutputOpts& o) {
    if (o.out.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output file: " << o.out << "\n";
        return 2;
    }
    f << body;
    return 0;
}

std::string render_reports(const std::vector<hc::Report>& rs, const std::string& format) {
    if (format == "json") return hc::reports_json(rs) + "\n";
    if (format == "csv") return hc::reports_csv(rs);
    std::string s;
    for (const auto& r : rs) s += hc::report_text(r) + "\n";
    hc::Tally t;
    t.add(rs);
    s += "pass " + std::to_string(t.pass) + "  fail " + std::to_string(t.fail) + "  skip " +
         std::to_string(t.skip) + "\n";
    return s;
}

// 0 = all good, 1 = any fail, 2 = nothing ran (every tuple skipped)
int reports_exit(const std::vector<hc::Report>& rs) {
    hc::Tally t;
    t.add(rs);
    if (t.fail > 0) return 1;
    if (t.total() > 0 && t.pass == 0) {
        std::set<std::string> reasons;
        for (const auto& r : rs)
            if (r.skipped() && !r.skip_reason.empty()) reasons.insert(r.skip_reason);
        std::string msg = "all tuples skipped";
        for (const auto& why : reasons) msg += "; " + why;
        std::cerr << msg << "\n";
        return 2;
    }
    return 0;
}

std::pair<long, long> split_prime_power(long q) {
    if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    long p = q;
    for (long f = 2; f * f <= q; ++f)
        if (q % f == 0) {
            p = f;
            break;
        }
    long e = 0, m = q;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    return {p, e};
}

std::vector<hc::Rat> parse_rat_list(const std::string& text) {
    std::vector<hc::Rat> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        hc::Rat r(item);
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

void apply_arg_policy(const std::string& s, hc::SweepGrid& g) {
    if (s == "all") {
        g.policy = hc::SweepGrid::ArgPolicy::all;
        return;
    }
    if (s.rfind("sample:", 0) == 0) {
        g.policy = hc::SweepGrid::ArgPolicy::sample;
        g.sample_count = std::stol(s.substr(7));
        if (g.sample_count <= 0) throw std::invalid_argument("sample count must be positive");
        return;
    }
    g.policy = hc::SweepGrid::ArgPolicy::fixed;
    g.fixed_args.clear();
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ','))
        if (!item.empty()) g.fixed_args.push_back(std::stol(item));
    if (g.fixed_args.empty()) throw std::invalid_argument("empty argument list");
}

// ----------------------------------------------------------- lemma suites

void run_orthogonality(std::vector<hc::Report>& rs, const std::vector<long>& qs) {
    for (long q : qs) {
        auto [p, e] = split_prime_power(q);
        rs.push_back(hc::orthogonality_check(hc::FieldCtx::make(p, e)));
    }
}

void run_gauss_suite(std::vector<hc::Report>& rs, const std::vector<long>& qs) {
    for (long q : qs) {
        auto [p, e] = split_prime_power(q);
        auto ctx = hc::FieldCtx::make(p, e);
        rs.push_back(hc::quadratic_sum_check(ctx));
        for (long m = 0; m < q - 1; ++m) rs.push_back(hc::gauss_inverse_check(ctx, m));
        for (long a = 1; a < q; ++a) rs.push_back(hc::theta_expansion_check(ctx, a));
        for (long m = 0; m < q - 1; ++m)
            for (long n = 0; n < q - 1; ++n)
                rs.push_back(hc::jacobi_decomposition_check(ctx, m, n));
        for (long m = 0; m < q - 1; ++m)
            for (long n = 0; n < q - 1; ++n)
                rs.push_back(hc::binomial_gauss_check(ctx, m, n));
        for (long l = 0; l < q - 1; ++l) rs.push_back(hc::gauss_bridge_report(ctx, l));
    }
}

void run_davenport_hasse(std::vector<hc::Report>& rs, const std::vector<long>& qs) {
    for (long q : qs) {
        auto [p, e] = split_prime_power(q);
        auto ctx = hc::FieldCtx::make(p, e);
        for (long m = 1; m <= q - 1; ++m) {
            if ((q - 1) % m != 0) continue;
            for (long psi = 0; psi < q - 1; ++psi)
                rs.push_back(hc::davenport_hasse_check(ctx, m, psi));
        }
    }
}

void run_gamma_suite(std::vector<hc::Report>& rs, const std::vector<long>& ps, long k) {
    for (long p : ps) {
        for (long l = 1; l <= p - 2; ++l) rs.push_back(hc::gamma_reflection_check(p, k, l));
        for (long t : {2L, 3L, 4L, 6L}) {
            if (t % p == 0) continue;
            for (long l = 0; l <= p - 2; ++l)
                rs.push_back(hc::gamma_multiplication_check(p, k, l, t));
        }
    }
}

void run_floor_suite(std::vector<hc::Report>& rs, long pmax, long dmax) {
    for (long p = 3; p <= pmax; ++p) {
        bool prime = true;
        for (long f = 2; f * f <= p; ++f)
            if (p % f == 0) prime = false;
        if (!prime) continue;
        for (long d = 2; d <= dmax; ++d) {
            if (d % p == 0 || (d - 1) % p == 0) continue;
            rs.push_back(hc::floor_identity_check(p, d));
        }
    }
}

void run_gamma_bridge(std::vector<hc::Report>& rs, const std::vector<long>& ps, long k) {
    for (long p : ps)
        for (long l = 0; l <= p - 2; ++l) rs.push_back(hc::gamma_bridge_check(p, k, l));
}

void run_gross_koblitz(std::vector<hc::Report>& rs, const std::vector<long>& ps, long K) {
    for (long p : ps)
        for (long a = 0; a <= p - 2; ++a) rs.push_back(hc::gross_koblitz_check(p, K, a));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checker for finite-field and p-adic hypergeometric identities"};
    app.require_subcommand(1);

    // verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run identity checkers over a parameter grid");
    std::vector<std::string> id_names;
    std::vector<long> verify_q;
    hc::SweepGrid grid;
    grid.ds = {3, 4, 5, 6};
    std::string arg_policy = "all";
    OutputOpts verify_out;
    verify->add_option("--id", id_names, "identity tags (or 'all')")
        ->required()
        ->delimiter(',');
    verify->add_option("--p,--q", verify_q, "primes or prime powers")
        ->required()
        ->delimiter(',');
    verify->add_option("--d", grid.ds, "degrees")->delimiter(',');
    verify->add_option("--x,--lambda", arg_policy,
                       "argument policy: all, sample:<n>, or a comma list of values");
    verify->add_option("--k", grid.k, "p-adic working precision");
    verify->add_option("--seed", grid.seed, "seed for sampled sweeps");
    verify->add_option("--threads", grid.threads, "worker threads (0 = auto)");
    verify->add_option("--triples", grid.triples, "random (a,b,c) triples per prime");
    verify->add_option("--tuples", grid.tuples, "random character tuples per field");
    add_output_flags(verify, verify_out);

    // gfun -----------------------------------------------------------------
    auto* gfun = app.add_subcommand("gfun", "evaluate one nGn value");
    long gfun_p = 0, gfun_t = 0, gfun_k = 5;
    std::string gfun_a, gfun_b;
    gfun->add_option("--p", gfun_p, "odd prime")->required();
    gfun->add_option("--a", gfun_a, "upper parameters, e.g. 1/3,2/3")->required();
    gfun->add_option("--b", gfun_b, "lower parameters, e.g. 0,1/2")->required();
    gfun->add_option("--t", gfun_t, "argument mod p")->required();
    gfun->add_option("--k", gfun_k, "p-adic working precision");

    // greene ---------------------------------------------------------------
    auto* greene = app.add_subcommand("greene", "evaluate one (n+1)Fn value");
    long greene_q = 0, greene_x = 0;
    std::vector<long> greene_A, greene_B;
    greene->add_option("--q", greene_q, "prime power")->required();
    greene->add_option("--A", greene_A, "upper character exponents")
        ->required()
        ->delimiter(',');
    greene->add_option("--B", greene_B, "lower character exponents")->delimiter(',');
    greene->add_option("--x", greene_x, "field element index");

    // count ----------------------------------------------------------------
    auto* count = app.add_subcommand("count", "point counts for one curve instance");
    long count_q = 0, count_d = 3, count_lambda = 0;
    OutputOpts count_out;
    count->add_option("--p,--q", count_q, "prime power")->required();
    count->add_option("--d", count_d, "degree");
    count->add_option("--lambda", count_lambda, "deformation parameter (field element index)");
    add_output_flags(count, count_out);

    // selftest ---------------------------------------------------------------
    auto* selftest = app.add_subcommand("selftest", "lemma-level verification suites");
    std::vector<std::string> suites{"all"};
    OutputOpts self_out;
    selftest->add_option("--suite", suites, "suites to run")
        ->delimiter(',')
        ->check(CLI::IsMember({"all", "orthogonality", "gauss", "davenport-hasse", "gamma",
                               "floor", "gamma-bridge", "gross-koblitz"}));
    add_output_flags(selftest, self_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            std::vector<hc::IdentityId> ids;
            for (const auto& name : id_names) {
                if (name == "all" || name == "ALL") {
                    ids = hc::all_identities();
                    break;
                }
                ids.push_back(hc::identity_from_name(name));
            }
            grid.qs = verify_q;
            apply_arg_policy(arg_policy, grid);
            std::vector<hc::Report> rs = hc::sweep(ids, grid);
            int wr = write_body(render_reports(rs, verify_out.format), verify_out);
            if (wr != 0) return wr;
            return reports_exit(rs);
        }
        if (*gfun) {
            hc::GParams gp;
            gp.p = gfun_p;
            gp.k = gfun_k;
            gp.a = parse_rat_list(gfun_a);
            gp.b = parse_rat_list(gfun_b);
            gp.t = hc::mod_norm(gfun_t, gfun_p);
            std::cout << hc::g_function(gp).to_string() << "\n";
            return 0;
        }
        if (*greene) {
            auto [p, e] = split_prime_power(greene_q);
            hc::GreeneParams gp;
            gp.ctx = hc::FieldCtx::make(p, e);
            gp.A = greene_A;
            gp.B = greene_B;
            gp.x = greene_x;
            std::cout << hc::greene_F(gp).to_string() << "\n";
            return 0;
        }
        if (*count) {
            auto [p, e] = split_prime_power(count_q);
            hc::CurveInstance inst{hc::FieldCtx::make(p, e), count_d, count_lambda};
            hc::CountResult res = hc::count_points(inst);
            std::string body;
            if (count_out.format == "json") {
                nlohmann::ordered_json j;
                j["q"] = count_q;
                j["d"] = count_d;
                j["lambda"] = count_lambda;
                j["affine"] = res.affine;
                j["projective"] = res.projective;
                j["roots"] = res.roots;
                body = j.dump(2) + "\n";
            } else {
                body = "affine " + std::to_string(res.affine) + "\nprojective " +
                       std::to_string(res.projective) + "\nroots " +
                       std::to_string(res.roots) + "\n";
            }
            return write_body(body, count_out);
        }
        if (*selftest) {
            std::set<std::string> want(suites.begin(), suites.end());
            bool all = want.count("all") > 0;
            std::vector<hc::Report> rs;
            if (all || want.count("orthogonality")) run_orthogonality(rs, {7, 9, 25});
            if (all || want.count("gauss")) run_gauss_suite(rs, {7, 13});
            if (all || want.count("davenport-hasse")) run_davenport_hasse(rs, {7, 13});
            if (all || want.count("gamma")) run_gamma_suite(rs, {5, 7, 11}, 3);
            if (all || want.count("floor")) run_floor_suite(rs, 47, 10);
            if (all || want.count("gamma-bridge")) run_gamma_bridge(rs, {7, 11}, 4);
            if (all || want.count("gross-koblitz")) run_gross_koblitz(rs, {5, 7}, 20);
            int wr = write_body(render_reports(rs, self_out.format), self_out);
            if (wr != 0) return wr;
            return reports_exit(rs);
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
