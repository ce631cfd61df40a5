// Batch driver: construct, verify and search the certificates, emit JSON
// reports and CSV grids.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "soscert/knapsack_cert.hpp"
#include "soscert/report.hpp"
#include "soscert/setcover_cert.hpp"
#include "soscert/sqf_cert.hpp"

using namespace soscert;

namespace {

struct CommonOpts {
    unsigned precision_bits = 128;
    std::string report_path;
    std::string csv_path;
    std::string grid_step = "1/4";
};

long now_ms(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

void emit(const CertificateReport& rep, const CommonOpts& opts) {
    std::cout << rep.to_json().dump(2) << "\n";
    if (!opts.report_path.empty()) write_report_file(rep, opts.report_path);
}

void dump_grid_csv(const CommonOpts& opts, long n, const std::vector<std::string>& header,
                   const std::vector<const UniPoly*>& polys) {
    if (opts.csv_path.empty()) return;
    Rational step = rational_from_string(opts.grid_step);
    if (step <= 0) throw std::runtime_error("grid step must be positive");
    std::vector<std::vector<Rational>> rows;
    for (Rational x(0); x <= Rational(n); x += step) {
        std::vector<Rational> row{x};
        for (const UniPoly* p : polys) row.push_back((*p)(x));
        rows.push_back(std::move(row));
    }
    write_csv_file(opts.csv_path, header, rows);
}

CertificateReport run_sqf(long n, long k, const std::string& mode, const CommonOpts& opts, long e_g, long d_H,
                          long e_p, long m_s2) {
    auto t0 = std::chrono::steady_clock::now();
    SqfCertificate cert;
    if (mode == "theory") {
        cert = assemble_sqf_certificate(n, k, theory_params(n, k));
    } else if (e_g > 0 && d_H > 0 && e_p > 0 && m_s2 > 0) {
        SqfParams par;
        par.mode = SqfMode::Search;
        par.e_g = e_g;
        par.d_H = d_H;
        par.e_p = e_p;
        par.m_s2 = m_s2;
        UniPoly H = build_H(n, k, d_H);
        par.C = default_search_C(H, H(Rational(k)), H(Rational(k - 1)));
        cert = assemble_sqf_certificate(n, k, par);
    } else {
        cert = search_sqf_certificate(n, k);
    }
    CertificateReport rep;
    rep.pipeline = "sqf";
    rep.n = n;
    rep.k = k;
    rep.mode = mode;
    rep.params = {{"e_g", cert.params.e_g},
                  {"d_H", cert.params.d_H},
                  {"e_p", cert.params.e_p},
                  {"m_s2", cert.params.m_s2},
                  {"C", rational_to_string(cert.params.C)}};
    for (const auto& c : cert.condition_reports) append_condition(rep, c);
    rep.degrees = {{"s", cert.s.is_zero() ? 0 : cert.s.degree()},
                   {"s1", cert.s1.degree()},
                   {"total", cert.total_degree},
                   {"certificate", cert.certificate_degree},
                   {"theory_symbolic", cert.theory_degree.get_str()}};
    rep.timings_ms = {{"total", now_ms(t0)}};
    if (!cert.s.is_zero()) {
        UniPoly q = sqf_target(k);
        dump_grid_csv(opts, n, {"x", "q_k", "s"}, {&q, &cert.s});
    }
    return rep;
}

CertificateReport run_knapsack(long n, const Rational& P, const CommonOpts& opts) {
    auto t0 = std::chrono::steady_clock::now();
    MkCertificate cert = assemble_mk_certificate(n, P, opts.precision_bits);
    CertificateReport rep;
    rep.pipeline = "knapsack";
    rep.n = n;
    rep.P = rational_to_string(P);
    rep.mode = "exact";
    rep.params = {{"d", cert.params.d},
                  {"alpha", rational_to_string(cert.params.alpha)},
                  {"m", cert.params.m},
                  {"r0_hat", rational_to_string(cert.params.r0_hat)}};
    for (const auto& c : cert.condition_reports) append_condition(rep, c);
    rep.degrees = {{"stilde1", cert.stilde1.degree()},
                   {"stilde0", cert.stilde0.degree()},
                   {"total", cert.total_degree},
                   {"certificate", cert.certificate_degree}};
    rep.timings_ms = {{"total", now_ms(t0)}};
    dump_grid_csv(opts, n, {"x", "stilde1", "stilde0"}, {&cert.stilde1, &cert.stilde0});
    return rep;
}

CertificateReport run_sc_main(long n, bool corollary, const CommonOpts& opts) {
    auto t0 = std::chrono::steady_clock::now();
    ScMainCertificate cert = assemble_sc_main(n, corollary, opts.precision_bits);
    CertificateReport rep;
    rep.pipeline = "setcover-main";
    rep.n = n;
    rep.mode = corollary ? "corollary-params" : "lemma-params";
    rep.params = {{"d", cert.params.d},
                  {"alpha", rational_to_string(cert.params.alpha)},
                  {"m", cert.params.m}};
    for (const auto& c : cert.condition_reports) append_condition(rep, c);
    rep.degrees = {{"stilde", cert.stilde.degree()},
                   {"stilde0", cert.stilde0.degree()},
                   {"base_q2", cert.base_q2_degree},
                   {"total", cert.total_degree},
                   {"certificate", cert.certificate_degree}};
    rep.timings_ms = {{"total", now_ms(t0)}};
    dump_grid_csv(opts, n, {"x", "stilde0"}, {&cert.stilde0});
    return rep;
}

CertificateReport run_sc_appendix(long n, const CommonOpts& opts, bool decompose) {
    auto t0 = std::chrono::steady_clock::now();
    ScAppendixCertificate cert = assemble_sc_appendix(n, opts.precision_bits, decompose);
    CertificateReport rep;
    rep.pipeline = "setcover-appendix";
    rep.n = n;
    rep.mode = decompose ? "full" : "lemmas-only";
    rep.params = {{"d1", cert.parts.d1},
                  {"c1", rational_to_string(cert.parts.c1)},
                  {"c2", rational_to_string(cert.parts.c2)}};
    for (const auto& c : cert.condition_reports) append_condition(rep, c);
    rep.degrees = {{"f", cert.f.degree()}, {"total", cert.total_degree}, {"certificate", cert.certificate_degree}};
    rep.timings_ms = {{"total", now_ms(t0)}};
    dump_grid_csv(opts, n, {"x", "f"}, {&cert.f});
    return rep;
}

CertificateReport rerun_from_header(const CertificateReport& saved, const CommonOpts& opts) {
    if (saved.pipeline == "sqf") {
        long e_g = saved.params.value("e_g", 0L);
        long d_H = saved.params.value("d_H", 0L);
        long e_p = saved.params.value("e_p", 0L);
        long m_s2 = saved.params.value("m_s2", 0L);
        if (saved.mode == "theory") return run_sqf(saved.n, saved.k, "theory", opts, 0, 0, 0, 0);
        return run_sqf(saved.n, saved.k, saved.mode, opts, e_g, d_H, e_p, m_s2);
    }
    if (saved.pipeline == "knapsack") return run_knapsack(saved.n, rational_from_string(saved.P), opts);
    if (saved.pipeline == "setcover-main") return run_sc_main(saved.n, saved.mode == "corollary-params", opts);
    if (saved.pipeline == "setcover-appendix") return run_sc_appendix(saved.n, opts, saved.mode == "full");
    throw std::runtime_error("unknown pipeline in report: " + saved.pipeline);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact sum-of-squares certificates for symmetric hypercube optimization instances"};
    app.require_subcommand(1);

    CommonOpts opts;
    if (const char* env = std::getenv("SOSCERT_PRECISION_BITS")) {
        opts.precision_bits = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    }
    app.add_option("--precision-bits", opts.precision_bits, "working precision for enclosures and root isolation");
    app.add_option("--report", opts.report_path, "write the JSON certificate report here");
    app.add_option("--csv", opts.csv_path, "write a CSV value grid here");
    app.add_option("--grid-step", opts.grid_step, "CSV grid step as an exact rational");

    long n = 0, k = 0;
    std::string P_str = "2";
    std::string mode = "search";
    long e_g = 0, d_H = 0, e_p = 0, m_s2 = 0;
    bool corollary = false;
    bool skip_decompose = false;
    std::string pipeline;
    std::string report_in;

    auto* sqf = app.add_subcommand("sqf", "symmetric quadratic certificate");
    sqf->add_option("--n", n)->required();
    sqf->add_option("--k", k)->required();
    sqf->add_option("--mode", mode)->check(CLI::IsMember({"theory", "search"}));
    sqf->add_option("--e-g", e_g);
    sqf->add_option("--d-h", d_H);
    sqf->add_option("--e-p", e_p);
    sqf->add_option("--m-s2", m_s2);

    auto* mk = app.add_subcommand("knapsack", "min knapsack certificate");
    mk->add_option("--n", n)->required();
    mk->add_option("--P", P_str);

    auto* scm = app.add_subcommand("setcover-main", "set cover certificate via the q_2 base");
    scm->add_option("--n", n)->required();
    scm->add_flag("--corollary-params", corollary);

    auto* sca = app.add_subcommand("setcover-appendix", "set cover certificate via h1/h2");
    sca->add_option("--n", n)->required();
    sca->add_flag("--skip-decomposition", skip_decompose);

    auto* suite = app.add_subcommand("suite", "run a pipeline's full verification battery");
    suite->add_option("--pipeline", pipeline)
        ->required()
        ->check(CLI::IsMember({"sqf", "knapsack", "setcover-main", "setcover-appendix"}));
    suite->add_option("--n", n)->required();
    suite->add_option("--k", k);
    suite->add_option("--P", P_str);
    suite->add_option("--mode", mode)->check(CLI::IsMember({"theory", "search"}));
    suite->add_flag("--corollary-params", corollary);

    auto* verify = app.add_subcommand("verify", "replay a saved report and compare verdicts");
    verify->add_option("--report-file", report_in)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        CertificateReport rep;
        if (sqf->parsed()) {
            rep = run_sqf(n, k, mode, opts, e_g, d_H, e_p, m_s2);
        } else if (mk->parsed()) {
            rep = run_knapsack(n, rational_from_string(P_str), opts);
        } else if (scm->parsed()) {
            rep = run_sc_main(n, corollary, opts);
        } else if (sca->parsed()) {
            rep = run_sc_appendix(n, opts, !skip_decompose);
        } else if (suite->parsed()) {
            if (pipeline == "sqf") {
                rep = run_sqf(n, k == 0 ? 2 : k, mode, opts, 0, 0, 0, 0);
            } else if (pipeline == "knapsack") {
                rep = run_knapsack(n, rational_from_string(P_str), opts);
            } else if (pipeline == "setcover-main") {
                rep = run_sc_main(n, corollary, opts);
            } else {
                rep = run_sc_appendix(n, opts, true);
            }
        } else if (verify->parsed()) {
            CertificateReport saved = load_report_file(report_in);
            CertificateReport fresh = rerun_from_header(saved, opts);
            bool same = same_verdicts(saved, fresh);
            std::cout << (same ? "replay: verdicts identical\n" : "replay: VERDICTS DIFFER\n");
            emit(fresh, opts);
            return (same && fresh.all_pass()) ? 0 : 1;
        }
        emit(rep, opts);
        if (!rep.all_pass()) {
            for (const auto& c : rep.conditions) {
                if (c.verdict != "pass") {
                    std::cerr << "failed condition: " << c.name << "\n";
                    break;
                }
            }
            return 1;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
