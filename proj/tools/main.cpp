// Copyright 2026 The twozero Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.  Exit codes: 0 success, 1 verification failure,
// 2 invalid parameters or usage, 3 resource cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "twozero/charsum.hpp"
#include "twozero/codes.hpp"
#include "twozero/curves.hpp"
#include "twozero/ffield.hpp"
#include "twozero/serialize.hpp"
#include "verify.hpp"

namespace {

using twozero::Json;

struct RunConfig {
    std::int64_t p = 0;
    int s = 1;
    int m = 1;
    std::int64_t h = 1;
    std::int64_t e = 1;
    std::int64_t N = 2;
    std::int64_t f = 1;
    std::string modulus;
    std::string format = "json";
    std::string out;
    std::string shifts;
    std::string units;
    std::uint64_t work_cap = twozero::kDefaultEnumerationCap;
    int jobs = 0;
    int corrupt_table1 = -1;
};

std::uint64_t default_work_cap() {
    if (const char* env = std::getenv("TWOZERO_WORK_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return twozero::kDefaultEnumerationCap;
}

std::unique_ptr<twozero::FieldTower> build_tower(const RunConfig& cfg) {
    std::optional<twozero::Poly> modulus;
    if (!cfg.modulus.empty())
        modulus = twozero::poly_from_string(cfg.modulus, cfg.p);
    return std::make_unique<twozero::FieldTower>(cfg.p, cfg.s, cfg.m, modulus);
}

void emit(const RunConfig& cfg, const Json& report, const std::string& csv = "") {
    std::string text;
    if (cfg.format == "json") {
        text = report.dump(2) + "\n";
    } else if (cfg.format == "pretty") {
        text = twozero::render_pretty(report);
    } else if (cfg.format == "csv") {
        if (csv.empty())
            throw std::invalid_argument("csv format is not available for this command");
        text = csv;
    } else {
        throw std::invalid_argument("unknown format '" + cfg.format + "'");
    }
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open output file '" + cfg.out + "'");
        f << text;
    }
}

Json code_json(const twozero::CodeParams& P) {
    return Json{{"h", P.h}, {"e", P.e}, {"n", P.n}, {"f", P.f},
                {"g", "a^" + std::to_string(P.g_exp)},
                {"beta", "a^" + std::to_string(P.beta_exp)}};
}

int cmd_enumerate(const RunConfig& cfg) {
    auto tower = build_tower(cfg);
    const auto params = twozero::build_code_params(*tower, cfg.h, cfg.e);
    twozero::EnumerateOptions opts;
    opts.work_cap = cfg.work_cap;
    opts.jobs = cfg.jobs;
    const auto dist = twozero::enumerate_weight_distribution(params, opts);

    Json report;
    report["command"] = "enumerate";
    report["field"] = twozero::field_params_json(*tower);
    report["code"] = code_json(params);
    report["n"] = dist.n;
    report["k"] = dist.dimension;
    report["minimum_distance"] = dist.min_nonzero_weight();
    report["dimension_check"] = Json{{"expected", 2 * tower->m()},
                                     {"actual", dist.dimension},
                                     {"pass", dist.dimension == 2 * tower->m()}};
    report["counts"] = twozero::weight_distribution_json(dist)["counts"];
    emit(cfg, report, twozero::weight_distribution_csv(dist));
    return 0;
}

int cmd_predict(const RunConfig& cfg) {
    auto tower = build_tower(cfg);
    const auto params = twozero::build_code_params(*tower, cfg.h, cfg.e);
    const auto table1 = twozero::predict_weight_distribution(params);
    const auto table2 = twozero::predict_class_sum_distribution(params);

    Json report;
    report["command"] = "predict";
    report["field"] = twozero::field_params_json(*tower);
    report["code"] = code_json(params);
    report["table1"] = twozero::weight_distribution_json(table1);
    report["table2"] = Json{{"values", twozero::int_map_json(table2)}};
    emit(cfg, report, twozero::weight_distribution_csv(table1));
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    auto tower = build_tower(cfg);
    const auto params = twozero::build_code_params(*tower, cfg.h, cfg.e);
    twozero::VerifyOptions opts;
    opts.work_cap = cfg.work_cap;
    opts.jobs = cfg.jobs;
    opts.corrupt_table1 = cfg.corrupt_table1;
    const auto outcome = twozero::run_verify(params, opts);
    emit(cfg, outcome.report);
    return outcome.all_pass ? 0 : 1;
}

int cmd_gauss(const RunConfig& cfg) {
    auto tower = build_tower(cfg);
    const std::int64_t N = cfg.N;

    Json periods = Json::array();
    auto sum = twozero::CyclotomicIntegerValue::zero(tower->p());
    for (std::int64_t i = 0; i < N; ++i) {
        const auto v = twozero::gaussian_period(*tower, N, i);
        sum += v;
        Json pj;
        pj["i"] = i;
        pj["value"] = twozero::cyclotomic_value_json(v);
        pj["rational"] = v.is_rational();
        if (v.is_rational()) pj["rational_value"] = v.rational_value();
        periods.push_back(pj);
    }

    Json report;
    report["command"] = "gauss";
    report["field"] = twozero::field_params_json(*tower);
    report["N"] = N;
    report["periods"] = periods;
    report["period_sum_is_minus_one"] =
        sum == twozero::CyclotomicIntegerValue::from_integer(tower->p(), -1);

    if (N == 2 && tower->p() != 2) {
        const auto cf =
            twozero::gaussian_period_closed_form_n2(tower->p(), tower->s(), tower->m());
        if (cf) {
            bool agrees = true;
            const auto eta0 = twozero::gaussian_period(*tower, 2, 0);
            const auto eta1 = twozero::gaussian_period(*tower, 2, 1);
            agrees = eta0.is_rational() && eta1.is_rational() && cf->eta0.den == 1 &&
                     cf->eta1.den == 1 && eta0.rational_value() == cf->eta0.num &&
                     eta1.rational_value() == cf->eta1.num;
            report["closed_form"] = Json{{"available", true},
                                         {"eta0", cf->eta0.to_string()},
                                         {"eta1", cf->eta1.to_string()},
                                         {"agrees_with_character_sum", agrees}};
        } else {
            report["closed_form"] =
                Json{{"available", false},
                     {"reason", "not rational; use exact character sum"}};
        }
    }
    emit(cfg, report);
    return 0;
}

int cmd_curves(const RunConfig& cfg) {
    auto tower = build_tower(cfg);
    const auto params = twozero::build_code_params(*tower, cfg.h, cfg.e);
    if (params.e != 3 || params.f != 2)
        throw std::invalid_argument(
            "curve reports require e = 3 and gcd(m, e(q-1)/h) = 2");
    const auto& T = *tower;
    const std::int64_t r = T.r();
    const twozero::FieldElement alpha = T.alpha();

    const auto J0 = twozero::shift_system_curve(T, params.beta, T.one());
    const auto J3 = twozero::shift_system_curve(T, params.beta, alpha);
    const auto cJ0 = twozero::count_quadric_pair(T, J0);
    const auto cJ3 = twozero::count_quadric_pair(T, J3);
    const auto E = twozero::make_weierstrass(T, T.zero(), T.zero(), T.one());
    const auto Etw = twozero::quadratic_twist(T, E, alpha);
    const auto cE = twozero::count_weierstrass(T, E);
    const auto cEtw = twozero::count_weierstrass(T, Etw);
    const auto triples = twozero::count_shift_triples(params);

    Json identities;
    identities["system_totals_sum_2r2"] = cJ0.total + cJ3.total == 2 * (r + 1);
    identities["twist_totals_sum_2r2"] = cE.total + cEtw.total == 2 * (r + 1);
    identities["square_system_matches_cubic"] = cJ0.total == cE.total;
    identities["nonsquare_system_matches_twist"] = cJ3.total == cEtw.total;
    identities["all_squares_from_system"] = 8 * triples.all_squares == cJ0.total - 16;
    identities["all_nonsquares_from_system"] =
        8 * triples.all_nonsquares == cJ3.total - 4;
    identities["triple_sum_quarter_r_minus_9"] =
        4 * (triples.all_squares + triples.all_nonsquares) == r - 9;

    bool all_ok = true;
    for (const auto& [k, v] : identities.items()) all_ok = all_ok && v.get<bool>();

    Json report;
    report["command"] = "curves";
    report["field"] = twozero::field_params_json(T);
    report["code"] = code_json(params);
    report["square_system"] =
        twozero::curve_report_json(twozero::quadric_pair_json(T, J0), cJ0);
    report["nonsquare_system"] =
        twozero::curve_report_json(twozero::quadric_pair_json(T, J3), cJ3);
    report["cubic"] = twozero::curve_report_json(twozero::weierstrass_json(T, E), cE);
    report["cubic_twist"] =
        twozero::curve_report_json(twozero::weierstrass_json(T, Etw), cEtw);
    report["shift_triples"] = Json{{"all_squares", triples.all_squares},
                                   {"all_nonsquares", triples.all_nonsquares}};
    report["identities"] = identities;
    report["all_pass"] = all_ok;
    emit(cfg, report);
    return all_ok ? 0 : 1;
}

std::vector<twozero::FieldElement> parse_element_list(const twozero::FieldTower& tower,
                                                      const std::string& text,
                                                      std::optional<std::int64_t> e_for_beta) {
    std::vector<twozero::FieldElement> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t semi = text.find(';', pos);
        if (semi == std::string::npos) semi = text.size();
        std::string tok = text.substr(pos, semi - pos);
        const auto b = tok.find_first_not_of(" \t");
        const auto en = tok.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("empty element in list '" + text + "'");
        tok = tok.substr(b, en - b + 1);
        if (tok == "b" || tok.rfind("b^", 0) == 0) {
            if (!e_for_beta)
                throw std::invalid_argument("'b' shorthand requires --e");
            const std::int64_t k = tok == "b" ? 1 : std::stoll(tok.substr(2));
            out.push_back(tower.alpha_pow((tower.order() / *e_for_beta) * k));
        } else {
            out.push_back(twozero::field_element_from_string(tower, tok));
        }
        if (semi == text.size()) break;
        pos = semi + 1;
    }
    return out;
}

int cmd_explore(const RunConfig& cfg, bool have_e) {
    auto tower = build_tower(cfg);
    std::optional<std::int64_t> e_for_beta;
    if (have_e) e_for_beta = cfg.e;
    const auto shifts = parse_element_list(*tower, cfg.shifts, e_for_beta);
    const auto units = parse_element_list(*tower, cfg.units, e_for_beta);

    // Canonical systems use units among alpha^0 .. alpha^{e-1}.
    bool canonical = true;
    for (const auto& u : units) {
        if (u.is_zero() ||
            u.exponent() >= static_cast<std::uint32_t>(shifts.size())) {
            canonical = false;
            break;
        }
    }
    if (!canonical)
        std::cerr << "warning: units are not all among a^0..a^" << shifts.size() - 1
                  << "\n";

    const std::int64_t count =
        twozero::count_shifted_power_system(*tower, cfg.f, shifts, units);

    Json report;
    report["command"] = "explore";
    report["field"] = twozero::field_params_json(*tower);
    report["f"] = cfg.f;
    Json sj = Json::array(), uj = Json::array();
    for (const auto& s : shifts) sj.push_back(twozero::field_element_to_string(*tower, s));
    for (const auto& u : units) uj.push_back(twozero::field_element_to_string(*tower, u));
    report["shifts"] = sj;
    report["units"] = uj;
    report["units_canonical"] = canonical;
    report["count"] = count;
    emit(cfg, report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact weight distributions of trace-defined two-zero cyclic codes"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.work_cap = default_work_cap();

    auto add_field_opts = [&](CLI::App* sub) {
        sub->set_help_flag("--help", "print help and exit");
        sub->add_option("--p", cfg.p, "characteristic (prime)")->required();
        sub->add_option("--s", cfg.s, "q = p^s");
        sub->add_option("--m", cfg.m, "r = q^m");
        sub->add_option("--modulus", cfg.modulus,
                        "primitive polynomial, constant term first (e.g. 3,1,1)");
        sub->add_option("--format", cfg.format, "json | csv | pretty");
        sub->add_option("--out", cfg.out, "write the report to a file");
        sub->add_option("--work-cap", cfg.work_cap, "enumeration work cap (r^2*n)");
        sub->add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)");
    };
    auto add_code_opts = [&](CLI::App* sub) {
        sub->add_option("--h", cfg.h, "h | q-1")->required();
        sub->add_option("--e", cfg.e, "e | h")->required();
    };

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "exhaustive weight distribution over all r^2 codewords");
    add_field_opts(enumerate);
    add_code_opts(enumerate);

    CLI::App* predict = app.add_subcommand(
        "predict", "closed-form weight and class-sum distributions");
    add_field_opts(predict);
    add_code_opts(predict);

    CLI::App* verify = app.add_subcommand(
        "verify", "run every closed-form-versus-exhaustive check for one parameter set");
    add_field_opts(verify);
    add_code_opts(verify);
    verify->add_option("--corrupt-table1", cfg.corrupt_table1)->group("");

    CLI::App* gauss = app.add_subcommand("gauss", "Gaussian periods of order N");
    add_field_opts(gauss);
    gauss->add_option("--N", cfg.N, "period order (divides r-1)");

    CLI::App* curves = app.add_subcommand(
        "curves", "point counts of the shift systems, the cubic and its twist");
    add_field_opts(curves);
    add_code_opts(curves);

    CLI::App* explore = app.add_subcommand(
        "explore", "count solutions of x + shift_i = unit_i * x_i^f");
    add_field_opts(explore);
    explore->add_option("--e", cfg.e, "enables the b / b^k shorthand for beta powers");
    explore->add_option("--f", cfg.f, "power in the system")->required();
    explore->add_option("--shifts", cfg.shifts,
                        "semicolon-separated elements (coeff lists or a^k / b^k)")
        ->required();
    explore->add_option("--units", cfg.units, "same format as --shifts")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(enumerate)) return cmd_enumerate(cfg);
        if (app.got_subcommand(predict)) return cmd_predict(cfg);
        if (app.got_subcommand(verify)) return cmd_verify(cfg);
        if (app.got_subcommand(gauss)) return cmd_gauss(cfg);
        if (app.got_subcommand(curves)) return cmd_curves(cfg);
        if (app.got_subcommand(explore))
            return cmd_explore(cfg, explore->count("--e") > 0);
    } catch (const twozero::WorkCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
