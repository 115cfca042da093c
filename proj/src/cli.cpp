#include "rpe/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "rpe/elliptic.hpp"
#include "rpe/error.hpp"
#include "rpe/lattice.hpp"
#include "rpe/named_series.hpp"
#include "rpe/numtheory.hpp"
#include "rpe/radical.hpp"
#include "rpe/series_eval.hpp"
#include "rpe/series_params.hpp"
#include "rpe/verify.hpp"

namespace rpe {

namespace {

class Timer {
  public:
    explicit Timer(std::ostream& err, std::string label) : err_(err), label_(std::move(label)) {}
    ~Timer() {
        auto dt = std::chrono::steady_clock::now() - t0_;
        double s = std::chrono::duration<double>(dt).count();
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f", s);
        err_ << label_ << ": " << buf << " s\n";
    }

  private:
    std::ostream& err_;
    std::string label_;
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

std::string pi_by_method(const std::string& method, long digits, unsigned workers) {
    if (method == "chudnovsky") return chudnovsky_pi(digits, workers);
    if (method == "agm") return pi_reference(Ctx(digits)).str(digits);
    Ctx w(digits + 10);
    SeriesParams p;
    if (method == "bg163") {
        Real J = eval_radical(parse_radical(bg163_J_text()), w).re;
        Real T = eval_radical(parse_radical(bg163_T_text()), w).re;
        p = params_from_J_T(163, J, T, w);
    } else {  // r243
        p.r = 243;
        p.family = Family::negative;
        p.z = value_of(r243_z(), w);
        p.a = value_of(r243_a(), w);
        p.b = value_of(r243_b(), w);
    }
    Real s = eval_level1_series(p, digits + 5);
    return (1L / s).str(digits);
}

int do_verify(const std::string& suite, long digits, bool json, std::ostream& out,
              std::ostream& err) {
    std::vector<VerificationReport> reports;
    {
        Timer t(err, "verify " + suite);
        if (suite == "all") {
            reports = verify_all(Ctx(digits));
        } else if (suite == "lambda163") {
            reports.push_back(verify_lambda163(Ctx(digits)));
        } else if (suite == "alpha163") {
            reports.push_back(verify_alpha163(Ctx(digits)));
        } else if (suite == "bg163") {
            reports.push_back(verify_bg163(Ctx(digits)));
        } else if (suite == "r243") {
            reports.push_back(verify_r243(Ctx(digits)));
        } else {
            reports.push_back(verify_g163(Ctx(digits)));
        }
    }
    if (json) {
        out << (reports.size() == 1 ? report_json(reports[0]) : reports_json(reports));
    } else {
        for (size_t i = 0; i < reports.size(); ++i) {
            if (i) out << "\n";
            out << report_text(reports[i]);
        }
    }
    bool ok = std::all_of(reports.begin(), reports.end(),
                          [](const VerificationReport& r) { return r.all_passed(); });
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"high-precision certification of level-1 Ramanujan-type series"};
    app.name("rpe");
    app.require_subcommand(1);

    long default_digits = 100;

    // pi
    std::string pi_method = "chudnovsky";
    long pi_digits = default_digits;
    unsigned pi_workers = std::max(1u, std::thread::hardware_concurrency());
    bool pi_json = false;
    CLI::App* pi = app.add_subcommand("pi", "compute pi by a chosen route");
    pi->add_option("--method", pi_method, "series or AGM route")
        ->check(CLI::IsMember({"chudnovsky", "bg163", "r243", "agm"}))
        ->capture_default_str();
    pi->add_option("--digits", pi_digits, "significant digits")
        ->envname("RPE_DIGITS")
        ->check(CLI::Range(1L, 2000000L))
        ->capture_default_str();
    pi->add_option("--workers", pi_workers, "worker threads for binary splitting")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    pi->add_flag("--json", pi_json, "JSON output");

    // lambda-star
    std::string ls_r;
    long ls_digits = default_digits;
    std::string ls_method = "theta";
    CLI::App* ls = app.add_subcommand("lambda-star", "singular modulus lambda*(r)");
    ls->add_option("R", ls_r, "rational r >= 1, e.g. 163 or 163/4")->required();
    ls->add_option("--digits", ls_digits, "significant digits")
        ->envname("RPE_DIGITS")
        ->check(CLI::Range(1L, 1000000L))
        ->capture_default_str();
    ls->add_option("--method", ls_method, "computation route")
        ->check(CLI::IsMember({"theta", "bisect"}))
        ->capture_default_str();

    // alpha
    std::string al_r;
    long al_digits = default_digits;
    CLI::App* al = app.add_subcommand("alpha", "elliptic alpha function alpha(r)");
    al->add_option("R", al_r, "rational r >= 1")->required();
    al->add_option("--digits", al_digits, "significant digits")
        ->envname("RPE_DIGITS")
        ->check(CLI::Range(1L, 1000000L))
        ->capture_default_str();

    // params
    std::string pr_r, pr_family = "pos";
    long pr_digits = default_digits;
    CLI::App* pr = app.add_subcommand("params", "level-1 series parameters (z, a, b)");
    pr->add_option("R", pr_r, "rational r > 1")->required();
    pr->add_option("--family", pr_family, "convergence-rate sign")
        ->check(CLI::IsMember({"pos", "neg"}))
        ->capture_default_str();
    pr->add_option("--digits", pr_digits, "significant digits")
        ->envname("RPE_DIGITS")
        ->check(CLI::Range(1L, 1000000L))
        ->capture_default_str();

    // verify
    std::string vf_suite;
    long vf_digits = default_digits;
    bool vf_json = false;
    CLI::App* vf = app.add_subcommand("verify", "run a certification suite");
    vf->add_option("SUITE", vf_suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"lambda163", "alpha163", "bg163", "r243", "g163", "all"}));
    vf->add_option("--digits", vf_digits, "working precision")
        ->envname("RPE_DIGITS")
        ->check(CLI::Range(40L, 100000L))
        ->capture_default_str();
    vf->add_flag("--json", vf_json, "JSON output");

    // recognize
    int rc_degree = 0;
    long rc_digits = default_digits;
    std::string rc_value, rc_file;
    CLI::App* rc = app.add_subcommand("recognize", "integer minimal polynomial of a decimal");
    rc->add_option("--degree", rc_degree, "maximum degree to try")
        ->required()
        ->check(CLI::Range(1, 32));
    rc->add_option("--digits", rc_digits, "digits of the input that are trusted")
        ->envname("RPE_DIGITS")
        ->check(CLI::Range(30L, 100000L))
        ->capture_default_str();
    CLI::Option* rc_v = rc->add_option("--value", rc_value, "decimal value");
    CLI::Option* rc_f = rc->add_option("--file", rc_file, "file holding one decimal value");
    rc_v->excludes(rc_f);
    rc_f->excludes(rc_v);

    // classnum
    long cn_d = 0;
    bool cn_oracle = false;
    CLI::App* cn = app.add_subcommand("classnum", "class number h(-d)");
    cn->add_option("D", cn_d, "positive discriminant magnitude, d = 0 or 3 mod 4")->required();
    cn->add_flag("--oracle", cn_oracle, "cross-check the character sum against a form count");

    // bench
    long bn_digits = default_digits;
    std::vector<std::string> bn_methods{"chudnovsky", "bg163", "r243", "agm"};
    CLI::App* bn = app.add_subcommand("bench", "time the pi routes at equal precision");
    bn->add_option("--digits", bn_digits, "significant digits")
        ->envname("RPE_DIGITS")
        ->check(CLI::Range(1L, 2000000L))
        ->capture_default_str();
    bn->add_option("--methods", bn_methods, "comma-separated subset of the pi methods")
        ->delimiter(',')
        ->check(CLI::IsMember({"chudnovsky", "bg163", "r243", "agm"}));

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (pi->parsed()) {
            std::string v = pi_by_method(pi_method, pi_digits, pi_workers);
            if (pi_json) {
                nlohmann::ordered_json j{
                    {"method", pi_method}, {"digits", pi_digits}, {"value", v}};
                out << j.dump(2) << "\n";
            } else {
                out << v << "\n";
            }
            return 0;
        }
        if (ls->parsed()) {
            LambdaMethod m = ls_method == "theta" ? LambdaMethod::theta : LambdaMethod::bisect;
            out << lambda_star(parse_rat(ls_r), Ctx(ls_digits), m).str(ls_digits) << "\n";
            return 0;
        }
        if (al->parsed()) {
            out << elliptic_alpha(parse_rat(al_r), Ctx(al_digits)).str(al_digits) << "\n";
            return 0;
        }
        if (pr->parsed()) {
            Rat r = parse_rat(pr_r);
            Ctx c(pr_digits);
            SeriesParams p =
                pr_family == "pos" ? params_positive(r, c) : params_negative(r, c);
            out << "family: " << (p.family == Family::positive ? "positive" : "negative")
                << "\n";
            out << "r: " << pr_r << "\n";
            out << "z: " << p.z.str(pr_digits) << "\n";
            out << "a: " << p.a.str(pr_digits) << "\n";
            out << "b: " << p.b.str(pr_digits) << "\n";
            out << "digits_per_term: " << digits_per_term(p.z).str(12) << "\n";
            return 0;
        }
        if (vf->parsed()) return do_verify(vf_suite, vf_digits, vf_json, out, err);
        if (rc->parsed()) {
            std::string text = rc_value;
            if (!rc_file.empty()) {
                std::ifstream in(rc_file);
                if (!in) throw domain_error("cannot open " + rc_file);
                std::stringstream ss;
                ss << in.rdbuf();
                text = ss.str();
            }
            while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
                text.pop_back();
            size_t lead = 0;
            while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead])))
                ++lead;
            text = text.substr(lead);
            if (text.empty()) {
                err << "recognize: provide --value or a non-empty --file\n";
                return 2;
            }
            Real v = Real::parse(text, Ctx(rc_digits));
            auto q = recognize_min_poly(v, rc_degree, Ctx(rc_digits));
            if (!q) {
                err << "recognize: no integer relation found (degree <= "
                    << rc_degree << ", " << rc_digits << " digits)\n";
                return 3;
            }
            out << q->to_line() << "\n";
            return 0;
        }
        if (cn->parsed()) {
            long h = class_number_sum(Int(cn_d));
            if (cn_oracle) {
                long forms = class_number_forms(Int(cn_d));
                if (h != forms)
                    throw consistency_error("character sum " + std::to_string(h) +
                                            " != form count " + std::to_string(forms));
            }
            out << h << "\n";
            return 0;
        }
        if (bn->parsed()) {
            for (const auto& m : bn_methods) {
                std::string v;
                {
                    Timer t(err, "bench " + m);
                    v = pi_by_method(m, bn_digits, std::max(1u, std::thread::hardware_concurrency()));
                }
                std::string head = v.substr(0, std::min<size_t>(12, v.size()));
                std::string tail = v.size() > 12 ? v.substr(v.size() - 8) : "";
                out << m << " digits=" << bn_digits << " head=" << head;
                if (!tail.empty()) out << " tail=" << tail;
                out << "\n";
            }
            return 0;
        }
        err << "no subcommand\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace rpe
