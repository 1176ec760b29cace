#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coeffbounds/brute_force.hpp"
#include "coeffbounds/oracle.hpp"
#include "coeffbounds/walpha.hpp"

namespace cb = coeffbounds;
using nlohmann::json;

namespace {

struct Rec {
    double alpha;
    std::string quantity;
    double value;
    std::string provenance; // THEOREM | ORACLE | EXTREMAL
    std::vector<std::pair<std::string, std::string>> extra;
};

std::string fmt_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string extra_join(const Rec& r) {
    std::string s;
    for (const auto& [k, v] : r.extra) {
        if (!s.empty()) s += ';';
        s += k + "=" + v;
    }
    return s;
}

void emit(const std::vector<Rec>& recs, const std::string& format,
          const std::string& out_path) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        os = &file;
    }
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : recs) {
            json extra = json::object();
            for (const auto& [k, v] : r.extra) extra[k] = v;
            arr.push_back({{"alpha", r.alpha},
                           {"quantity", r.quantity},
                           {"value", r.value},
                           {"provenance", r.provenance},
                           {"extra", extra}});
        }
        *os << json{{"version", 1}, {"records", arr}}.dump(2) << "\n";
    } else if (format == "csv") {
        *os << "alpha,quantity,value,provenance,extra\n";
        for (const auto& r : recs) {
            *os << fmt_full(r.alpha) << ',' << r.quantity << ',' << fmt_full(r.value)
                << ',' << r.provenance << ',' << extra_join(r) << "\n";
        }
    } else {
        char buf[256];
        for (const auto& r : recs) {
            std::snprintf(buf, sizeof(buf), "%-26s alpha=%-13.10g value=%-16.10g %s",
                          r.quantity.c_str(), r.alpha, r.value, r.provenance.c_str());
            *os << buf;
            const std::string ex = extra_join(r);
            if (!ex.empty()) *os << "  " << ex;
            *os << "\n";
        }
    }
}

struct Quantity {
    std::string id;
    bool alpha_one_only;
    std::function<double(double)> eval;
};

const std::vector<Quantity>& quantities() {
    static const std::vector<Quantity> q = {
        {"gamma1_bound", false, [](double a) { return cb::bound_gamma(1, a); }},
        {"gamma2_bound", false, [](double a) { return cb::bound_gamma(2, a); }},
        {"gamma3_bound", false, [](double a) { return cb::bound_gamma(3, a); }},
        {"gamma1_inv_bound", false, [](double a) { return cb::bound_Gamma(1, a); }},
        {"gamma2_inv_bound", false, [](double a) { return cb::bound_Gamma(2, a); }},
        {"gamma3_inv_bound", false, [](double a) { return cb::bound_Gamma(3, a); }},
        {"gamma_diff_upper", false,
         [](double a) { return cb::bound_gamma_diff(a).upper; }},
        {"gamma_diff_lower", false,
         [](double a) { return cb::bound_gamma_diff(a).lower; }},
        {"gamma_inv_diff_upper", false,
         [](double a) { return cb::bound_Gamma_diff(a).upper; }},
        {"gamma_inv_diff_lower", false,
         [](double a) { return cb::bound_Gamma_diff(a).lower; }},
        {"hankel_log_bound", true,
         [](double a) { return cb::bound_hankel(cb::HankelKind::Log, a); }},
        {"hankel_log_inv_bound", true,
         [](double a) { return cb::bound_hankel(cb::HankelKind::LogInverse, a); }},
    };
    return q;
}

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

const Quantity* resolve_quantity(const std::string& name) {
    const std::string n = to_lower(name);
    for (const auto& q : quantities()) {
        if (n == q.id) return &q;
        // short aliases: GAMMA2 -> gamma2_bound, GAMMA2_INV -> gamma2_inv_bound
        if (q.id == n + "_bound") return &q;
    }
    return nullptr;
}

int cmd_bounds(double alpha, const std::string& format, const std::string& out) {
    if (!(alpha >= 0.0)) {
        std::cerr << "error: alpha must be nonnegative\n";
        return 2;
    }
    std::vector<Rec> recs;
    const bool at_one = std::abs(alpha - 1.0) <= 1e-12;
    for (const auto& q : quantities()) {
        if (q.alpha_one_only && !at_one) continue;
        recs.push_back({alpha, q.id, q.eval(alpha), "THEOREM", {}});
    }
    emit(recs, format, out);
    return 0;
}

int cmd_sweep(double lo, double hi, int steps, const std::vector<std::string>& names,
              const std::string& format, const std::string& out) {
    if (!(lo >= 0.0) || !(lo < hi) || steps < 2) {
        std::cerr << "error: need 0 <= alpha-min < alpha-max and steps >= 2\n";
        return 2;
    }
    std::vector<const Quantity*> qs;
    if (names.empty()) {
        for (const auto& q : quantities()) {
            if (!q.alpha_one_only) qs.push_back(&q);
        }
    } else {
        for (const auto& n : names) {
            const Quantity* q = resolve_quantity(n);
            if (!q) {
                std::cerr << "error: unknown quantity " << n << "\n";
                return 2;
            }
            qs.push_back(q);
        }
    }
    // grid plus exact breakpoint rows so the piecewise kinks are visible
    std::vector<double> grid;
    for (int i = 0; i < steps; ++i) grid.push_back(lo + (hi - lo) * i / (steps - 1));
    for (const auto& b : cb::compute_breakpoints()) {
        if (b.alpha > lo && b.alpha < hi) grid.push_back(b.alpha);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<Rec> recs;
    for (double a : grid) {
        for (const Quantity* q : qs) {
            if (q->alpha_one_only && std::abs(a - 1.0) > 1e-12) continue;
            recs.push_back({a, q->id, q->eval(a), "THEOREM", {}});
        }
    }
    emit(recs, format, out);
    return 0;
}

int cmd_breakpoints(const std::string& format, const std::string& out) {
    std::vector<Rec> recs;
    bool fail = false;
    for (const auto& b : cb::compute_breakpoints()) {
        const double diff = std::abs(b.alpha - b.reference_value);
        const bool bad = !b.warn && diff > 5e-3;
        fail = fail || bad;
        recs.push_back({b.alpha,
                        b.name,
                        b.alpha,
                        "THEOREM",
                        {{"reference", fmt_full(b.reference_value)},
                         {"abs_diff", fmt_full(diff)},
                         {"equation", b.defining_equation},
                         {"flag", b.warn ? "WARN" : (bad ? "FAIL" : "OK")}}});
    }
    emit(recs, format, out);
    return fail ? 1 : 0;
}

int cmd_region(double alpha, const std::string& source, const std::string& format,
               const std::string& out) {
    if (!(alpha >= 0.0)) {
        std::cerr << "error: alpha must be nonnegative\n";
        return 2;
    }
    cb::MuNuSource src;
    const std::string s = to_lower(source);
    if (s == "gamma3") {
        src = cb::MuNuSource::Gamma3;
    } else if (s == "gamma3_inverse") {
        src = cb::MuNuSource::Gamma3Inverse;
    } else {
        std::cerr << "error: source must be GAMMA3 or GAMMA3_INVERSE\n";
        return 2;
    }
    const cb::MuNuPoint mn = cb::mu_nu(src, alpha);
    const cb::RegionLabel lab = cb::ps_region_classify(mn.mu, mn.nu);
    std::string regions;
    for (cb::Region r : lab.members) {
        if (!regions.empty()) regions += '+';
        regions += cb::region_name(r);
    }
    if (regions.empty()) regions = "none";
    std::vector<Rec> recs;
    recs.push_back({alpha, "mu", mn.mu, "THEOREM", {{"source", source}}});
    recs.push_back({alpha, "nu", mn.nu, "THEOREM", {{"source", source}}});
    recs.push_back({alpha, "region_bound",
                    lab.bound_value.value_or(std::nan("")), "THEOREM",
                    {{"regions", regions}}});
    emit(recs, format, out);
    return 0;
}

// ---- verify suites ----------------------------------------------------

bool suite_sharpness(std::vector<Rec>& recs) {
    bool ok = true;
    for (cb::Theorem t : cb::all_theorems()) {
        const bool hankel =
            t == cb::Theorem::HankelLog || t == cb::Theorem::HankelLogInv;
        const std::vector<double> alphas =
            hankel ? std::vector<double>{1.0} : cb::standard_alpha_samples();
        for (double a : alphas) {
            const cb::SharpnessRow r = cb::sharpness_report(t, a);
            const bool pass = std::abs(r.gap) <= 1e-9;
            ok = ok && pass;
            recs.push_back({a, cb::theorem_name(t), r.gap, "EXTREMAL",
                            {{"bound", fmt_full(r.bound)},
                             {"attained", fmt_full(r.attained)},
                             {"status", pass ? "OK" : "FAIL"}}});
        }
    }
    return ok;
}

bool suite_bounds(std::vector<Rec>& recs, std::uint64_t seed) {
    bool ok = true;
    cb::SearchConfig cfg;
    cfg.seed = seed;
    cfg.grid_resolution = 21;
    cfg.probes = 20000;
    for (double a : cb::standard_alpha_samples()) {
        std::vector<cb::Functional> fs;
        for (cb::Functional f : cb::all_functionals()) {
            if (cb::functional_supported(f, a)) fs.push_back(f);
        }
        const auto reps = cb::certify_batch(fs, a, cfg);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            const bool pass = reps[i].violations.empty();
            ok = ok && pass;
            recs.push_back({a, cb::functional_name(fs[i]), reps[i].best_value, "ORACLE",
                            {{"bound", fmt_full(reps[i].bound)},
                             {"gap", fmt_full(reps[i].gap)},
                             {"violations", std::to_string(reps[i].violations.size())},
                             {"status", pass ? "OK" : "FAIL"}}});
        }
    }
    return ok;
}

bool suite_lemmas(std::vector<Rec>& recs, std::uint64_t seed) {
    bool ok = true;
    auto row = [&](const std::string& q, double closed, double brute) {
        const double diff = std::abs(closed - brute);
        const bool pass = diff <= 1e-4;
        ok = ok && pass;
        recs.push_back({0.0, q, diff, "ORACLE",
                        {{"closed_form", fmt_full(closed)},
                         {"brute_force", fmt_full(brute)},
                         {"status", pass ? "OK" : "FAIL"}}});
    };
    for (double v : {-1.0, -0.3, 0.0, 0.4, 1.0, 2.0}) {
        row("fekete_szego(v=" + fmt_full(v) + ")", cb::fekete_szego_bound(v),
            cb::brute::max_fekete_szego(v, seed));
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int i = 0; i < 8; ++i) {
        const double B1 = u01(rng);
        const cb::Complex B2(2.0 * u01(rng) - 1.0, 2.0 * u01(rng) - 1.0);
        const double B3 = (u01(rng) < 0.5 ? -1.0 : 1.0) * (0.05 + 0.95 * u01(rng));
        const cb::PsiInputs b{B1, B2, B3};
        row("psi_plus[" + std::to_string(i) + "]", cb::psi_plus_bound(b),
            cb::brute::max_psi_plus(B1, B2, B3, seed + i));
        row("psi_minus[" + std::to_string(i) + "]", cb::psi_minus_bound(b),
            cb::brute::max_psi_minus(B1, B2, B3, seed + 100 + i));
    }
    for (double a : {0.25, 1.0, 3.0, 6.0}) {
        for (cb::MuNuSource src :
             {cb::MuNuSource::Gamma3, cb::MuNuSource::Gamma3Inverse}) {
            const cb::MuNuPoint mn = cb::mu_nu(src, a);
            const auto bound = cb::ps_bound(mn.mu, mn.nu);
            if (!bound) continue;
            row("ps_bound(mu=" + fmt_full(mn.mu) + ",nu=" + fmt_full(mn.nu) + ")",
                *bound, cb::brute::max_schwarz_cubic(mn.mu, mn.nu, seed + 7));
        }
    }
    return ok;
}

bool suite_hankel(std::vector<Rec>& recs, std::uint64_t seed) {
    bool ok = true;
    cb::SearchConfig cfg;
    cfg.seed = seed;
    for (cb::Functional f : {cb::Functional::AbsHLog, cb::Functional::AbsHLogInv}) {
        const cb::SearchReport r = cb::maximize_functional(f, 1.0, cfg);
        const bool pass = std::abs(r.best_value - 1.0 / 81.0) <= 1e-6;
        ok = ok && pass;
        recs.push_back({1.0, cb::functional_name(f), r.best_value, "ORACLE",
                        {{"bound", fmt_full(r.bound)},
                         {"status", pass ? "OK" : "FAIL"}}});
    }
    for (cb::HankelKind k : {cb::HankelKind::Log, cb::HankelKind::LogInverse}) {
        const cb::FxyReport r = cb::maximize_F_xy(k);
        const bool pass = std::abs(r.max_value - 1.0 / 81.0) <= 1e-9;
        ok = ok && pass;
        recs.push_back({1.0,
                        k == cb::HankelKind::Log ? "F_xy_log" : "F_xy_log_inv",
                        r.max_value, "ORACLE",
                        {{"x", fmt_full(r.x)},
                         {"y", fmt_full(r.y)},
                         {"status", pass ? "OK" : "FAIL"}}});
    }
    return ok;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& format,
               const std::string& out) {
    const std::string s = to_lower(suite);
    std::vector<Rec> recs;
    bool ok = true;
    bool known = false;
    if (s == "sharpness" || s == "all") {
        ok = suite_sharpness(recs) && ok;
        known = true;
    }
    if (s == "bounds" || s == "all") {
        ok = suite_bounds(recs, seed) && ok;
        known = true;
    }
    if (s == "lemmas" || s == "all") {
        ok = suite_lemmas(recs, seed) && ok;
        known = true;
    }
    if (s == "hankel" || s == "all") {
        ok = suite_hankel(recs, seed) && ok;
        known = true;
    }
    if (!known) {
        std::cerr << "error: unknown suite " << suite
                  << " (expected BOUNDS|SHARPNESS|LEMMAS|HANKEL|ALL)\n";
        return 2;
    }
    emit(recs, format, out);
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sharp coefficient bounds for the class W(alpha)"};
    app.require_subcommand(1);

    std::uint64_t seed = 42;
    if (const char* env = std::getenv("COEFFBOUNDS_SEED")) {
        seed = std::strtoull(env, nullptr, 10);
    }

    std::string format = "text", out_path;
    double alpha = 0.0, alpha_min = 0.0, alpha_max = 1.0;
    int steps = 101;
    std::vector<std::string> names;
    std::string suite = "ALL", source = "GAMMA3";

    auto add_common = [&](CLI::App* c) {
        c->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
        c->add_option("--out", out_path);
    };

    auto* c_bounds = app.add_subcommand("bounds", "Print all bound values at one alpha");
    c_bounds->add_option("--alpha", alpha)->required();
    add_common(c_bounds);

    auto* c_sweep = app.add_subcommand("sweep", "Tabulate bounds over an alpha range");
    c_sweep->add_option("--alpha-min", alpha_min);
    c_sweep->add_option("--alpha-max", alpha_max)->required();
    c_sweep->add_option("--steps", steps);
    c_sweep->add_option("--quantities", names)->delimiter(',');
    add_common(c_sweep);

    auto* c_break = app.add_subcommand("breakpoints", "Recompute case boundaries");
    add_common(c_break);

    auto* c_verify = app.add_subcommand("verify", "Run a verification suite");
    c_verify->add_option("--suite", suite);
    c_verify->add_option("--seed", seed);
    add_common(c_verify);

    auto* c_region = app.add_subcommand("region", "Classify the (mu, nu) point");
    c_region->add_option("--alpha", alpha)->required();
    c_region->add_option("--source", source);
    add_common(c_region);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_bounds->parsed()) return cmd_bounds(alpha, format, out_path);
        if (c_sweep->parsed()) {
            return cmd_sweep(alpha_min, alpha_max, steps, names, format, out_path);
        }
        if (c_break->parsed()) return cmd_breakpoints(format, out_path);
        if (c_verify->parsed()) return cmd_verify(suite, seed, format, out_path);
        if (c_region->parsed()) return cmd_region(alpha, source, format, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
