// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Runs on fixed seeds; every check is exact or a certified
// verdict from the equality engine.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "json.hpp"
#include "nccalc/cli.hpp"
#include "nccalc/text.hpp"

using namespace nccalc;
using namespace nccalc::testing;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Brute-force commutative expansion of an inversion-free expression:
// an independent oracle for the kernel law, sharing nothing with Poly2.
using BruteMap = std::map<std::pair<int, int>, Rat>;

BruteMap brute_expand(NCExpr e) {
    switch (e.kind()) {
        case NodeKind::Const: {
            BruteMap m;
            if (e.value() != 0) m[{0, 0}] = e.value();
            return m;
        }
        case NodeKind::VarX: return {{{1, 0}, Rat(1)}};
        case NodeKind::VarY: return {{{0, 1}, Rat(1)}};
        case NodeKind::Add: {
            BruteMap m = brute_expand(e.child(0));
            for (const auto& [k, v] : brute_expand(e.child(1))) {
                m[k] += v;
                if (m[k] == 0) m.erase(k);
            }
            return m;
        }
        case NodeKind::Neg: {
            BruteMap m = brute_expand(e.child(0));
            for (auto& [k, v] : m) v = -v;
            return m;
        }
        case NodeKind::Mul: {
            BruteMap m;
            const BruteMap a = brute_expand(e.child(0));
            const BruteMap b = brute_expand(e.child(1));
            for (const auto& [ka, va] : a)
                for (const auto& [kb, vb] : b) {
                    const auto key = std::make_pair(ka.first + kb.first, ka.second + kb.second);
                    m[key] += va * vb;
                    if (m[key] == 0) m.erase(key);
                }
            return m;
        }
        default: return {};  // not reachable for inversion-free inputs
    }
}

struct CliRun {
    int code;
    std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str()};
}

std::string g_suite_report;  // shared between criteria 4, 8 and 9
int g_suite_exit = -1;
double g_suite_seconds = 0;

void run_suite_once() {
    if (g_suite_exit >= 0) return;
    const auto start = Clock::now();
    const CliRun r = cli({"cremona", "verify", "--suite", "paper", "--seed", "7"});
    g_suite_seconds = seconds_since(start);
    g_suite_report = r.out;
    g_suite_exit = r.code;
}

// ---------------------------------------------------------------------------

bool criterion_kernel_law(std::string& detail) {
    ExprStore store;
    SplitMix rng(1001);
    const NCExpr x = store.var_x();
    const NCExpr y = store.var_y();
    const NCExpr commutator = store.sub(store.mul(x, y), store.mul(y, x));

    for (int i = 0; i < 200; ++i) {
        const NCExpr factor = random_expr(store, rng, 3);
        const NCExpr e = (i % 2 == 0) ? store.mul(commutator, factor) : store.mul(factor, commutator);
        if (!store.commutativize(e).is_zero()) {
            detail = "commutator multiple escaped the kernel at sample " + std::to_string(i);
            return false;
        }
    }
    for (int i = 0; i < 200; ++i) {
        const NCExpr e = random_monomial_sum(store, rng, static_cast<int>(rng.next_in(1, 4)), 4);
        const bool oracle_nonzero = !brute_expand(e).empty();
        const bool phi_nonzero = !store.commutativize(e).is_zero();
        if (oracle_nonzero != phi_nonzero) {
            detail = "phi disagreed with the expansion oracle at sample " + std::to_string(i);
            return false;
        }
    }
    detail = "400 samples, exact";
    return true;
}

bool criterion_commutator_certificate(std::string& detail) {
    const auto start = Clock::now();
    ExprStore store;
    const NCExpr x = store.var_x();
    const NCExpr y = store.var_y();
    RepEnv env;
    env.k = 2;
    env.order = 2;
    env.s = {{0, 1}, {0, 0}};  // E12
    env.t = {{0, 0}, {1, 0}};  // E21
    const SeriesMatrix rep = represent(store.sub(store.mul(x, y), store.mul(y, x)), env);
    const CommRat one{Rat(1)};
    bool ok = true;
    for (int i = 0; i < 2 && ok; ++i)
        for (int j = 0; j < 2 && ok; ++j)
            for (int d = 0; d <= 2 && ok; ++d) {
                const CommRat& c = rep.at(i, j).at(d);
                if (i == 0 && j == 0 && d == 2) ok = c.equals(one);
                else if (i == 1 && j == 1 && d == 2) ok = c.equals(-one);
                else ok = c.is_zero();
            }
    const double secs = seconds_since(start);
    detail = "eps^2 diag(1,-1), " + std::to_string(secs) + " s";
    return ok && secs < 1.0;
}

bool criterion_homomorphism_battery(std::string& detail) {
    ExprStore store;
    SplitMix rng(2002);
    for (int i = 0; i < 200; ++i) {
        const NCExpr a = random_expr(store, rng, 3);
        const NCExpr b = random_expr(store, rng, 3);
        const CommRat pa = store.commutativize(a);
        const CommRat pb = store.commutativize(b);
        if (!store.commutativize(store.add(a, b)).equals(pa + pb) ||
            !store.commutativize(store.mul(a, b)).equals(pa * pb)) {
            detail = "phi failed at pair " + std::to_string(i);
            return false;
        }
        const RepEnv env = RepEnv::derive(2002, 2, 4, 3, i);
        const auto reps = represent_many(store, {a, b, store.mul(a, b)}, env);
        if (!reps[2].equals(reps[0] * reps[1])) {
            detail = "representation not multiplicative at pair " + std::to_string(i);
            return false;
        }
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                const CommRat& ct = reps[0].at(r, c).at(0);
                if (r == c ? !ct.equals(pa) : !ct.is_zero()) {
                    detail = "constant-term law failed at pair " + std::to_string(i);
                    return false;
                }
            }
    }
    detail = "200 pairs, exact at order 4";
    return true;
}

bool criterion_relation_suite(std::string& detail) {
    run_suite_once();
    const auto j = nlohmann::json::parse(g_suite_report);
    bool zero_distinct = true;
    bool shadows = true;
    for (const auto& rel : j["relations"]) {
        zero_distinct = zero_distinct && rel["comm_distinct"].get<int>() == 0 &&
                        rel["nc_distinct"].get<int>() == 0;
        shadows = shadows && rel["shadow_exact"].get<bool>();
    }
    detail = "seed 7, sizes {2,3}, N=4, t=10, B=3, " + std::to_string(g_suite_seconds) + " s";
    return g_suite_exit == 0 && j["pass"].get<bool>() && zero_distinct && shadows &&
           g_suite_seconds < 300.0;
}

std::vector<VMatrix> criterion5_matrices() {
    std::vector<VMatrix> out;
    SplitMix rng(3003);
    for (int i = 0; i < 30; ++i) {
        const int k = 1 + (i % 4);
        out.push_back(random_invertible_vmatrix(rng, k, 2));
    }
    return out;
}

bool criterion_ratio_law(std::string& detail) {
    const auto start = Clock::now();
    ExprStore store;
    const auto matrices = criterion5_matrices();
    for (std::size_t i = 0; i < matrices.size(); ++i) {
        const VMatrix& m = matrices[i];
        const Decomposition d = decompose(store, m);
        const CommRat lhs =
            store.commutativize(d.delta) * CommRat::from_poly(d.pivot_minor_det(m));
        Poly2 det = comm_det(m);
        if (d.perm_sign < 0) det = -det;
        if (!lhs.equals(CommRat::from_poly(det))) {
            detail = "ratio law failed on matrix " + std::to_string(i);
            return false;
        }
    }
    const double secs = seconds_since(start);
    detail = "30 matrices, k in {1,2,3,4}, exact, " + std::to_string(secs) + " s";
    return secs < 180.0;
}

bool criterion_closure_calculus(std::string& detail) {
    ExprStore store;
    SplitMix rng(4004);
    EqConfig cfg;
    cfg.seed = 7;

    for (int i = 0; i < 10; ++i) {
        const VMatrix m = random_invertible_vmatrix(rng, 1 + static_cast<int>(rng.next_in(0, 1)));
        const VMatrix n = random_invertible_vmatrix(rng, 1 + static_cast<int>(rng.next_in(0, 1)));
        const Decomposition dm = decompose(store, m);
        const Decomposition dn = decompose(store, n);
        const CommRat pm = store.commutativize(dm.delta);
        const CommRat pn = store.commutativize(dn.delta);

        const auto [pi, dpi] = closure_inverse(store, m, dm);
        if (!store.commutativize(dpi.delta).equals(pm.inv())) {
            detail = "inverse closure commutative check failed at " + std::to_string(i);
            return false;
        }
        const NCExpr independent_inv = decompose(store, pi).delta;
        if (eq_nc(store, independent_inv, store.normalize(store.inv(dm.delta)), cfg).distinct()) {
            detail = "inverse closure eq check failed at " + std::to_string(i);
            return false;
        }

        const auto [pp, dpp] = closure_product(store, m, n, dm, dn);
        if (!store.commutativize(dpp.delta).equals(-(pn * pm))) {
            detail = "product closure commutative check failed at " + std::to_string(i);
            return false;
        }
        const NCExpr target_prod = store.normalize(store.neg(store.mul(dn.delta, dm.delta)));
        if (eq_nc(store, decompose(store, pp).delta, target_prod, cfg).distinct()) {
            detail = "product closure eq check failed at " + std::to_string(i);
            return false;
        }

        if (!(pm + pn).is_zero()) {
            const auto [ps, dps] = closure_sum(store, m, n, dm, dn);
            if (!store.commutativize(dps.delta).equals(pm + pn)) {
                detail = "sum closure commutative check failed at " + std::to_string(i);
                return false;
            }
            const NCExpr target_sum = store.normalize(store.add(dm.delta, dn.delta));
            if (eq_nc(store, decompose(store, ps).delta, target_sum, cfg).distinct()) {
                detail = "sum closure eq check failed at " + std::to_string(i);
                return false;
            }
        }
    }

    // order-sensitivity probe: delta of [[x]] x [[y]] is -yx, not -xy
    const VMatrix mx = vmatrix_from_json(R"({"entries": [["x"]]})");
    const VMatrix my = vmatrix_from_json(R"({"entries": [["y"]]})");
    const auto [p, dp] =
        closure_product(store, mx, my, decompose(store, mx), decompose(store, my));
    const NCExpr minus_yx =
        store.normalize(store.neg(store.mul(store.var_y(), store.var_x())));
    const NCExpr minus_xy =
        store.normalize(store.neg(store.mul(store.var_x(), store.var_y())));
    if (eq_nc(store, dp.delta, minus_yx, cfg).distinct()) {
        detail = "probe: delta is not -yx";
        return false;
    }
    if (eq_nc(store, dp.delta, minus_xy, cfg).tag != EqVerdict::Tag::NCDistinct) {
        detail = "probe: delta not distinguished from -xy";
        return false;
    }
    detail = "10 pairs plus the order probe, zero distinct";
    return true;
}

bool criterion_matrix_inverse(std::string& detail) {
    const auto start = Clock::now();
    ExprStore store;
    EqConfig cfg;
    cfg.seed = 7;
    // Three trials per size keep the whole suite inside the desk-scale
    // budget; the identity must survive every one of them at both sizes.
    cfg.trials = 3;
    const auto matrices = criterion5_matrices();
    for (std::size_t idx = 0; idx < matrices.size(); ++idx) {
        const VMatrix& m = matrices[idx];
        const int k = m.size();
        const auto inv = nc_inverse(store, m);
        std::vector<std::pair<NCExpr, NCExpr>> pairs;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                NCExpr acc = store.constant(0);
                for (int l = 0; l < k; ++l)
                    acc = store.add(acc, store.mul(m.at(i, l).to_expr(store), inv[l][j]));
                pairs.emplace_back(store.normalize(acc), store.constant(i == j ? 1 : 0));
            }
        for (const auto& v : eq_nc_pairs(store, pairs, cfg))
            if (v.distinct()) {
                detail = "identity check failed on matrix " + std::to_string(idx);
                return false;
            }
    }
    detail = "30 matrices, M * M^-1 = Id entrywise, zero distinct, " +
             std::to_string(seconds_since(start)) + " s";
    return true;
}

bool criterion_determinism(std::string& detail) {
    ExprStore store;
    EqConfig cfg;
    cfg.seed = 1;
    const NCExpr lhs = parse_nc(store, "x*y");
    const NCExpr rhs = parse_nc(store, "y*x");
    const EqVerdict v = eq_nc(store, lhs, rhs, cfg);
    if (v.tag != EqVerdict::Tag::NCDistinct || !replay_witness(store, lhs, rhs, v)) {
        detail = "witness replay failed";
        return false;
    }
    const EqVerdict again = eq_nc(store, lhs, rhs, cfg);
    if (v.witness_json() != again.witness_json()) {
        detail = "witness not stable across runs";
        return false;
    }

    run_suite_once();
    const CliRun second = cli({"cremona", "verify", "--suite", "paper", "--seed", "7"});
    if (second.out != g_suite_report) {
        detail = "suite reports differ between runs";
        return false;
    }
    detail = "replayed witness and byte-identical suite reports";
    return true;
}

bool criterion_parser_round_trip(std::string& detail) {
    ExprStore store;
    SplitMix rng(5005);
    for (int i = 0; i < 100; ++i) {
        const NCExpr e = store.normalize(random_expr(store, rng, 5));
        if (parse_nc(store, print_nc(e)) != e) {
            detail = "round trip failed: " + print_nc(e);
            return false;
        }
    }

    // the three documented command fixtures
    run_suite_once();
    if (g_suite_exit != 0) {
        detail = "cremona verify fixture exited " + std::to_string(g_suite_exit);
        return false;
    }
    const CliRun eq = cli({"eq", "x*y", "y*x", "--seed", "1"});
    if (eq.code == 0 || nlohmann::json::parse(eq.out)["verdict"] != "nc_distinct") {
        detail = "eq fixture did not refute";
        return false;
    }
    {
        std::ofstream f("/tmp/nccalc_acceptance_m2.json");
        f << R"({"entries": [["x","1"],["1","y"]]})";
    }
    const CliRun delta = cli({"delta", "--matrix", "/tmp/nccalc_acceptance_m2.json"});
    const auto dj = nlohmann::json::parse(delta.out);
    if (delta.code != 0 || dj["delta"] != "y - inv(x)" || dj["comm"] != "(x*y-1)/(x)") {
        detail = "delta fixture mismatch";
        return false;
    }
    detail = "100 round trips and documented fixture exit codes";
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1 kernel-law", criterion_kernel_law},
        {"2 noncommutativity-certificate", criterion_commutator_certificate},
        {"3 homomorphism-battery", criterion_homomorphism_battery},
        {"4 relation-suite", criterion_relation_suite},
        {"5 delta-ratio-law", criterion_ratio_law},
        {"6 closure-calculus", criterion_closure_calculus},
        {"7 matrix-inverse-contract", criterion_matrix_inverse},
        {"8 determinism-witness-replay", criterion_determinism},
        {"9 parser-round-trip", criterion_parser_round_trip},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s  %s  (%s)\n", ok ? "PASS" : "FAIL", c.name.c_str(), detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
