#include "nccalc/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "nccalc/text.hpp"

namespace nccalc {

namespace {

using ordered_json = nlohmann::ordered_json;

std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t flag_value) {
    if (seed_opt->count() > 0) return flag_value;
    if (const char* env = std::getenv("NC_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw NcError("FileError", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* verdict_name(EqVerdict::Tag tag) {
    switch (tag) {
        case EqVerdict::Tag::CommDistinct: return "comm_distinct";
        case EqVerdict::Tag::NCDistinct: return "nc_distinct";
        default: return "probably_equal";
    }
}

ordered_json verdict_json(const EqVerdict& v) {
    ordered_json j;
    j["verdict"] = verdict_name(v.tag);
    if (v.tag == EqVerdict::Tag::CommDistinct) {
        j["comm_difference"] = v.comm_difference.str();
    } else if (v.tag == EqVerdict::Tag::NCDistinct) {
        j["witness"] = ordered_json::parse(v.witness_json());
    } else {
        j["trials"] = v.trials_performed;
    }
    return j;
}

ordered_json eq_config_json(const EqConfig& cfg) {
    ordered_json j;
    j["sizes"] = cfg.sizes;
    j["order"] = cfg.order;
    j["trials"] = cfg.trials;
    j["bound"] = cfg.bound;
    j["seed"] = cfg.seed;
    return j;
}

struct Emitter {
    std::ostream& out;
    bool timing;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    int emit(ordered_json j, int exit_code) {
        if (timing) {
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
            j["wall_time_ms"] = ms;
        }
        out << j.dump(2) << "\n";
        return exit_code;
    }
};

ordered_json command_echo(const std::vector<std::string>& args) {
    return ordered_json(args);
}

std::vector<std::pair<int, int>> parse_pivot_flag(const std::string& text) {
    std::vector<std::pair<int, int>> pivots;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto semi = text.find(';', pos);
        const std::string part = text.substr(pos, semi == std::string::npos ? semi : semi - pos);
        const auto comma = part.find(',');
        if (comma == std::string::npos)
            throw SyntaxError(pos, "pivot entries are 'row,col' separated by ';'");
        pivots.emplace_back(std::stoi(part.substr(0, comma)), std::stoi(part.substr(comma + 1)));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return pivots;
}

ordered_json decomposition_json(ExprStore& store, const VMatrix& m, const Decomposition& d) {
    ordered_json j;
    j["delta"] = print_nc(d.delta);
    j["comm"] = store.commutativize(d.delta).str();
    j["det"] = comm_det(m).str();
    j["pivot_minor_det"] = d.pivot_minor_det(m).str();
    ordered_json pv = ordered_json::array();
    for (const auto& [r, c] : d.pivots) pv.push_back({r, c});
    j["pivots"] = pv;
    j["row_perm"] = d.row_perm;
    j["col_perm"] = d.col_perm;
    j["perm_sign"] = d.perm_sign;
    return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact calculator for the noncommutative localization of Q<x,y>", "nccalc"};
    app.require_subcommand(1);
    app.fallthrough();

    bool timing = false;
    app.add_flag("--timing", timing, "include wall time in reports");

    std::string expr_text, expr2_text, word_text, to_text, matrix_path, n_path, rep_path,
        pivots_text, suite_name = "paper";
    int k = 2, order = 4, trials = 10;
    long bound = 3;
    std::uint64_t seed = 0;
    std::vector<int> sizes{2, 3};

    auto* cmd_comm = app.add_subcommand("comm", "commutativization of an expression");
    cmd_comm->add_option("expr", expr_text)->required();

    auto* cmd_eval = app.add_subcommand("eval", "matrix-series representation of an expression");
    cmd_eval->add_option("expr", expr_text)->required();
    cmd_eval->add_option("--k", k, "matrix size");
    cmd_eval->add_option("--order", order, "epsilon truncation order");
    auto* eval_seed = cmd_eval->add_option("--seed", seed, "environment seed");
    cmd_eval->add_option("--rep", rep_path, "replay environment from a witness/env JSON file");

    auto* cmd_eq = app.add_subcommand("eq", "equality engine verdict for two expressions");
    cmd_eq->add_option("lhs", expr_text)->required();
    cmd_eq->add_option("rhs", expr2_text)->required();
    cmd_eq->add_option("--sizes", sizes, "matrix sizes to try")->delimiter(',');
    cmd_eq->add_option("--order", order);
    cmd_eq->add_option("--trials", trials);
    cmd_eq->add_option("--bound", bound);
    auto* eq_seed = cmd_eq->add_option("--seed", seed);

    auto* cmd_cremona = app.add_subcommand("cremona", "Cremona word actions and relation suite");
    auto* cmd_apply = cmd_cremona->add_subcommand("apply", "apply a word to an expression");
    cmd_apply->add_option("--word", word_text)->required();
    cmd_apply->add_option("--to", to_text)->required();
    auto* cmd_verify = cmd_cremona->add_subcommand("verify", "run the relation suite");
    cmd_verify->add_option("--suite", suite_name, "suite name (paper)");
    cmd_verify->add_option("--sizes", sizes)->delimiter(',');
    cmd_verify->add_option("--order", order);
    cmd_verify->add_option("--trials", trials);
    cmd_verify->add_option("--bound", bound);
    auto* verify_seed = cmd_verify->add_option("--seed", seed);

    auto* cmd_delta = app.add_subcommand("delta", "pivoted elimination of a V-matrix");
    cmd_delta->add_option("--matrix", matrix_path)->required();
    cmd_delta->add_option("--pivots", pivots_text, "explicit pivot chain r,c;r,c;... (0-based)");

    auto* cmd_closure = app.add_subcommand("closure", "closure constructions on designated elements");
    auto* cl_inv = cmd_closure->add_subcommand("inv", "bordered matrix inverting delta");
    auto* cl_prod = cmd_closure->add_subcommand("prod", "block matrix for -delta2*delta1");
    auto* cl_sum = cmd_closure->add_subcommand("sum", "block matrix for delta1+delta2");
    for (auto* c : {cl_inv, cl_prod, cl_sum}) c->add_option("--m", matrix_path)->required();
    for (auto* c : {cl_prod, cl_sum}) c->add_option("--n", n_path)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Emitter emitter{out, timing};
    ExprStore store;

    try {
        if (cmd_comm->parsed()) {
            const NCExpr e = parse_nc(store, expr_text);
            ordered_json j;
            j["command"] = command_echo(args);
            j["expr"] = print_nc(e);
            j["comm"] = store.commutativize(e).str();
            return emitter.emit(j, 0);
        }

        if (cmd_eval->parsed()) {
            const NCExpr e = parse_nc(store, expr_text);
            RepEnv env;
            if (!rep_path.empty()) {
                env = RepEnv::from_json(read_file(rep_path));
            } else {
                env = RepEnv::derive(resolve_seed(eval_seed, seed), k, order, 3, 0);
            }
            const SeriesMatrix m = represent(e, env);
            ordered_json j;
            j["command"] = command_echo(args);
            j["expr"] = print_nc(e);
            j["env"] = ordered_json::parse(env.to_json());
            ordered_json rows = ordered_json::array();
            for (int i = 0; i < m.size(); ++i) {
                ordered_json row = ordered_json::array();
                for (int c = 0; c < m.size(); ++c) {
                    ordered_json coeffs = ordered_json::array();
                    for (int d = 0; d <= m.order(); ++d) coeffs.push_back(m.at(i, c).at(d).str());
                    row.push_back(coeffs);
                }
                rows.push_back(row);
            }
            j["matrix"] = rows;
            return emitter.emit(j, 0);
        }

        if (cmd_eq->parsed()) {
            EqConfig cfg;
            cfg.sizes = sizes;
            cfg.order = order;
            cfg.trials = trials;
            cfg.bound = bound;
            cfg.seed = resolve_seed(eq_seed, seed);
            const NCExpr lhs = parse_nc(store, expr_text);
            const NCExpr rhs = parse_nc(store, expr2_text);
            const EqVerdict v = eq_nc(store, lhs, rhs, cfg);
            ordered_json j;
            j["command"] = command_echo(args);
            j["lhs"] = print_nc(lhs);
            j["rhs"] = print_nc(rhs);
            j["config"] = eq_config_json(cfg);
            j.update(verdict_json(v));
            return emitter.emit(j, v.distinct() ? 1 : 0);
        }

        if (cmd_apply->parsed()) {
            const CremonaWord word = parse_word(store, word_text);
            const NCExpr target = parse_nc(store, to_text);
            const NCAuto f = word_to_auto(store, word);
            const NCExpr image = act(store, f, target);
            ordered_json j;
            j["command"] = command_echo(args);
            j["word"] = word_text;
            j["to"] = print_nc(target);
            j["image_x"] = print_nc(f.img_x);
            j["image_y"] = print_nc(f.img_y);
            j["image"] = print_nc(image);
            j["comm"] = store.commutativize(image).str();
            return emitter.emit(j, 0);
        }

        if (cmd_verify->parsed()) {
            if (suite_name != "paper")
                throw NcError("UnknownSuite", "unknown suite: " + suite_name);
            SuiteConfig cfg;
            cfg.eq.sizes = sizes;
            cfg.eq.order = order;
            cfg.eq.trials = trials;
            cfg.eq.bound = bound;
            cfg.eq.seed = resolve_seed(verify_seed, seed);
            cfg.sample_seed = cfg.eq.seed;
            const SuiteReport report = verify_relation_suite(store, cfg);
            ordered_json j;
            j["command"] = command_echo(args);
            j["suite"] = suite_name;
            j["config"] = eq_config_json(cfg.eq);
            ordered_json rels = ordered_json::array();
            for (const auto& r : report.relations) {
                ordered_json jr;
                jr["name"] = r.name;
                jr["checks"] = static_cast<int>(r.checks.size());
                jr["comm_distinct"] = r.count(EqVerdict::Tag::CommDistinct);
                jr["nc_distinct"] = r.count(EqVerdict::Tag::NCDistinct);
                jr["probably_equal"] = r.count(EqVerdict::Tag::ProbablyEqual);
                bool shadows = true;
                for (const auto& c : r.checks) shadows = shadows && c.shadow_exact;
                jr["shadow_exact"] = shadows;
                jr["pass"] = r.passed();
                ordered_json items = ordered_json::array();
                for (const auto& c : r.checks) {
                    ordered_json jc;
                    jc["label"] = c.label;
                    jc["x"] = verdict_name(c.verdict_x.tag);
                    jc["y"] = verdict_name(c.verdict_y.tag);
                    jc["shadow_exact"] = c.shadow_exact;
                    if (c.verdict_x.tag == EqVerdict::Tag::NCDistinct)
                        jc["witness_x"] = ordered_json::parse(c.verdict_x.witness_json());
                    if (c.verdict_y.tag == EqVerdict::Tag::NCDistinct)
                        jc["witness_y"] = ordered_json::parse(c.verdict_y.witness_json());
                    items.push_back(jc);
                }
                jr["items"] = items;
                rels.push_back(jr);
            }
            j["relations"] = rels;
            j["pass"] = report.passed();
            return emitter.emit(j, report.passed() ? 0 : 1);
        }

        if (cmd_delta->parsed()) {
            const VMatrix m = vmatrix_from_json(read_file(matrix_path));
            std::vector<std::pair<int, int>> pivots;
            if (!pivots_text.empty()) pivots = parse_pivot_flag(pivots_text);
            const Decomposition d = decompose(store, m, pivots);
            ordered_json j;
            j["command"] = command_echo(args);
            j["matrix"] = ordered_json::parse(vmatrix_to_json(m));
            j["size"] = m.size();
            j.update(decomposition_json(store, m, d));
            return emitter.emit(j, 0);
        }

        if (cl_inv->parsed() || cl_prod->parsed() || cl_sum->parsed()) {
            const VMatrix m = vmatrix_from_json(read_file(matrix_path));
            const Decomposition dm = decompose(store, m);
            ordered_json j;
            j["command"] = command_echo(args);
            VMatrix p(1);
            Decomposition dp;
            CommRat target;
            if (cl_inv->parsed()) {
                std::tie(p, dp) = closure_inverse(store, m, dm);
                target = store.commutativize(dm.delta).inv();
                j["op"] = "inv";
            } else {
                const VMatrix n = vmatrix_from_json(read_file(n_path));
                const Decomposition dn = decompose(store, n);
                if (cl_prod->parsed()) {
                    std::tie(p, dp) = closure_product(store, m, n, dm, dn);
                    target = -(store.commutativize(dn.delta) * store.commutativize(dm.delta));
                    j["op"] = "prod";
                } else {
                    std::tie(p, dp) = closure_sum(store, m, n, dm, dn);
                    target = store.commutativize(dm.delta) + store.commutativize(dn.delta);
                    j["op"] = "sum";
                }
                j["n"] = ordered_json::parse(vmatrix_to_json(n));
            }
            j["m"] = ordered_json::parse(vmatrix_to_json(m));
            j["P"] = ordered_json::parse(vmatrix_to_json(p));
            j["delta"] = print_nc(dp.delta);
            j["comm"] = store.commutativize(dp.delta).str();
            const bool comm_exact = store.commutativize(dp.delta).equals(target);
            // ratio law on the constructed decomposition of P
            const Poly2 lead = dp.pivot_minor_det(p);
            const CommRat ratio_lhs = store.commutativize(dp.delta) * CommRat::from_poly(lead);
            const bool ratio_ok = ratio_lhs.equals(CommRat::from_poly(comm_det(p)));
            j["checks"] = ordered_json{{"comm_exact", comm_exact}, {"ratio_law", ratio_ok}};
            return emitter.emit(j, comm_exact && ratio_ok ? 0 : 1);
        }

        err << "no command given\n";
        return 2;
    } catch (const NcError& e) {
        ordered_json j;
        j["error"] = ordered_json{{"code", e.code()}, {"message", e.what()}};
        err << j.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        ordered_json j;
        j["error"] = ordered_json{{"code", "Error"}, {"message", e.what()}};
        err << j.dump(2) << "\n";
        return 1;
    }
}

}  // namespace nccalc
