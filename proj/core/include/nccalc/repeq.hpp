#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nccalc/ncexpr.hpp"
#include "nccalc/series.hpp"

namespace nccalc {

/// One evaluation environment for the matrix-series representation
/// x -> x*Id + eps*S, y -> y*Id + eps*T with integer matrices S, T.
struct RepEnv {
    int k = 2;
    int order = 4;
    std::vector<std::vector<long>> s;
    std::vector<std::vector<long>> t;
    std::uint64_t seed = 0;

    /// Entries of S and T drawn uniformly from [-bound, bound], derived
    /// deterministically from (master_seed, k, trial).
    static RepEnv derive(std::uint64_t master_seed, int k, int order, long bound, int trial);

    std::string to_json() const;
    static RepEnv from_json(const std::string& text);
};

/// Homomorphic evaluation of a gated expression in the environment. Total on
/// gated expressions: every inverse has scalar, nonzero constant term.
SeriesMatrix represent(NCExpr e, const RepEnv& env);

/// Shared-cache variant: all expressions are evaluated against one
/// environment with one DAG memo, so common subterms are computed once.
std::vector<SeriesMatrix> represent_many(ExprStore& store, const std::vector<NCExpr>& exprs,
                                         const RepEnv& env);

struct EqConfig {
    std::vector<int> sizes{2, 3};
    int order = 4;
    int trials = 10;
    long bound = 3;
    std::uint64_t seed = 0;
};

/// Outcome of the three-tier equality engine. Distinct verdicts are
/// certificates; ProbablyEqual is not a proof.
struct EqVerdict {
    enum class Tag { CommDistinct, NCDistinct, ProbablyEqual };

    Tag tag = Tag::ProbablyEqual;
    int trials_performed = 0;

    // CommDistinct: the nonzero phi-difference.
    CommRat comm_difference;

    // NCDistinct: a replayable witness.
    RepEnv witness_env;
    int witness_row = 0;
    int witness_col = 0;
    int witness_epsilon_degree = 0;

    bool distinct() const { return tag != Tag::ProbablyEqual; }

    /// {k, N, seed, S, T, position, epsilon_degree}
    std::string witness_json() const;
};

/// Certified refuter with probabilistic acceptance:
/// 1. differing commutativizations -> CommDistinct;
/// 2. else scan (size, trial) in ascending order, derive an environment per
///    trial, compare representations; first discrepancy -> NCDistinct with
///    the lowest witness;
/// 3. else ProbablyEqual.
EqVerdict eq_nc(ExprStore& store, NCExpr e1, NCExpr e2, const EqConfig& cfg);

/// Batch form of eq_nc: one verdict per pair, all pairs sharing
/// representation caches per trial. Witnesses are per pair and identical to
/// the ones the single-pair form would report.
std::vector<EqVerdict> eq_nc_pairs(ExprStore& store,
                                   const std::vector<std::pair<NCExpr, NCExpr>>& pairs,
                                   const EqConfig& cfg);

/// Re-runs a reported NCDistinct witness; true iff the identical discrepancy
/// (same position, same epsilon degree, unequal coefficients) reappears.
bool replay_witness(ExprStore& store, NCExpr e1, NCExpr e2, const EqVerdict& verdict);

}  // namespace nccalc
