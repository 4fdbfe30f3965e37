#include "doctest.h"
#include "helpers.hpp"
#include "nccalc/text.hpp"

using namespace nccalc;
using namespace nccalc::testing;

namespace {

RepEnv elementary_env(int order) {
    // S = E12, T = E21 at k = 2
    RepEnv env;
    env.k = 2;
    env.order = order;
    env.s = {{0, 1}, {0, 0}};
    env.t = {{0, 0}, {1, 0}};
    env.seed = 0;
    return env;
}

TruncSeries scalar_series(int order, std::initializer_list<CommRat> coeffs) {
    TruncSeries s(order);
    int i = 0;
    for (const auto& c : coeffs) s.at(i++) = c;
    return s;
}

}  // namespace

TEST_CASE("series arithmetic truncates") {
    const CommRat one{Rat(1)};
    const TruncSeries a = scalar_series(2, {one, one});       // 1 + eps
    const TruncSeries b = scalar_series(2, {one, -one});      // 1 - eps
    const TruncSeries prod = a * b;                           // 1 - eps^2
    CHECK(prod.at(0).equals(one));
    CHECK(prod.at(1).is_zero());
    CHECK(prod.at(2).equals(-one));
}

TEST_CASE("series inverse matches the geometric expansion") {
    // (x + eps s)^-1 = x^-1 - eps s x^-2 + eps^2 s^2 x^-3
    const CommRat x = CommRat::var_x();
    const CommRat s{Rat(5)};
    const TruncSeries series = scalar_series(2, {x, s});
    const TruncSeries inv = series.inv();
    CommRat power = x.inv();
    for (int k = 0; k <= 2; ++k) {
        CommRat expected = power;
        for (int j = 0; j < k; ++j) expected = expected * (-s) * x.inv();
        CHECK(inv.at(k).equals(expected));
        // expected at k: (-s)^k x^-(k+1), straight from the geometric series
    }
    CHECK((series * inv).at(0).equals(CommRat(Rat(1))));
    CHECK((series * inv).at(1).is_zero());
    CHECK((series * inv).at(2).is_zero());

    const TruncSeries no_unit = scalar_series(2, {CommRat(), x});
    CHECK_THROWS_AS(no_unit.inv(), NonUnitConstantTerm);
}

TEST_CASE("matrix inverse over truncated series") {
    const SeriesMatrix id = SeriesMatrix::identity(3, 3);
    CHECK(mat_inverse(id).equals(id));

    ExprStore store;
    const RepEnv env = RepEnv::derive(9, 2, 3, 3, 0);
    const SeriesMatrix mx = represent(store.var_x(), env);
    CHECK((mat_inverse(mx) * mx).equals(SeriesMatrix::identity(2, 3)));
    CHECK((mx * mat_inverse(mx)).equals(SeriesMatrix::identity(2, 3)));

    SeriesMatrix singular(2, 2);  // zero constant term
    singular.at(0, 0).at(1) = CommRat(Rat(1));
    singular.at(1, 1).at(1) = CommRat(Rat(1));
    CHECK_THROWS_AS(mat_inverse(singular), SingularConstantTerm);

    // non-scalar but invertible constant term takes the elimination path
    SeriesMatrix general(2, 2);
    general.at(0, 0).at(0) = CommRat::var_x();
    general.at(0, 1).at(0) = CommRat(Rat(1));
    general.at(1, 1).at(0) = CommRat::var_y();
    general.at(1, 0).at(1) = CommRat(Rat(1));
    CHECK((general * mat_inverse(general)).equals(SeriesMatrix::identity(2, 2)));
}

TEST_CASE("representation of the generators") {
    ExprStore store;
    const RepEnv env = elementary_env(2);
    const SeriesMatrix mx = represent(store.var_x(), env);

    // x Id + eps E12, bit for bit
    CHECK(mx.at(0, 0).at(0).equals(CommRat::var_x()));
    CHECK(mx.at(1, 1).at(0).equals(CommRat::var_x()));
    CHECK(mx.at(0, 1).at(1).equals(CommRat(Rat(1))));
    CHECK(mx.at(0, 1).at(0).is_zero());
    CHECK(mx.at(1, 0).at(1).is_zero());
    CHECK(mx.at(0, 0).at(1).is_zero());
}

TEST_CASE("the commutator represents as eps^2 diag(1,-1)") {
    ExprStore store;
    const NCExpr x = store.var_x();
    const NCExpr y = store.var_y();
    const NCExpr commutator = store.sub(store.mul(x, y), store.mul(y, x));
    const SeriesMatrix rep = represent(commutator, elementary_env(2));

    const CommRat one{Rat(1)};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int d = 0; d <= 2; ++d) {
                const CommRat& c = rep.at(i, j).at(d);
                if (i == 0 && j == 0 && d == 2) CHECK(c.equals(one));
                else if (i == 1 && j == 1 && d == 2) CHECK(c.equals(-one));
                else CHECK(c.is_zero());
            }
}

TEST_CASE("constant term of a representation is the commutativization") {
    ExprStore store;
    SplitMix rng(3);
    for (int i = 0; i < 8; ++i) {
        const NCExpr e = random_expr(store, rng, 4);
        const RepEnv env = RepEnv::derive(rng.next(), 2, 3, 3, 0);
        const SeriesMatrix rep = represent(e, env);
        const CommRat phi = store.commutativize(e);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                if (r == c) CHECK(rep.at(r, c).at(0).equals(phi));
                else CHECK(rep.at(r, c).at(0).is_zero());
            }
    }
}

TEST_CASE("representation is a homomorphism") {
    ExprStore store;
    SplitMix rng(11);
    for (int i = 0; i < 6; ++i) {
        const NCExpr a = random_expr(store, rng, 3);
        const NCExpr b = random_expr(store, rng, 3);
        const RepEnv env = RepEnv::derive(rng.next(), 2, 3, 3, 0);
        const auto reps = represent_many(store, {a, b, store.add(a, b), store.mul(a, b)}, env);
        CHECK(reps[2].equals(reps[0] + reps[1]));
        CHECK(reps[3].equals(reps[0] * reps[1]));
    }
    // inverse law
    const NCExpr s = store.add(store.mul(store.var_x(), store.var_y()), store.constant(1));
    const RepEnv env = RepEnv::derive(77, 3, 4, 3, 0);
    const auto reps = represent_many(store, {s, store.inv(s)}, env);
    CHECK((reps[0] * reps[1]).equals(SeriesMatrix::identity(3, 4)));
    CHECK((reps[1] * reps[0]).equals(SeriesMatrix::identity(3, 4)));
}

TEST_CASE("equality engine refutes and accepts") {
    ExprStore store;
    const NCExpr x = store.var_x();
    const NCExpr y = store.var_y();
    EqConfig cfg;
    cfg.seed = 1;

    // xy != yx, certified by a witness environment
    const EqVerdict v = eq_nc(store, store.mul(x, y), store.mul(y, x), cfg);
    CHECK(v.tag == EqVerdict::Tag::NCDistinct);
    CHECK(replay_witness(store, store.mul(x, y), store.mul(y, x), v));

    // phi separates x from y without any trial
    const EqVerdict cv = eq_nc(store, x, y, cfg);
    CHECK(cv.tag == EqVerdict::Tag::CommDistinct);
    CHECK_FALSE(cv.comm_difference.is_zero());

    CHECK_FALSE(eq_nc(store, store.normalize(store.inv(store.inv(x))), x, cfg).distinct());
    CHECK_FALSE(eq_nc(store, store.add(x, y), store.add(y, x), cfg).distinct());
}

TEST_CASE("witness replay reproduces the discrepancy bit for bit") {
    ExprStore store;
    SplitMix rng(19);
    EqConfig cfg;
    cfg.seed = 5;
    int found = 0;
    for (int i = 0; i < 20 && found < 5; ++i) {
        // ab and ba commutativize identically but rarely agree in the algebra
        const NCExpr u = random_expr(store, rng, 3);
        const NCExpr w = random_expr(store, rng, 3);
        const NCExpr a = store.mul(u, w);
        const NCExpr b = store.mul(w, u);
        const EqVerdict v = eq_nc(store, a, b, cfg);
        if (v.tag != EqVerdict::Tag::NCDistinct) continue;
        ++found;
        CHECK(replay_witness(store, a, b, v));
        // the witness environment re-derives from its recorded seed data
        const SeriesMatrix ra = represent(a, v.witness_env);
        const SeriesMatrix rb = represent(b, v.witness_env);
        CHECK_FALSE(ra.at(v.witness_row, v.witness_col)
                        .at(v.witness_epsilon_degree)
                        .equals(rb.at(v.witness_row, v.witness_col).at(v.witness_epsilon_degree)));
    }
    CHECK(found > 0);
}

TEST_CASE("verdicts are deterministic and monotone") {
    ExprStore store;
    const NCExpr x = store.var_x();
    const NCExpr y = store.var_y();
    const NCExpr lhs = store.mul(x, y);
    const NCExpr rhs = store.mul(y, x);

    EqConfig cfg;
    cfg.seed = 9;
    const EqVerdict v1 = eq_nc(store, lhs, rhs, cfg);
    const EqVerdict v2 = eq_nc(store, lhs, rhs, cfg);
    CHECK(v1.tag == v2.tag);
    CHECK(v1.witness_json() == v2.witness_json());

    // Distinct verdicts survive larger parameters
    EqConfig bigger = cfg;
    bigger.order += 2;
    bigger.trials += 5;
    bigger.sizes = {2, 3, 4};
    CHECK(eq_nc(store, lhs, rhs, bigger).tag == EqVerdict::Tag::NCDistinct);
}

TEST_CASE("witness JSON round-trips through the env parser") {
    RepEnv env = RepEnv::derive(123, 3, 4, 3, 2);
    const RepEnv back = RepEnv::from_json(env.to_json());
    CHECK(back.k == env.k);
    CHECK(back.order == env.order);
    CHECK(back.seed == env.seed);
    CHECK(back.s == env.s);
    CHECK(back.t == env.t);
}
