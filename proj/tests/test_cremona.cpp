#include "doctest.h"
#include "helpers.hpp"
#include "nccalc/text.hpp"

using namespace nccalc;
using namespace nccalc::testing;

namespace {

GL2Rat e_matrix() {
    // (0 x; 1 0)
    return GL2Rat(CommRat(), CommRat::var_x(), CommRat(Rat(1)), CommRat());
}

GL2Rat swap_matrix() { return GL2Rat(CommRat(), CommRat(Rat(1)), CommRat(Rat(1)), CommRat()); }

}  // namespace

TEST_CASE("GL2 entries are univariate and invertible") {
    CHECK_THROWS_AS(GL2Rat(CommRat::var_x(), CommRat(), CommRat(), CommRat()), SingularMatrix);
    CHECK_THROWS_AS(GL2Rat(CommRat::var_y(), CommRat(), CommRat(), CommRat(Rat(1))), NcError);
    const GL2Rat id = GL2Rat::identity();
    const GL2Rat prod = id * e_matrix();
    CHECK(prod.q().equals(CommRat::var_x()));
}

TEST_CASE("t for the e matrix sends y to y^-1 x") {
    ExprStore store;
    const NCAuto e = t_auto(store, e_matrix());
    CHECK(e.img_x == store.var_x());
    CHECK(e.img_y == store.normalize(store.mul(store.inv(store.var_y()), store.var_x())));
}

TEST_CASE("t and p for the swap matrix send y to y^-1") {
    ExprStore store;
    const NCAuto t = t_auto(store, swap_matrix());
    const NCAuto p = p_auto(store, swap_matrix());
    CHECK(t.img_y == store.normalize(store.inv(store.var_y())));
    CHECK_FALSE(eq_nc(store, t.img_y, p.img_y, fast_eq()).distinct());
}

TEST_CASE("identity matrix gives the identity automorphism") {
    ExprStore store;
    const NCAuto t = t_auto(store, GL2Rat::identity());
    CHECK(t.img_x == store.var_x());
    CHECK(t.img_y == store.var_y());
    const NCAuto p = p_auto(store, GL2Rat::identity());
    CHECK(p.img_y == store.var_y());
}

TEST_CASE("tau squares to the identity on node ids") {
    ExprStore store;
    const NCAuto sq = compose(store, tau_auto(store), tau_auto(store));
    CHECK(store.normalize(sq.img_x) == store.var_x());
    CHECK(store.normalize(sq.img_y) == store.var_y());
}

TEST_CASE("inner automorphisms") {
    ExprStore store;
    const NCExpr x = store.var_x();
    const NCExpr y = store.var_y();

    const NCAuto triv = inner_auto(store, store.constant(1));
    CHECK(triv.img_x == x);
    CHECK(triv.img_y == y);

    CHECK_THROWS_AS(inner_auto(store, store.sub(store.mul(x, y), store.mul(y, x))),
                    CommutatorInverse);

    // conjugation by x^-1 y
    const NCExpr r = store.mul(store.inv(x), y);
    const NCAuto conj = inner_auto(store, r);
    const NCExpr tx = parse_nc(store, "inv(x)*y*x*inv(y)*x");
    const NCExpr ty = parse_nc(store, "inv(x)*y*x");
    CHECK_FALSE(eq_nc(store, conj.img_x, tx, fast_eq()).distinct());
    CHECK_FALSE(eq_nc(store, conj.img_y, ty, fast_eq()).distinct());
}

TEST_CASE("the displayed word computations hold") {
    ExprStore store;
    const NCExpr x = store.var_x();
    const NCExpr y = store.var_y();

    // tau e : (x, y) -> (y^-1 x, x)
    const NCAuto te = word_to_auto(store, {GenTau{}, GenT{e_matrix()}});
    CHECK(te.img_x == store.normalize(store.mul(store.inv(y), x)));
    CHECK(te.img_y == x);

    // (tau e)^2 : x -> x^-1 y^-1 x
    const NCAuto te2 = compose(store, te, te);
    CHECK_FALSE(
        eq_nc(store, te2.img_x, parse_nc(store, "inv(x)*inv(y)*x"), fast_eq()).distinct());
    CHECK_FALSE(eq_nc(store, te2.img_y, te.img_x, fast_eq()).distinct());

    // the composite for a: (x, y) -> (x^-1, y^-1)
    const CremonaWord a_word{GenTau{}, GenT{swap_matrix()}, GenTau{}, GenT{swap_matrix()}};
    const NCAuto a = word_to_auto(store, a_word);
    CHECK_FALSE(eq_nc(store, a.img_x, store.inv(x), fast_eq()).distinct());
    CHECK_FALSE(eq_nc(store, a.img_y, store.inv(y), fast_eq()).distinct());

    // a^-1 (tau e)^3 : (x, y) -> (x^-1 y x y^-1 x, x^-1 y x)
    CremonaWord full = a_word;
    for (int i = 0; i < 3; ++i) {
        full.push_back(GenTau{});
        full.push_back(GenT{e_matrix()});
    }
    const NCAuto lifted = word_to_auto(store, full);
    CHECK_FALSE(eq_nc(store, lifted.img_x, parse_nc(store, "inv(x)*y*x*inv(y)*x"), fast_eq())
                    .distinct());
    CHECK_FALSE(
        eq_nc(store, lifted.img_y, parse_nc(store, "inv(x)*y*x"), fast_eq()).distinct());

    // and it is the conjugation by x^-1 y
    auto [vx, vy] = is_inner_with(store, lifted, store.mul(store.inv(x), y), fast_eq());
    CHECK_FALSE(vx.distinct());
    CHECK_FALSE(vy.distinct());
}

TEST_CASE("words compose against the empty word and the identity") {
    ExprStore store;
    const NCAuto id = word_to_auto(store, {});
    CHECK(id.img_x == store.var_x());
    CHECK(id.img_y == store.var_y());

    SplitMix rng(3);
    const NCAuto f = t_auto(store, random_gl2(rng));
    const NCAuto fid = compose(store, f, identity_auto(store));
    CHECK(fid.img_x == store.normalize(f.img_x));
    CHECK(fid.img_y == store.normalize(f.img_y));

    const NCAuto tt = word_to_auto(store, {GenTau{}, GenTau{}});
    CHECK_FALSE(eq_nc(store, tt.img_x, store.var_x(), fast_eq()).distinct());
}

TEST_CASE("composition law for t generators") {
    ExprStore store;
    SplitMix rng(21);
    for (int i = 0; i < 3; ++i) {
        const GL2Rat a = random_gl2(rng);
        const GL2Rat b = random_gl2(rng);
        const NCAuto lhs = word_to_auto(store, {GenT{a}, GenT{b}});
        const NCAuto rhs = t_auto(store, a * b);
        CHECK(store.commutativize(lhs.img_y).equals(store.commutativize(rhs.img_y)));
        CHECK_FALSE(eq_nc(store, lhs.img_y, rhs.img_y, fast_eq()).distinct());
    }
}

TEST_CASE("reversal duality between t and p") {
    ExprStore store;
    SplitMix rng(33);
    for (int i = 0; i < 3; ++i) {
        const GL2Rat a = random_gl2(rng);
        const NCAuto ta = t_auto(store, a);
        const NCAuto pa = p_auto(store, a);
        const NCExpr rev = store.normalize(store.reverse(ta.img_y));
        CHECK_FALSE(eq_nc(store, rev, pa.img_y, fast_eq()).distinct());
    }
}

TEST_CASE("tau is not inner by 1") {
    ExprStore store;
    auto [vx, vy] = is_inner_with(store, tau_auto(store), store.constant(1), fast_eq());
    // the x component moves: tau(x) = y differs from x already under phi
    CHECK(vx.distinct());
    CHECK(vx.tag == EqVerdict::Tag::CommDistinct);
}

TEST_CASE("action of a word on an expression matches stepwise application") {
    ExprStore store;
    SplitMix rng(49);
    for (int i = 0; i < 3; ++i) {
        const CremonaWord w{GenTau{}, GenT{random_gl2(rng)}, GenTau{}};
        const NCExpr e = random_expr(store, rng, 3);
        const NCAuto folded = word_to_auto(store, w);
        NCExpr stepped = e;
        for (const auto& g : w) stepped = act(store, gen_to_auto(store, g), stepped);
        CHECK_FALSE(eq_nc(store, act(store, folded, e), stepped, fast_eq()).distinct());
    }
}

TEST_CASE("inner automorphisms compose against the product of conjugators") {
    ExprStore store;
    SplitMix rng(51);
    const NCExpr r = store.add(store.var_x(), store.constant(1));
    const NCExpr s = store.add(store.mul(store.var_x(), store.var_y()), store.constant(2));
    const NCAuto composed = compose(store, inner_auto(store, r), inner_auto(store, s));
    // the pinned composition order conjugates by s*r
    const NCAuto by_sr = inner_auto(store, store.mul(s, r));
    CHECK_FALSE(eq_nc(store, composed.img_x, by_sr.img_x, fast_eq()).distinct());
    CHECK_FALSE(eq_nc(store, composed.img_y, by_sr.img_y, fast_eq()).distinct());
}

TEST_CASE("commutative shadow of the generators is the classical action") {
    ExprStore store;
    SplitMix rng(55);
    const GL2Rat a = random_gl2(rng);
    const NCAuto ta = t_auto(store, a);
    const CommAuto shadow = comm_shadow(store, ta);
    const CommRat y = CommRat::var_y();
    CHECK(shadow.fx.equals(CommRat::var_x()));
    CHECK(shadow.fy.equals((a.p() * y + a.q()) / (a.r() * y + a.s())));

    // inner conjugations vanish in the shadow
    const NCAuto conj = inner_auto(store, store.add(store.var_x(), store.constant(1)));
    CHECK(comm_shadow(store, conj).fx.equals(CommRat::var_x()));
    CHECK(comm_shadow(store, conj).fy.equals(CommRat::var_y()));
}

TEST_CASE("relation suite passes at reduced size") {
    ExprStore store;
    SuiteConfig cfg;
    cfg.eq = fast_eq();
    cfg.sample_seed = 11;
    cfg.n_products = 2;
    cfg.n_scalars = 2;
    cfg.n_conjugated = 2;
    cfg.n_duality = 2;
    const SuiteReport report = verify_relation_suite(store, cfg);
    CHECK(report.passed());
    CHECK(report.relations.size() == 6);
    for (const auto& r : report.relations) {
        CHECK(r.count(EqVerdict::Tag::CommDistinct) == 0);
        CHECK(r.count(EqVerdict::Tag::NCDistinct) == 0);
    }
}
