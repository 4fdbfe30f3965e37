#include "nccalc/cremona.hpp"

namespace nccalc {

namespace {

void require_univariate(const CommRat& e, const char* which) {
    if (e.num().degree_y() > 0 || e.den().degree_y() > 0)
        throw NcError("NonUnivariateEntry",
                      std::string("GL2 entry ") + which + " depends on y");
}

/// x^k as a left-associated product.
NCExpr x_power(ExprStore& store, int k) {
    if (k == 0) return store.constant(1);
    NCExpr acc = store.var_x();
    for (int i = 1; i < k; ++i) acc = store.mul(acc, store.var_x());
    return acc;
}

NCExpr embed_x_poly(ExprStore& store, const Poly2& p) {
    NCExpr acc = store.constant(0);
    for (const auto& [m, c] : p.terms()) {
        NCExpr term = x_power(store, m.dx);
        if (c != 1) term = store.mul(store.constant(c), term);
        acc = store.add(acc, term);
    }
    return store.normalize(acc);
}

/// Univariate rational function of x as an expression: polynomial numerator
/// times one guarded inversion of the denominator. Expressions in x alone
/// commute with each other, so the placement among themselves is immaterial.
NCExpr embed_x_rat(ExprStore& store, const CommRat& f) {
    const CommRat r = f.reduced();
    const NCExpr num = embed_x_poly(store, r.num());
    if (r.den().is_constant() && r.den().constant_term() == 1) return num;
    return store.normalize(store.mul(num, store.inv(embed_x_poly(store, r.den()))));
}

}  // namespace

GL2Rat::GL2Rat(CommRat p, CommRat q, CommRat r, CommRat s)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {
    require_univariate(p_, "p");
    require_univariate(q_, "q");
    require_univariate(r_, "r");
    require_univariate(s_, "s");
    if ((p_ * s_ - q_ * r_).is_zero())
        throw SingularMatrix("GL2 matrix has zero determinant");
}

GL2Rat GL2Rat::identity() {
    return GL2Rat(CommRat(Rat(1)), CommRat(), CommRat(), CommRat(Rat(1)));
}

GL2Rat GL2Rat::operator*(const GL2Rat& o) const {
    return GL2Rat(p_ * o.p_ + q_ * o.r_, p_ * o.q_ + q_ * o.s_,
                  r_ * o.p_ + s_ * o.r_, r_ * o.q_ + s_ * o.s_);
}

NCAuto identity_auto(ExprStore& store) { return {store.var_x(), store.var_y()}; }

NCAuto t_auto(ExprStore& store, const GL2Rat& a) {
    const NCExpr y = store.var_y();
    const NCExpr den = store.normalize(store.add(store.mul(y, embed_x_rat(store, a.r())),
                                                 embed_x_rat(store, a.s())));
    const NCExpr num = store.normalize(store.add(store.mul(y, embed_x_rat(store, a.p())),
                                                 embed_x_rat(store, a.q())));
    return {store.var_x(), store.normalize(store.mul(store.inv(den), num))};
}

NCAuto p_auto(ExprStore& store, const GL2Rat& a) {
    const NCExpr y = store.var_y();
    const NCExpr den = store.normalize(store.add(store.mul(embed_x_rat(store, a.r()), y),
                                                 embed_x_rat(store, a.s())));
    const NCExpr num = store.normalize(store.add(store.mul(embed_x_rat(store, a.p()), y),
                                                 embed_x_rat(store, a.q())));
    return {store.var_x(), store.normalize(store.mul(num, store.inv(den)))};
}

NCAuto tau_auto(ExprStore& store) { return {store.var_y(), store.var_x()}; }

NCAuto inner_auto(ExprStore& store, NCExpr r) {
    const NCExpr rinv = store.inv(r);  // gates r
    return {store.normalize(store.mul(store.mul(r, store.var_x()), rinv)),
            store.normalize(store.mul(store.mul(r, store.var_y()), rinv))};
}

NCExpr act(ExprStore& store, const NCAuto& f, NCExpr e) {
    return store.normalize(store.substitute(e, f.img_x, f.img_y));
}

NCAuto compose(ExprStore& store, const NCAuto& f, const NCAuto& g) {
    return {act(store, g, f.img_x), act(store, g, f.img_y)};
}

NCAuto gen_to_auto(ExprStore& store, const CremonaGen& g) {
    if (std::holds_alternative<GenTau>(g)) return tau_auto(store);
    if (const auto* t = std::get_if<GenT>(&g)) return t_auto(store, t->a);
    if (const auto* p = std::get_if<GenP>(&g)) return p_auto(store, p->a);
    return inner_auto(store, std::get<GenInner>(g).r);
}

NCAuto word_to_auto(ExprStore& store, const CremonaWord& w) {
    NCAuto acc = identity_auto(store);
    for (const auto& g : w) acc = compose(store, acc, gen_to_auto(store, g));
    return acc;
}

std::pair<EqVerdict, EqVerdict> is_inner_with(ExprStore& store, const NCAuto& f, NCExpr r,
                                              const EqConfig& cfg) {
    const NCAuto conj = inner_auto(store, r);
    auto verdicts = eq_nc_pairs(
        store, {{f.img_x, conj.img_x}, {f.img_y, conj.img_y}}, cfg);
    return {verdicts[0], verdicts[1]};
}

CommAuto comm_shadow(ExprStore& store, const NCAuto& f) {
    return {store.commutativize(f.img_x), store.commutativize(f.img_y)};
}

CommAuto comm_identity() { return {CommRat::var_x(), CommRat::var_y()}; }

CommAuto comm_compose(const CommAuto& f, const CommAuto& g) {
    return {f.fx.subst(g.fx, g.fy), f.fy.subst(g.fx, g.fy)};
}

CommAuto comm_of_gen(const CremonaGen& g, ExprStore& store) {
    if (std::holds_alternative<GenTau>(g)) return {CommRat::var_y(), CommRat::var_x()};
    if (const auto* t = std::get_if<GenT>(&g)) {
        const CommRat y = CommRat::var_y();
        return {CommRat::var_x(),
                (t->a.p() * y + t->a.q()) * (t->a.r() * y + t->a.s()).inv()};
    }
    if (const auto* p = std::get_if<GenP>(&g)) {
        const CommRat y = CommRat::var_y();
        return {CommRat::var_x(),
                (p->a.p() * y + p->a.q()) * (p->a.r() * y + p->a.s()).inv()};
    }
    (void)store;
    return comm_identity();  // inner conjugations act trivially on Q(x,y)
}

CommAuto comm_of_word(ExprStore& store, const CremonaWord& w) {
    CommAuto acc = comm_identity();
    for (const auto& g : w) acc = comm_compose(acc, comm_of_gen(g, store));
    return acc;
}

namespace {

bool shadows_equal(const CommAuto& a, const CommAuto& b) {
    return a.fx.equals(b.fx) && a.fy.equals(b.fy);
}

RelationCheck check_against(ExprStore& store, std::string label, const NCAuto& got,
                            const NCAuto& want, const CommAuto& classical,
                            const EqConfig& cfg) {
    RelationCheck c;
    c.label = std::move(label);
    auto verdicts =
        eq_nc_pairs(store, {{got.img_x, want.img_x}, {got.img_y, want.img_y}}, cfg);
    c.verdict_x = verdicts[0];
    c.verdict_y = verdicts[1];
    c.shadow_exact = shadows_equal(comm_shadow(store, got), classical) &&
                     shadows_equal(comm_shadow(store, want), classical);
    return c;
}

CommRat random_x_poly(SplitMix& rng, int max_deg, long bound, bool nonzero) {
    for (;;) {
        Poly2 p;
        for (int d = 0; d <= max_deg; ++d) {
            const long c = rng.next_in(-bound, bound);
            if (c != 0) p.add_term({d, 0}, Rat(c));
        }
        if (!nonzero || !p.is_zero()) return CommRat::from_poly(p);
    }
}

GL2Rat random_gl2_poly(SplitMix& rng, int max_deg, long bound) {
    for (;;) {
        const CommRat p = random_x_poly(rng, max_deg, bound, false);
        const CommRat q = random_x_poly(rng, max_deg, bound, false);
        const CommRat r = random_x_poly(rng, max_deg, bound, false);
        const CommRat s = random_x_poly(rng, max_deg, bound, false);
        if (!(p * s - q * r).is_zero()) return GL2Rat(p, q, r, s);
    }
}

GL2Rat random_gl2_const(SplitMix& rng, long bound) {
    for (;;) {
        const Rat a(rng.next_in(-bound, bound));
        const Rat b(rng.next_in(-bound, bound));
        const Rat c(rng.next_in(-bound, bound));
        const Rat d(rng.next_in(-bound, bound));
        if (a * d - b * c != 0)
            return GL2Rat(CommRat(a), CommRat(b), CommRat(c), CommRat(d));
    }
}

}  // namespace

SuiteReport verify_relation_suite(ExprStore& store, const SuiteConfig& cfg) {
    SuiteReport report;
    SplitMix rng(cfg.sample_seed);
    const NCExpr x = store.var_x();
    const NCExpr y = store.var_y();

    {
        RelationReport r1{"R1 tau^2 = id", {}};
        const NCAuto sq = compose(store, tau_auto(store), tau_auto(store));
        r1.checks.push_back(check_against(store, "tau.tau", sq, identity_auto(store),
                                          comm_identity(), cfg.eq));
        report.relations.push_back(std::move(r1));
    }

    {
        RelationReport r2{"R2 t_a t_b = t_ab", {}};
        for (int i = 0; i < cfg.n_products; ++i) {
            const GL2Rat a = random_gl2_poly(rng, 2, 3);
            const GL2Rat b = random_gl2_poly(rng, 2, 3);
            const CremonaWord w{GenT{a}, GenT{b}};
            const NCAuto lhs = word_to_auto(store, w);
            const NCAuto rhs = t_auto(store, a * b);
            r2.checks.push_back(check_against(store, "pair " + std::to_string(i), lhs, rhs,
                                              comm_of_word(store, w), cfg.eq));
        }
        report.relations.push_back(std::move(r2));
    }

    {
        RelationReport r3{"R3 scalar t_d inner by d(x)^-1", {}};
        for (int i = 0; i < cfg.n_scalars; ++i) {
            const CommRat d = random_x_poly(rng, 2, 3, true);
            const NCAuto td = t_auto(store, GL2Rat(d, CommRat(), CommRat(), d));
            // conjugator: d(x)^-1 embedded as an expression
            const NCExpr d_inv = store.normalize(store.inv(embed_x_rat(store, d)));
            RelationCheck c;
            c.label = "scalar " + std::to_string(i);
            auto [vx, vy] = is_inner_with(store, td, d_inv, cfg.eq);
            c.verdict_x = vx;
            c.verdict_y = vy;
            c.shadow_exact = shadows_equal(comm_shadow(store, td), comm_identity());
            r3.checks.push_back(std::move(c));
        }
        report.relations.push_back(std::move(r3));
    }

    {
        RelationReport r4{"R4 tau t_m tau moves x by m", {}};
        for (int i = 0; i < cfg.n_conjugated; ++i) {
            const GL2Rat m = random_gl2_const(rng, 3);
            const CremonaWord w{GenTau{}, GenT{m}, GenTau{}};
            const NCAuto lhs = word_to_auto(store, w);
            // ((c x + d)^-1 (a x + b), y) with m = (a b; c d)
            const NCExpr den = store.normalize(
                store.add(store.mul(embed_x_rat(store, m.r()), x), embed_x_rat(store, m.s())));
            const NCExpr num = store.normalize(
                store.add(store.mul(embed_x_rat(store, m.p()), x), embed_x_rat(store, m.q())));
            const NCAuto rhs{store.normalize(store.mul(store.inv(den), num)), y};
            r4.checks.push_back(check_against(store, "matrix " + std::to_string(i), lhs, rhs,
                                              comm_of_word(store, w), cfg.eq));
        }
        report.relations.push_back(std::move(r4));
    }

    {
        RelationReport r5{"R5 a^-1 (tau e)^3 inner by x^-1 y", {}};
        const GL2Rat swap(CommRat(), CommRat(Rat(1)), CommRat(Rat(1)), CommRat());
        const GL2Rat e_mat(CommRat(), CommRat::var_x(), CommRat(Rat(1)), CommRat());
        const CremonaWord a_word{GenTau{}, GenT{swap}, GenTau{}, GenT{swap}};
        const NCAuto a_auto = word_to_auto(store, a_word);

        // the composite realizing a: (x, y) -> (x^-1, y^-1)
        const NCAuto a_target{store.inv(x), store.inv(y)};
        r5.checks.push_back(check_against(store, "a = (x^-1, y^-1)", a_auto, a_target,
                                          comm_of_word(store, a_word), cfg.eq));

        CremonaWord full = a_word;  // a^-1 = a
        for (int i = 0; i < 3; ++i) {
            full.push_back(GenTau{});
            full.push_back(GenT{e_mat});
        }
        const NCAuto lifted = word_to_auto(store, full);

        // displayed images: (x^-1 y x y^-1 x, x^-1 y x)
        const NCExpr xi = store.inv(x);
        const NCExpr yi = store.inv(y);
        const NCAuto target{
            store.normalize(
                store.mul(store.mul(store.mul(store.mul(xi, y), x), yi), x)),
            store.normalize(store.mul(store.mul(xi, y), x))};
        r5.checks.push_back(check_against(store, "displayed images", lifted, target,
                                          comm_of_word(store, full), cfg.eq));

        RelationCheck inner_check;
        inner_check.label = "conjugation by x^-1 y";
        const NCExpr r = store.normalize(store.mul(xi, y));
        auto [vx, vy] = is_inner_with(store, lifted, r, cfg.eq);
        inner_check.verdict_x = vx;
        inner_check.verdict_y = vy;
        inner_check.shadow_exact =
            shadows_equal(comm_shadow(store, lifted), comm_identity());
        r5.checks.push_back(std::move(inner_check));
        report.relations.push_back(std::move(r5));
    }

    {
        RelationReport r6{"R6 reversal duality of t_a and p_a", {}};
        for (int i = 0; i < cfg.n_duality; ++i) {
            const GL2Rat a = random_gl2_poly(rng, 2, 3);
            const NCAuto ta = t_auto(store, a);
            const NCAuto pa = p_auto(store, a);
            RelationCheck c;
            c.label = "matrix " + std::to_string(i);
            auto verdicts = eq_nc_pairs(
                store,
                {{store.normalize(store.reverse(ta.img_x)), pa.img_x},
                 {store.normalize(store.reverse(ta.img_y)), pa.img_y}},
                cfg.eq);
            c.verdict_x = verdicts[0];
            c.verdict_y = verdicts[1];
            // phi is blind to reversal, so both sides shadow identically.
            c.shadow_exact =
                store.commutativize(ta.img_y).equals(store.commutativize(pa.img_y));
            r6.checks.push_back(std::move(c));
        }
        report.relations.push_back(std::move(r6));
    }

    return report;
}

int RelationReport::count(EqVerdict::Tag tag) const {
    int n = 0;
    for (const auto& c : checks) {
        if (c.verdict_x.tag == tag) ++n;
        if (c.verdict_y.tag == tag) ++n;
    }
    return n;
}

bool RelationReport::passed() const {
    for (const auto& c : checks)
        if (!c.passed()) return false;
    return true;
}

bool SuiteReport::passed() const {
    for (const auto& r : relations)
        if (!r.passed()) return false;
    return true;
}

}  // namespace nccalc
