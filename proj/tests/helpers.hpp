#pragma once

#include <vector>

#include "nccalc/cremona.hpp"
#include "nccalc/vmatrix.hpp"

namespace nccalc::testing {

inline Rat random_rat(SplitMix& rng, long bound) {
    return Rat(rng.next_in(-bound, bound));
}

inline Poly2 random_poly(SplitMix& rng, int max_dx, int max_dy, long bound) {
    Poly2 p;
    const int terms = static_cast<int>(rng.next_in(1, 5));
    for (int t = 0; t < terms; ++t) {
        const long c = rng.next_in(-bound, bound);
        if (c != 0)
            p.add_term({static_cast<int>(rng.next_in(0, max_dx)),
                        static_cast<int>(rng.next_in(0, max_dy))},
                       Rat(c));
    }
    return p;
}

inline Poly2 random_nonzero_poly(SplitMix& rng, int max_dx, int max_dy, long bound) {
    for (;;) {
        Poly2 p = random_poly(rng, max_dx, max_dy, bound);
        if (!p.is_zero()) return p;
    }
}

inline CommRat random_commrat(SplitMix& rng, int deg = 2, long bound = 3) {
    return CommRat(random_poly(rng, deg, deg, bound), random_nonzero_poly(rng, deg, deg, bound));
}

/// Random gated expression: every inversion that fails the gate is replaced
/// by its operand, so the result is always a valid element of the algebra.
inline NCExpr random_expr(ExprStore& store, SplitMix& rng, int depth) {
    if (depth <= 0) {
        switch (rng.next_in(0, 3)) {
            case 0: return store.var_x();
            case 1: return store.var_y();
            case 2: return store.constant(random_rat(rng, 3));
            default: return store.var_x();
        }
    }
    switch (rng.next_in(0, 4)) {
        case 0:
            return store.add(random_expr(store, rng, depth - 1), random_expr(store, rng, depth - 1));
        case 1:
            return store.mul(random_expr(store, rng, depth - 1), random_expr(store, rng, depth - 1));
        case 2:
            return store.neg(random_expr(store, rng, depth - 1));
        case 3: {
            const NCExpr inner = random_expr(store, rng, depth - 1);
            try {
                return store.inv(inner);
            } catch (const CommutatorInverse&) {
                return inner;
            }
        }
        default:
            return random_expr(store, rng, depth - 1);
    }
}

/// Monomial word in x, y of the given length with a rational coefficient.
inline NCExpr random_word_term(ExprStore& store, SplitMix& rng, int max_len) {
    NCExpr acc = store.constant(Rat(rng.next_in(1, 3)) * Rat(rng.next_in(0, 1) == 0 ? 1 : -1));
    const int len = static_cast<int>(rng.next_in(1, max_len));
    for (int i = 0; i < len; ++i)
        acc = store.mul(acc, rng.next_in(0, 1) == 0 ? store.var_x() : store.var_y());
    return acc;
}

/// Sum of random monomial words: an element of the free algebra.
inline NCExpr random_monomial_sum(ExprStore& store, SplitMix& rng, int terms, int max_len) {
    NCExpr acc = random_word_term(store, rng, max_len);
    for (int i = 1; i < terms; ++i) acc = store.add(acc, random_word_term(store, rng, max_len));
    return acc;
}

inline VMatrix random_vmatrix(SplitMix& rng, int k, long bound = 2) {
    VMatrix m(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            m.at(i, j) = VEntry{Rat(rng.next_in(-bound, bound)), Rat(rng.next_in(-bound, bound)),
                                Rat(rng.next_in(-bound, bound))};
    return m;
}

inline VMatrix random_invertible_vmatrix(SplitMix& rng, int k, long bound = 2) {
    for (;;) {
        VMatrix m = random_vmatrix(rng, k, bound);
        if (!comm_det(m).is_zero()) return m;
    }
}

inline GL2Rat random_gl2(SplitMix& rng, int deg = 2, long bound = 3) {
    for (;;) {
        Poly2 p = random_poly(rng, deg, 0, bound);
        Poly2 q = random_poly(rng, deg, 0, bound);
        Poly2 r = random_poly(rng, deg, 0, bound);
        Poly2 s = random_poly(rng, deg, 0, bound);
        const CommRat cp = CommRat::from_poly(p), cq = CommRat::from_poly(q),
                      cr = CommRat::from_poly(r), cs = CommRat::from_poly(s);
        if (!(cp * cs - cq * cr).is_zero()) return GL2Rat(cp, cq, cr, cs);
    }
}

/// Small configuration for unit tests; the acceptance suite runs the real one.
inline EqConfig fast_eq() {
    EqConfig cfg;
    cfg.sizes = {2};
    cfg.trials = 3;
    cfg.order = 3;
    cfg.seed = 42;
    return cfg;
}

}  // namespace nccalc::testing
