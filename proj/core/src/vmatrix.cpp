#include "nccalc/vmatrix.hpp"

#include <algorithm>

namespace nccalc {

Poly2 VEntry::to_poly() const {
    Poly2 p;
    p.add_term({0, 0}, alpha);
    p.add_term({1, 0}, beta);
    p.add_term({0, 1}, gamma);
    return p;
}

NCExpr VEntry::to_expr(ExprStore& store) const {
    NCExpr acc = store.constant(alpha);
    if (beta != 0) acc = store.add(acc, store.mul(store.constant(beta), store.var_x()));
    if (gamma != 0) acc = store.add(acc, store.mul(store.constant(gamma), store.var_y()));
    return store.normalize(acc);
}

VMatrix VMatrix::permuted(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const {
    VMatrix r(size_);
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j) r.at(i, j) = at(row_perm[i], col_perm[j]);
    return r;
}

Poly2 comm_det(const VMatrix& m) {
    const int k = m.size();
    std::vector<Poly2> a(k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i * k + j] = m.at(i, j).to_poly();

    int sign = 1;
    Poly2 prev = Poly2::constant(1);
    for (int s = 0; s + 1 < k; ++s) {
        if (a[s * k + s].is_zero()) {
            int swap_row = -1;
            for (int r = s + 1; r < k; ++r)
                if (!a[r * k + s].is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return Poly2();  // zero column, zero determinant
            for (int c = s; c < k; ++c) std::swap(a[s * k + c], a[swap_row * k + c]);
            sign = -sign;
        }
        for (int r = s + 1; r < k; ++r) {
            for (int c = s + 1; c < k; ++c)
                a[r * k + c] =
                    (a[r * k + c] * a[s * k + s] - a[r * k + s] * a[s * k + c]).div_exact(prev);
            a[r * k + s] = Poly2();
        }
        prev = a[s * k + s];
    }
    Poly2 det = a[(k - 1) * k + (k - 1)];
    return sign < 0 ? -det : det;
}

namespace {

// Fixed probe points for the cheap pivot test; a nonzero evaluation is an
// exact nonzero certificate, inconclusive probes fall back to the exact test.
constexpr int kProbePoints[3][2] = {{2, 3}, {-5, 7}, {11, -13}};

bool comm_nonzero(const CommRat& v) {
    for (const auto& pt : kProbePoints) {
        const Rat dx(pt[0]), dy(pt[1]);
        if (rat_is_zero(v.den().eval(dx, dy))) continue;
        if (!rat_is_zero(v.num().eval(dx, dy))) return true;
    }
    return !v.is_zero();
}

struct PivotPlan {
    std::vector<int> row_perm;
    std::vector<int> col_perm;
    int sign = 1;
    std::vector<std::pair<int, int>> pivots;
};

// Commutative dry run of the elimination: fixes the permutations and pivot
// chain; the phi-image of every noncommutative pivot equals the commutative
// Schur complement computed here.
PivotPlan plan_pivots(const VMatrix& m, const std::vector<std::pair<int, int>>& requested) {
    const int k = m.size();
    PivotPlan plan;
    plan.row_perm.resize(k);
    plan.col_perm.resize(k);
    for (int i = 0; i < k; ++i) plan.row_perm[i] = plan.col_perm[i] = i;

    std::vector<CommRat> c(k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            c[i * k + j] = CommRat::from_poly(m.at(i, j).to_poly());

    if (!requested.empty() && static_cast<int>(requested.size()) != k - 1)
        throw SingularCommDet("pivot sequence must have exactly size-1 entries");

    for (int s = 0; s + 1 < k; ++s) {
        int pi = -1, pj = -1;
        if (!requested.empty()) {
            const auto [orig_r, orig_c] = requested[s];
            for (int i = s; i < k; ++i)
                if (plan.row_perm[i] == orig_r) pi = i;
            for (int j = s; j < k; ++j)
                if (plan.col_perm[j] == orig_c) pj = j;
            if (pi < 0 || pj < 0)
                throw SingularCommDet("pivot position reused or out of range");
            if (c[pi * k + pj].is_zero())
                throw SingularCommDet("requested pivot has zero commutativization");
        } else {
            // Lexicographically least candidate, in original coordinates.
            long best = -1;
            for (int i = s; i < k; ++i)
                for (int j = s; j < k; ++j) {
                    const long key =
                        static_cast<long>(plan.row_perm[i]) * k + plan.col_perm[j];
                    if ((best < 0 || key < best) && comm_nonzero(c[i * k + j])) {
                        best = key;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) throw SingularCommDet("no valid pivot chain exists");
        }
        if (pi != s) {
            for (int j = 0; j < k; ++j) std::swap(c[pi * k + j], c[s * k + j]);
            std::swap(plan.row_perm[pi], plan.row_perm[s]);
            plan.sign = -plan.sign;
        }
        if (pj != s) {
            for (int i = 0; i < k; ++i) std::swap(c[i * k + pj], c[i * k + s]);
            std::swap(plan.col_perm[pj], plan.col_perm[s]);
            plan.sign = -plan.sign;
        }
        plan.pivots.emplace_back(plan.row_perm[s], plan.col_perm[s]);

        const CommRat pinv = c[s * k + s].inv();
        for (int r = s + 1; r < k; ++r) {
            const CommRat f = (c[r * k + s] * pinv).reduced();
            if (f.is_zero()) continue;
            for (int col = s + 1; col < k; ++col)
                c[r * k + col] = (c[r * k + col] - f * c[s * k + col]).reduced();
            c[r * k + s] = CommRat();
        }
    }
    return plan;
}

using ExprMatrix = std::vector<std::vector<NCExpr>>;

ExprMatrix expr_identity(ExprStore& store, int k) {
    ExprMatrix u(k, std::vector<NCExpr>(k, store.constant(0)));
    for (int i = 0; i < k; ++i) u[i][i] = store.constant(1);
    return u;
}

bool is_zero_node(const NCExpr& e) { return e.id() == ExprStore::kConstZero; }

/// C = A * B over the expression algebra, entries normalized.
ExprMatrix expr_matmul(ExprStore& store, const ExprMatrix& a, const ExprMatrix& b) {
    const int n = static_cast<int>(a.size());
    ExprMatrix r(n, std::vector<NCExpr>(n, store.constant(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            NCExpr acc = store.constant(0);
            for (int l = 0; l < n; ++l) {
                if (is_zero_node(a[i][l]) || is_zero_node(b[l][j])) continue;
                acc = store.add(acc, store.mul(a[i][l], b[l][j]));
            }
            r[i][j] = store.normalize(acc);
        }
    return r;
}

}  // namespace

Decomposition decompose(ExprStore& store, const VMatrix& m,
                        const std::vector<std::pair<int, int>>& pivots) {
    if (comm_det(m).is_zero()) throw SingularCommDet("commutative determinant is zero");
    const int k = m.size();
    PivotPlan plan = plan_pivots(m, pivots);

    Decomposition d;
    d.row_perm = plan.row_perm;
    d.col_perm = plan.col_perm;
    d.perm_sign = plan.sign;
    d.pivots = plan.pivots;

    const NCExpr zero = store.constant(0);
    const NCExpr one = store.constant(1);
    ExprMatrix w(k, std::vector<NCExpr>(k, zero));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            w[i][j] = m.at(plan.row_perm[i], plan.col_perm[j]).to_expr(store);
    ExprMatrix u = expr_identity(store, k);

    for (int s = 0; s + 1 < k; ++s) {
        const NCExpr pinv = store.inv(w[s][s]);  // gate certified by the plan
        for (int c = s + 1; c < k; ++c) w[s][c] = store.normalize(store.mul(pinv, w[s][c]));
        w[s][s] = one;  // pinv * pivot, exact by the localization relation
        for (int c = 0; c <= s; ++c) u[s][c] = store.normalize(store.mul(pinv, u[s][c]));
        for (int r = s + 1; r < k; ++r) {
            const NCExpr f = w[r][s];
            if (!is_zero_node(f)) {
                for (int c = s + 1; c < k; ++c)
                    w[r][c] = store.normalize(store.sub(w[r][c], store.mul(f, w[s][c])));
                for (int c = 0; c <= s; ++c)
                    u[r][c] = store.normalize(store.sub(u[r][c], store.mul(f, u[s][c])));
            }
            w[r][s] = zero;  // eliminated against a unit pivot, exact
        }
    }

    d.delta = store.normalize(w[k - 1][k - 1]);
    w[k - 1][k - 1] = d.delta;
    d.u = std::move(u);
    d.t = std::move(w);
    return d;
}

Poly2 Decomposition::pivot_minor_det(const VMatrix& m) const {
    const int k = m.size();
    if (k == 1) return Poly2::constant(1);
    VMatrix minor(k - 1);
    for (int i = 0; i + 1 < k; ++i)
        for (int j = 0; j + 1 < k; ++j) minor.at(i, j) = m.at(row_perm[i], col_perm[j]);
    return comm_det(minor);
}

std::vector<std::vector<NCExpr>> nc_inverse(ExprStore& store, const VMatrix& m) {
    const Decomposition d = decompose(store, m);
    const int k = m.size();
    const NCExpr zero = store.constant(0);
    const NCExpr one = store.constant(1);

    // T^-1 by back substitution: T is upper triangular with diagonal
    // (1, ..., 1, delta).
    ExprMatrix tinv(k, std::vector<NCExpr>(k, zero));
    for (int i = k - 1; i >= 0; --i) {
        const NCExpr diag_inv = (i == k - 1) ? store.normalize(store.inv(d.delta)) : one;
        for (int j = i; j < k; ++j) {
            NCExpr acc = (i == j) ? one : zero;
            for (int l = i + 1; l <= j; ++l) {
                if (is_zero_node(d.t[i][l]) || is_zero_node(tinv[l][j])) continue;
                acc = store.sub(acc, store.mul(d.t[i][l], tinv[l][j]));
            }
            acc = store.normalize(acc);
            if (i == k - 1 && !is_zero_node(acc)) acc = store.normalize(store.mul(diag_inv, acc));
            tinv[i][j] = acc;
        }
    }

    const ExprMatrix inv_permuted = expr_matmul(store, tinv, d.u);

    // Undo the permutations: m^-1[a][b] = inv_permuted[colpos[a]][rowpos[b]].
    std::vector<int> rowpos(k), colpos(k);
    for (int i = 0; i < k; ++i) rowpos[d.row_perm[i]] = i;
    for (int j = 0; j < k; ++j) colpos[d.col_perm[j]] = j;
    ExprMatrix result(k, std::vector<NCExpr>(k, zero));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) result[a][b] = inv_permuted[colpos[a]][rowpos[b]];
    return result;
}

namespace {

Decomposition identity_perm_decomposition(int size) {
    Decomposition d;
    d.row_perm.resize(size);
    d.col_perm.resize(size);
    for (int i = 0; i < size; ++i) d.row_perm[i] = d.col_perm[i] = i;
    d.perm_sign = 1;
    for (int i = 0; i + 1 < size; ++i) d.pivots.emplace_back(i, i);
    return d;
}

}  // namespace

std::pair<VMatrix, Decomposition> closure_inverse(ExprStore& store, const VMatrix& m,
                                                  const Decomposition& dm) {
    const int k = m.size();
    const VMatrix mp = m.permuted(dm.row_perm, dm.col_perm);
    const NCExpr zero = store.constant(0);
    const NCExpr one = store.constant(1);

    VMatrix p(k + 1);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) p.at(i, j) = mp.at(i, j);
    p.at(k - 1, k) = v_const(1);
    p.at(k, k - 1) = v_const(-1);

    Decomposition d = identity_perm_decomposition(k + 1);
    const NCExpr delta_inv = store.normalize(store.inv(dm.delta));
    d.delta = delta_inv;

    // U_P: rows 0..k-2 of U unchanged, row k-1 scaled by delta^-1, and the
    // border row carries the same combination so the unit below the pivot
    // cancels.
    d.u.assign(k + 1, std::vector<NCExpr>(k + 1, zero));
    for (int i = 0; i + 1 < k; ++i)
        for (int j = 0; j < k; ++j) d.u[i][j] = dm.u[i][j];
    for (int j = 0; j < k; ++j) {
        const NCExpr scaled = is_zero_node(dm.u[k - 1][j])
                                  ? zero
                                  : store.normalize(store.mul(delta_inv, dm.u[k - 1][j]));
        d.u[k - 1][j] = scaled;
        d.u[k][j] = scaled;
    }
    d.u[k][k] = one;

    d.t.assign(k + 1, std::vector<NCExpr>(k + 1, zero));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) d.t[i][j] = dm.t[i][j];
    d.t[k - 1][k - 1] = one;
    d.t[k - 1][k] = delta_inv;
    d.t[k][k] = delta_inv;
    return {std::move(p), std::move(d)};
}

std::pair<VMatrix, Decomposition> closure_product(ExprStore& store, const VMatrix& m,
                                                  const VMatrix& n, const Decomposition& dm,
                                                  const Decomposition& dn) {
    const int k = m.size();
    const int l = n.size();
    const VMatrix mp = m.permuted(dm.row_perm, dm.col_perm);
    const VMatrix np = n.permuted(dn.row_perm, dn.col_perm);
    const NCExpr zero = store.constant(0);

    VMatrix p(k + l);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j + 1 < k; ++j) p.at(i, j) = mp.at(i, j);
        if (i == k - 1) p.at(i, k - 1) = v_const(1);
        p.at(i, k + l - 1) = mp.at(i, k - 1);
    }
    for (int i = 0; i < l; ++i) {
        p.at(k + i, k - 1) = np.at(i, l - 1);
        for (int j = 0; j + 1 < l; ++j) p.at(k + i, k + j) = np.at(i, j);
    }

    Decomposition d = identity_perm_decomposition(k + l);
    d.delta = store.normalize(store.neg(store.mul(dn.delta, dm.delta)));

    d.u.assign(k + l, std::vector<NCExpr>(k + l, zero));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) d.u[i][j] = dm.u[i][j];
    for (int i = 0; i < l; ++i) {
        // border rows: -(last column of n's T) times U's pivot row, then W.
        const NCExpr q1 = dn.t[i][l - 1];
        if (!is_zero_node(q1))
            for (int j = 0; j < k; ++j)
                if (!is_zero_node(dm.u[k - 1][j]))
                    d.u[k + i][j] =
                        store.normalize(store.neg(store.mul(q1, dm.u[k - 1][j])));
        for (int j = 0; j < l; ++j) d.u[k + i][k + j] = dn.u[i][j];
    }

    d.t.assign(k + l, std::vector<NCExpr>(k + l, zero));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j + 1 < k; ++j) d.t[i][j] = dm.t[i][j];
        if (i == k - 1) d.t[i][k - 1] = store.constant(1);
        d.t[i][k + l - 1] = dm.t[i][k - 1];
    }
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j + 1 < l; ++j) d.t[k + i][k + j] = dn.t[i][j];
        const NCExpr q1 = dn.t[i][l - 1];
        d.t[k + i][k + l - 1] = is_zero_node(q1)
                                    ? zero
                                    : store.normalize(store.neg(store.mul(q1, dm.delta)));
    }
    return {std::move(p), std::move(d)};
}

std::pair<VMatrix, Decomposition> closure_sum(ExprStore& store, const VMatrix& m,
                                              const VMatrix& n, const Decomposition& dm,
                                              const Decomposition& dn) {
    if ((store.commutativize(dm.delta) + store.commutativize(dn.delta)).is_zero())
        throw DegenerateSum("designated elements cancel commutatively");

    const int k = m.size();
    const int l = n.size();
    const VMatrix mp = m.permuted(dm.row_perm, dm.col_perm);
    const VMatrix np = n.permuted(dn.row_perm, dn.col_perm);
    const NCExpr zero = store.constant(0);

    VMatrix p(k + l);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j + 1 < k; ++j) p.at(i, j) = mp.at(i, j);
        if (i == k - 1) p.at(i, k - 1) = v_const(1);
        p.at(i, k + l - 1) = -mp.at(i, k - 1);  // negated last column flips delta's sign
    }
    for (int i = 0; i < l; ++i) {
        if (i == l - 1) p.at(k + i, k - 1) = v_const(1);
        for (int j = 0; j + 1 < l; ++j) p.at(k + i, k + j) = np.at(i, j);
        p.at(k + i, k + l - 1) = np.at(i, l - 1);
    }

    Decomposition d = identity_perm_decomposition(k + l);
    d.delta = store.normalize(store.add(dn.delta, dm.delta));

    d.u.assign(k + l, std::vector<NCExpr>(k + l, zero));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) d.u[i][j] = dm.u[i][j];
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) d.u[k + i][k + j] = dn.u[i][j];
    for (int j = 0; j < k; ++j)
        if (!is_zero_node(dm.u[k - 1][j]))
            d.u[k + l - 1][j] = store.normalize(store.neg(dm.u[k - 1][j]));

    d.t.assign(k + l, std::vector<NCExpr>(k + l, zero));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j + 1 < k; ++j) d.t[i][j] = dm.t[i][j];
        if (i == k - 1) d.t[i][k - 1] = store.constant(1);
        d.t[i][k + l - 1] = is_zero_node(dm.t[i][k - 1])
                                ? zero
                                : store.normalize(store.neg(dm.t[i][k - 1]));
    }
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j + 1 < l; ++j) d.t[k + i][k + j] = dn.t[i][j];
        if (i + 1 < l) d.t[k + i][k + l - 1] = dn.t[i][l - 1];
    }
    d.t[k + l - 1][k + l - 1] = d.delta;
    return {std::move(p), std::move(d)};
}

}  // namespace nccalc
