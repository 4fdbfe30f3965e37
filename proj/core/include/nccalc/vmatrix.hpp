#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nccalc/ncexpr.hpp"

namespace nccalc {

/// Element of the 3-dimensional space spanned by 1, x, y:
/// alpha + beta*x + gamma*y with rational coefficients.
struct VEntry {
    Rat alpha{0};
    Rat beta{0};
    Rat gamma{0};

    VEntry operator-() const { return {-alpha, -beta, -gamma}; }
    bool operator==(const VEntry&) const = default;

    Poly2 to_poly() const;
    NCExpr to_expr(ExprStore& store) const;
};

inline VEntry v_const(long c) { return {Rat(c), Rat(0), Rat(0)}; }
inline VEntry v_x() { return {Rat(0), Rat(1), Rat(0)}; }
inline VEntry v_y() { return {Rat(0), Rat(0), Rat(1)}; }

/// Square matrix with entries in span{1, x, y}.
class VMatrix {
  public:
    explicit VMatrix(int size) : size_(size), entries_(size * size) {}

    int size() const { return size_; }
    const VEntry& at(int i, int j) const { return entries_[i * size_ + j]; }
    VEntry& at(int i, int j) { return entries_[i * size_ + j]; }

    /// Row/column permuted copy: result(i,j) = (*this)(row_perm[i], col_perm[j]).
    VMatrix permuted(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const;

  private:
    int size_;
    std::vector<VEntry> entries_;
};

/// Commutative determinant by fraction-free Bareiss elimination over the
/// polynomial ring.
Poly2 comm_det(const VMatrix& m);

/// Pivoted factorization of a V-matrix over the noncommutative algebra.
///
/// With mp = m.permuted(row_perm, col_perm), the recorded matrices satisfy
/// U * mp = T entrywise: U is lower triangular with last diagonal entry 1,
/// T is upper triangular with diagonal (1, ..., 1, delta). The designated
/// element delta is the Schur complement of the pivot block, and its
/// commutativization is comm_det(mp) / comm_det(pivot block), a ratio of
/// polynomial determinants.
struct Decomposition {
    std::vector<int> row_perm;
    std::vector<int> col_perm;
    int perm_sign = 1;
    /// Original (row, col) positions of the pivots, in elimination order.
    std::vector<std::pair<int, int>> pivots;
    std::vector<std::vector<NCExpr>> u;
    std::vector<std::vector<NCExpr>> t;
    NCExpr delta;

    /// Determinant of the pivot block in pivot order, i.e. of the leading
    /// (k-1)x(k-1) block of the permuted matrix.
    Poly2 pivot_minor_det(const VMatrix& m) const;
};

/// Eliminates m down to its designated element. The default pivot strategy
/// scans candidates in lexicographic (row, col) order and takes the first
/// whose current entry is phi-nonzero, probing three fixed evaluation points
/// before an exact zero test. An explicit pivot sequence overrides the
/// search. SingularCommDet when comm_det(m) = 0 (no pivot chain exists) or
/// when an explicit sequence hits a phi-zero pivot.
Decomposition decompose(ExprStore& store, const VMatrix& m,
                        const std::vector<std::pair<int, int>>& pivots = {});

/// Two-sided inverse over the algebra, by back-substitution through the
/// factorization: result = col_perm . T^-1 U . row_perm.
std::vector<std::vector<NCExpr>> nc_inverse(ExprStore& store, const VMatrix& m);

/// Bordered-matrix constructions closing the set of designated elements
/// under inverse, product and non-degenerate sum. Each returns the V-matrix
/// together with an explicit decomposition whose designated element is the
/// target value.
std::pair<VMatrix, Decomposition> closure_inverse(ExprStore& store, const VMatrix& m,
                                                  const Decomposition& dm);

/// Designated element of the result: -delta(n) * delta(m).
std::pair<VMatrix, Decomposition> closure_product(ExprStore& store, const VMatrix& m,
                                                  const VMatrix& n, const Decomposition& dm,
                                                  const Decomposition& dn);

/// Designated element: delta(m) + delta(n); DegenerateSum when the
/// commutativizations cancel.
std::pair<VMatrix, Decomposition> closure_sum(ExprStore& store, const VMatrix& m,
                                              const VMatrix& n, const Decomposition& dm,
                                              const Decomposition& dn);

}  // namespace nccalc
