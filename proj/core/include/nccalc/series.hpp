#pragma once

#include <vector>

#include "nccalc/commrat.hpp"

namespace nccalc {

/// Truncated power series over Q(x,y): coefficients of epsilon^0..epsilon^N.
/// Arithmetic truncates everything beyond epsilon^N.
class TruncSeries {
  public:
    explicit TruncSeries(int order) : coeff_(order + 1) {}
    TruncSeries(int order, CommRat c0) : TruncSeries(order) { coeff_[0] = std::move(c0); }

    int order() const { return static_cast<int>(coeff_.size()) - 1; }
    const CommRat& at(int k) const { return coeff_[k]; }
    CommRat& at(int k) { return coeff_[k]; }

    bool is_zero() const;

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator-() const;
    TruncSeries operator*(const TruncSeries& o) const;

    /// Multiplicative inverse; requires an invertible constant term
    /// (NonUnitConstantTerm otherwise). d0 = c0^-1 and
    /// d_k = -c0^-1 * sum_{j=1..k} c_j d_{k-j}.
    TruncSeries inv() const;

    bool equals(const TruncSeries& o) const;

  private:
    std::vector<CommRat> coeff_;
};

/// Square matrix of truncated series, all entries sharing one order.
class SeriesMatrix {
  public:
    SeriesMatrix(int size, int order) : size_(size), order_(order), entries_(size * size, TruncSeries(order)) {}

    static SeriesMatrix identity(int size, int order);

    int size() const { return size_; }
    int order() const { return order_; }
    const TruncSeries& at(int i, int j) const { return entries_[i * size_ + j]; }
    TruncSeries& at(int i, int j) { return entries_[i * size_ + j]; }

    SeriesMatrix operator+(const SeriesMatrix& o) const;
    SeriesMatrix operator-() const;
    SeriesMatrix operator*(const SeriesMatrix& o) const;
    SeriesMatrix scaled(const TruncSeries& s) const;

    bool equals(const SeriesMatrix& o) const;

    /// The epsilon^0 coefficient matrix.
    std::vector<CommRat> constant_term() const;

  private:
    int size_;
    int order_;
    std::vector<TruncSeries> entries_;
};

/// Inverse of a series matrix: the constant-term matrix is inverted exactly
/// over Q(x,y) (SingularConstantTerm if singular), then corrected order by
/// order so that m * result = identity up to epsilon^N.
SeriesMatrix mat_inverse(const SeriesMatrix& m);

}  // namespace nccalc
