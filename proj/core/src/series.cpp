#include "nccalc/series.hpp"

namespace nccalc {

bool TruncSeries::is_zero() const {
    for (const auto& c : coeff_)
        if (!c.is_zero()) return false;
    return true;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    TruncSeries r(order());
    for (int k = 0; k <= order(); ++k) r.coeff_[k] = coeff_[k] + o.coeff_[k];
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    TruncSeries r(order());
    for (int k = 0; k <= order(); ++k) r.coeff_[k] = coeff_[k] - o.coeff_[k];
    return r;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r(order());
    for (int k = 0; k <= order(); ++k) r.coeff_[k] = -coeff_[k];
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    TruncSeries r(order());
    for (int i = 0; i <= order(); ++i) {
        if (coeff_[i].is_zero()) continue;
        for (int j = 0; i + j <= order(); ++j) {
            if (o.coeff_[j].is_zero()) continue;
            r.coeff_[i + j] = r.coeff_[i + j].lazy_plus(coeff_[i] * o.coeff_[j]);
        }
    }
    for (int k = 0; k <= order(); ++k) r.coeff_[k] = r.coeff_[k].reduced();
    return r;
}

TruncSeries TruncSeries::inv() const {
    if (coeff_[0].is_zero())
        throw NonUnitConstantTerm("series has no inverse: constant term is zero");
    const CommRat c0inv = coeff_[0].inv().reduced();
    TruncSeries d(order());
    d.coeff_[0] = c0inv;
    for (int k = 1; k <= order(); ++k) {
        CommRat acc;
        for (int j = 1; j <= k; ++j) {
            if (coeff_[j].is_zero()) continue;
            acc = acc.lazy_plus(coeff_[j] * d.coeff_[k - j]);
        }
        d.coeff_[k] = (-(c0inv * acc)).reduced();
    }
    return d;
}

bool TruncSeries::equals(const TruncSeries& o) const {
    for (int k = 0; k <= order(); ++k)
        if (!coeff_[k].equals(o.coeff_[k])) return false;
    return true;
}

SeriesMatrix SeriesMatrix::identity(int size, int order) {
    SeriesMatrix m(size, order);
    for (int i = 0; i < size; ++i) m.at(i, i).at(0) = CommRat(Rat(1));
    return m;
}

SeriesMatrix SeriesMatrix::operator+(const SeriesMatrix& o) const {
    SeriesMatrix r(size_, order_);
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
    return r;
}

SeriesMatrix SeriesMatrix::operator-() const {
    SeriesMatrix r(size_, order_);
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j) r.at(i, j) = -at(i, j);
    return r;
}

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& o) const {
    SeriesMatrix r(size_, order_);
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j) {
            TruncSeries acc(order_);
            for (int l = 0; l < size_; ++l) {
                const TruncSeries& a = at(i, l);
                const TruncSeries& b = o.at(l, j);
                for (int da = 0; da <= order_; ++da) {
                    if (a.at(da).is_zero()) continue;
                    for (int db = 0; da + db <= order_; ++db) {
                        if (b.at(db).is_zero()) continue;
                        acc.at(da + db) = acc.at(da + db).lazy_plus(a.at(da) * b.at(db));
                    }
                }
            }
            for (int d = 0; d <= order_; ++d) acc.at(d) = acc.at(d).reduced();
            r.at(i, j) = std::move(acc);
        }
    return r;
}

SeriesMatrix SeriesMatrix::scaled(const TruncSeries& s) const {
    SeriesMatrix r(size_, order_);
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j) r.at(i, j) = at(i, j) * s;
    return r;
}

bool SeriesMatrix::equals(const SeriesMatrix& o) const {
    if (size_ != o.size_ || order_ != o.order_) return false;
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j)
            if (!at(i, j).equals(o.at(i, j))) return false;
    return true;
}

std::vector<CommRat> SeriesMatrix::constant_term() const {
    std::vector<CommRat> c;
    c.reserve(size_ * size_);
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j) c.push_back(at(i, j).at(0));
    return c;
}

namespace {

// Exact Gauss-Jordan inverse of a matrix over Q(x,y).
// Returns empty on singular input.
std::vector<CommRat> field_matrix_inverse(std::vector<CommRat> a, int n) {
    std::vector<CommRat> inv(n * n);
    for (int i = 0; i < n; ++i) inv[i * n + i] = CommRat(Rat(1));
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!a[row * n + col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) return {};
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a[pivot * n + j], a[col * n + j]);
                std::swap(inv[pivot * n + j], inv[col * n + j]);
            }
        const CommRat pinv = a[col * n + col].inv();
        for (int j = 0; j < n; ++j) {
            a[col * n + j] = (a[col * n + j] * pinv).reduced();
            inv[col * n + j] = (inv[col * n + j] * pinv).reduced();
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || a[row * n + col].is_zero()) continue;
            const CommRat f = a[row * n + col];
            for (int j = 0; j < n; ++j) {
                a[row * n + j] = a[row * n + j] - f * a[col * n + j];
                inv[row * n + j] = inv[row * n + j] - f * inv[col * n + j];
            }
        }
    }
    return inv;
}

bool is_scalar_matrix(const std::vector<CommRat>& c, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                if (!c[i * n + j].equals(c[0])) return false;
            } else if (!c[i * n + j].is_zero()) {
                return false;
            }
        }
    return true;
}

}  // namespace

SeriesMatrix mat_inverse(const SeriesMatrix& m) {
    const int n = m.size();
    const int order = m.order();
    const std::vector<CommRat> c0 = m.constant_term();

    // Representations of gated expressions always have scalar constant term;
    // skip the elimination in that case.
    std::vector<CommRat> b0;
    if (is_scalar_matrix(c0, n)) {
        if (c0[0].is_zero())
            throw SingularConstantTerm("constant-term matrix is singular");
        b0.assign(n * n, CommRat());
        const CommRat s = c0[0].inv().reduced();
        for (int i = 0; i < n; ++i) b0[i * n + i] = s;
    } else {
        b0 = field_matrix_inverse(c0, n);
        if (b0.empty()) throw SingularConstantTerm("constant-term matrix is singular");
    }

    // B_0 = C_0^-1, B_k = -B_0 * sum_{j=1..k} A_j B_{k-j}.
    // B_k stored as flat coefficient matrices.
    std::vector<std::vector<CommRat>> b(order + 1);
    b[0] = b0;
    for (int k = 1; k <= order; ++k) {
        std::vector<CommRat> acc(n * n);
        for (int j = 1; j <= k; ++j)
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    CommRat s = acc[r * n + c];
                    for (int l = 0; l < n; ++l) {
                        const CommRat& aj = m.at(r, l).at(j);
                        const CommRat& bk = b[k - j][l * n + c];
                        if (aj.is_zero() || bk.is_zero()) continue;
                        s = s.lazy_plus(aj * bk);
                    }
                    acc[r * n + c] = std::move(s);
                }
        for (auto& v : acc) v = v.reduced();
        std::vector<CommRat> bk(n * n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                CommRat s;
                for (int l = 0; l < n; ++l) {
                    if (b0[r * n + l].is_zero() || acc[l * n + c].is_zero()) continue;
                    s = s.lazy_plus(b0[r * n + l] * acc[l * n + c]);
                }
                bk[r * n + c] = (-s).reduced();
            }
        b[k] = std::move(bk);
    }

    SeriesMatrix result(n, order);
    for (int k = 0; k <= order; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) result.at(i, j).at(k) = b[k][i * n + j];
    return result;
}

}  // namespace nccalc
