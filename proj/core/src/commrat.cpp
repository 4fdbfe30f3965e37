#include "nccalc/commrat.hpp"

namespace nccalc {

namespace {

// Fractions whose parts stay under this many terms skip reduction entirely;
// larger ones get a gcd pass so chained arithmetic cannot snowball.
constexpr std::size_t kAutoReduceTerms = 24;

}  // namespace

CommRat::CommRat(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    if (num_.is_zero()) {
        den_ = Poly2::constant(1);
        reduced_ = true;
    }
}

bool CommRat::is_one() const { return num_ == den_; }

static CommRat maybe_reduce(CommRat r) {
    if (r.num().term_count() + r.den().term_count() > kAutoReduceTerms) return r.reduced();
    return r;
}

CommRat CommRat::operator+(const CommRat& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return maybe_reduce(CommRat(num_ + o.num_, den_));
    return maybe_reduce(CommRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_));
}

CommRat CommRat::lazy_plus(const CommRat& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return CommRat(num_ + o.num_, den_);
    return CommRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

CommRat CommRat::operator-(const CommRat& o) const { return *this + (-o); }

CommRat CommRat::operator-() const {
    CommRat r = *this;
    r.num_ = -r.num_;
    return r;
}

CommRat CommRat::operator*(const CommRat& o) const {
    if (is_zero() || o.is_zero()) return CommRat();
    return maybe_reduce(CommRat(num_ * o.num_, den_ * o.den_));
}

CommRat CommRat::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(x,y)");
    return CommRat(den_, num_);
}

bool CommRat::equals(const CommRat& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

CommRat CommRat::reduced() const {
    if (reduced_) return *this;
    if (num_.is_zero()) return CommRat();
    Poly2 n = num_;
    Poly2 d = den_;
    if (!d.is_constant()) {
        const Poly2 g = Poly2::gcd(n, d);
        if (!g.is_constant()) {
            n = n.div_exact(g);
            d = d.div_exact(g);
        }
    }
    // Monic denominator pins the representative.
    const Rat lc = d.leading_coeff();
    if (lc != 1) {
        const Rat s = Rat(1) / lc;
        n = n.scaled(s);
        d = d.scaled(s);
    }
    CommRat r(std::move(n), std::move(d));
    r.reduced_ = true;
    return r;
}

CommRat CommRat::derivative_x() const {
    // Quotient rule; denominator squared.
    return CommRat(num_.derivative_x() * den_ - num_ * den_.derivative_x(), den_ * den_);
}

CommRat CommRat::derivative_y() const {
    return CommRat(num_.derivative_y() * den_ - num_ * den_.derivative_y(), den_ * den_);
}

static CommRat eval_poly_at(const Poly2& p, const CommRat& gx, const CommRat& gy) {
    std::vector<CommRat> px{CommRat(Rat(1))}, py{CommRat(Rat(1))};
    auto pow_of = [](std::vector<CommRat>& cache, const CommRat& base, int e) {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[e];
    };
    CommRat acc;
    for (const auto& [m, c] : p.terms())
        acc = acc + CommRat(c) * pow_of(px, gx, m.dx) * pow_of(py, gy, m.dy);
    return acc;
}

CommRat CommRat::subst(const CommRat& gx, const CommRat& gy) const {
    const CommRat n = eval_poly_at(num_, gx, gy);
    const CommRat d = eval_poly_at(den_, gx, gy);
    if (d.is_zero()) throw DivisionByZero("denominator vanishes under substitution");
    return n * d.inv();
}

std::string CommRat::str() const {
    const CommRat r = reduced();
    if (r.den().is_constant() && r.den().constant_term() == 1) return r.num().str();
    return "(" + r.num().str() + ")/(" + r.den().str() + ")";
}

CommRat jacobian_det(const CommRat& f, const CommRat& g) {
    return f.derivative_x() * g.derivative_y() - f.derivative_y() * g.derivative_x();
}

}  // namespace nccalc
