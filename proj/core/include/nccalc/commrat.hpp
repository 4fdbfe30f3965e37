#pragma once

#include <string>

#include "nccalc/poly2.hpp"

namespace nccalc {

/// Element of the field Q(x,y) as a lazy fraction of sparse polynomials.
/// Fractions are left unreduced by arithmetic unless they grow past the
/// auto-reduce threshold; equality never needs a gcd.
class CommRat {
  public:
    CommRat() : num_(), den_(Poly2::constant(1)), reduced_(true) {}
    explicit CommRat(const Rat& c)
        : num_(Poly2::constant(c)), den_(Poly2::constant(1)), reduced_(true) {}
    CommRat(Poly2 num, Poly2 den);

    static CommRat var_x() { return CommRat(Poly2::var_x(), Poly2::constant(1)); }
    static CommRat var_y() { return CommRat(Poly2::var_y(), Poly2::constant(1)); }
    static CommRat from_poly(Poly2 p) { return CommRat(std::move(p), Poly2::constant(1)); }

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    CommRat operator+(const CommRat& o) const;
    CommRat operator-(const CommRat& o) const;
    CommRat operator-() const;
    CommRat operator*(const CommRat& o) const;
    /// Reciprocal; DivisionByZero on zero.
    CommRat inv() const;
    CommRat operator/(const CommRat& o) const { return *this * o.inv(); }

    /// Sum that skips the auto-reduce pass; for accumulation loops that
    /// reduce once at the end.
    CommRat lazy_plus(const CommRat& o) const;

    /// a = b in Q(x,y), by cross-multiplication of the lazy fractions.
    bool equals(const CommRat& o) const;

    /// Canonical form: numerator and denominator coprime, denominator monic
    /// under graded-lex. Idempotent, equals-preserving.
    CommRat reduced() const;

    CommRat derivative_x() const;
    CommRat derivative_y() const;

    /// Substitution x -> gx, gy -> gy; DivisionByZero if the denominator
    /// specializes to zero.
    CommRat subst(const CommRat& gx, const CommRat& gy) const;

    /// Canonical text of the reduced form: bare polynomial when the
    /// denominator is 1, otherwise "(num)/(den)".
    std::string str() const;

  private:
    Poly2 num_;
    Poly2 den_;
    bool reduced_ = false;  // canonical form already established
};

/// d(f)/dx * d(g)/dy - d(f)/dy * d(g)/dx. Zero iff the pair is algebraically
/// dependent (characteristic 0).
CommRat jacobian_det(const CommRat& f, const CommRat& g);

}  // namespace nccalc
