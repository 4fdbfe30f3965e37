#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "nccalc/errors.hpp"
#include "nccalc/rational.hpp"

namespace nccalc {

/// Monomial x^dx * y^dy.
struct Mono {
    int dx = 0;
    int dy = 0;

    int total() const { return dx + dy; }
    bool operator==(const Mono&) const = default;
};

/// Graded-lex with x > y, *descending*: the map begins at the leading term.
struct MonoGradedLexDesc {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.total() != b.total()) return a.total() > b.total();
        return a.dx > b.dx;
    }
};

/// Sparse bivariate polynomial over Q. Invariant: no zero coefficients are
/// stored, so an empty map is the zero polynomial.
class Poly2 {
  public:
    using Terms = std::map<Mono, Rat, MonoGradedLexDesc>;

    Poly2() = default;

    static Poly2 constant(const Rat& c);
    static Poly2 var_x();
    static Poly2 var_y();
    /// c * x^dx * y^dy
    static Poly2 monomial(const Rat& c, int dx, int dy);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the constant monomial (zero if absent).
    Rat constant_term() const;
    /// Leading (graded-lex) coefficient; zero polynomial reports 0.
    Rat leading_coeff() const;
    Mono leading_mono() const;
    int degree_x() const;
    int degree_y() const;
    int total_degree() const;
    std::size_t term_count() const { return terms_.size(); }

    const Terms& terms() const { return terms_; }

    void add_term(const Mono& m, const Rat& c);

    Poly2 operator-() const;
    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2& operator+=(const Poly2& o);
    Poly2 scaled(const Rat& c) const;

    bool operator==(const Poly2& o) const { return terms_ == o.terms_; }

    Poly2 derivative_x() const;
    Poly2 derivative_y() const;

    /// Evaluation at a rational point.
    Rat eval(const Rat& x, const Rat& y) const;

    /// Integer evaluation; meaningful for integer-coefficient polynomials
    /// (coefficient numerators are used as-is, denominators ignored must be 1).
    mpz_class eval_z(long x, long y) const;

    /// Exact quotient; the divisor is known to divide this polynomial
    /// (Bareiss steps, gcd cofactors). Throws InternalGateViolation otherwise.
    Poly2 div_exact(const Poly2& divisor) const;

    /// Exact quotient, or nothing when the divisor does not divide exactly.
    std::optional<Poly2> try_div_exact(const Poly2& divisor) const;

    /// Polynomial gcd over Q, normalized monic under graded-lex.
    /// gcd(0,0) = 0; gcd(p,0) = monic(p).
    static Poly2 gcd(const Poly2& a, const Poly2& b);

    /// c such that (1/c) * this has coprime integer coefficients and a
    /// positive leading coefficient; 0 for the zero polynomial.
    Rat rational_content() const;

    /// Canonical text: graded-lex descending, "^" powers, explicit "*",
    /// no spaces. Zero prints "0".
    std::string str() const;

  private:
    Terms terms_;
};

/// Term budget shared by all Poly2 arithmetic; BudgetExceeded on overflow.
std::size_t poly_term_budget();
void set_poly_term_budget(std::size_t budget);

}  // namespace nccalc
