#pragma once

#include <string>
#include <variant>
#include <vector>

#include "nccalc/repeq.hpp"

namespace nccalc {

/// Invertible 2x2 matrix (p q; r s) over Q(x): entries are univariate in x.
class GL2Rat {
  public:
    GL2Rat(CommRat p, CommRat q, CommRat r, CommRat s);

    static GL2Rat identity();

    const CommRat& p() const { return p_; }
    const CommRat& q() const { return q_; }
    const CommRat& r() const { return r_; }
    const CommRat& s() const { return s_; }

    GL2Rat operator*(const GL2Rat& o) const;

  private:
    CommRat p_, q_, r_, s_;
};

/// Endomorphism of the algebra, given by the images of the generators.
/// Composition is by juxtaposition: act(fg) = act(g) after act(f).
struct NCAuto {
    NCExpr img_x;
    NCExpr img_y;
};

NCAuto identity_auto(ExprStore& store);

/// t_a: (x, y) -> (x, (y*r(x) + s(x))^-1 * (y*p(x) + q(x))).
NCAuto t_auto(ExprStore& store, const GL2Rat& a);

/// p_a: (x, y) -> (x, (p(x)*y + q(x)) * (r(x)*y + s(x))^-1), the reversal
/// dual of t_a.
NCAuto p_auto(ExprStore& store, const GL2Rat& a);

/// The swap (x, y) -> (y, x).
NCAuto tau_auto(ExprStore& store);

/// Conjugation e -> r e r^-1; r must pass the inversion gate.
NCAuto inner_auto(ExprStore& store, NCExpr r);

/// Apply the endomorphism to an expression.
NCExpr act(ExprStore& store, const NCAuto& f, NCExpr e);

/// Product in juxtaposition order: act(compose(f,g), e) = act(g, act(f, e)).
NCAuto compose(ExprStore& store, const NCAuto& f, const NCAuto& g);

/// One generator of a word: tau, t_a, p_a or an inner conjugation.
struct GenTau {};
struct GenT {
    GL2Rat a;
};
struct GenP {
    GL2Rat a;
};
struct GenInner {
    NCExpr r;
};
using CremonaGen = std::variant<GenTau, GenT, GenP, GenInner>;
using CremonaWord = std::vector<CremonaGen>;

NCAuto gen_to_auto(ExprStore& store, const CremonaGen& g);

/// Left-to-right fold of the word with compose; the empty word is the
/// identity.
NCAuto word_to_auto(ExprStore& store, const CremonaWord& w);

/// Checks f against the conjugation by r on both generators.
std::pair<EqVerdict, EqVerdict> is_inner_with(ExprStore& store, const NCAuto& f, NCExpr r,
                                              const EqConfig& cfg);

/// Commutative shadow of an endomorphism: the classical substitution action
/// on Q(x,y).
struct CommAuto {
    CommRat fx;
    CommRat fy;
};

CommAuto comm_shadow(ExprStore& store, const NCAuto& f);
CommAuto comm_identity();
CommAuto comm_compose(const CommAuto& f, const CommAuto& g);
CommAuto comm_of_gen(const CremonaGen& g, ExprStore& store);
CommAuto comm_of_word(ExprStore& store, const CremonaWord& w);

/// One verified identity inside the relation suite.
struct RelationCheck {
    std::string label;
    EqVerdict verdict_x;
    EqVerdict verdict_y;
    bool shadow_exact = false;

    bool passed() const {
        return !verdict_x.distinct() && !verdict_y.distinct() && shadow_exact;
    }
};

struct RelationReport {
    std::string name;
    std::vector<RelationCheck> checks;

    int count(EqVerdict::Tag tag) const;
    bool passed() const;
};

struct SuiteReport {
    std::vector<RelationReport> relations;
    bool passed() const;
};

struct SuiteConfig {
    EqConfig eq;
    std::uint64_t sample_seed = 7;
    int n_products = 20;   // random pairs for the t_a t_b = t_ab law
    int n_scalars = 10;    // random scalar matrices checked to act innerly
    int n_conjugated = 10; // random constant matrices for the tau t_m tau form
    int n_duality = 10;    // random matrices for the reversal duality
};

/// Machine verification of the generator relations:
///   R1  tau^2 = id
///   R2  t_a t_b = t_ab
///   R3  scalar t_d is inner, conjugator d(x)^-1
///   R4  tau t_m tau = ((c x + d)^-1 (a x + b), y) for constant m
///   R5  a^-1 (tau e)^3 is inner, conjugator x^-1 y
///   R6  reversal duality between t_a and p_a
/// Every check also compares the commutative shadow exactly.
SuiteReport verify_relation_suite(ExprStore& store, const SuiteConfig& cfg);

}  // namespace nccalc
