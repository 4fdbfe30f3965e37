#include "nccalc/poly2.hpp"

#include <algorithm>
#include <vector>

namespace nccalc {

namespace {

std::size_t g_term_budget = 500000;

void check_budget(std::size_t n) {
    if (n > g_term_budget)
        throw BudgetExceeded("polynomial term budget exceeded: " + std::to_string(n) + " > " +
                             std::to_string(g_term_budget));
}

}  // namespace

std::size_t poly_term_budget() { return g_term_budget; }
void set_poly_term_budget(std::size_t budget) { g_term_budget = budget; }

Poly2 Poly2::constant(const Rat& c) {
    Poly2 p;
    p.add_term({0, 0}, c);
    return p;
}

Poly2 Poly2::var_x() { return monomial(1, 1, 0); }
Poly2 Poly2::var_y() { return monomial(1, 0, 1); }

Poly2 Poly2::monomial(const Rat& c, int dx, int dy) {
    Poly2 p;
    p.add_term({dx, dy}, c);
    return p;
}

bool Poly2::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
}

Rat Poly2::constant_term() const {
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly2::leading_coeff() const {
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

Mono Poly2::leading_mono() const {
    return terms_.empty() ? Mono{0, 0} : terms_.begin()->first;
}

int Poly2::degree_x() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.dx);
    return d;
}

int Poly2::degree_y() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.dy);
    return d;
}

int Poly2::total_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.total();
}

void Poly2::add_term(const Mono& m, const Rat& c) {
    if (rat_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (rat_is_zero(it->second)) terms_.erase(it);
    }
    check_budget(terms_.size());
}

Poly2 Poly2::operator-() const {
    Poly2 r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly2 Poly2::operator-(const Poly2& o) const {
    Poly2 r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

namespace {

// True when every coefficient is an integer; reports the largest magnitude.
bool integer_coefficients(const Poly2& p, mpz_class& maxabs) {
    maxabs = 0;
    for (const auto& [m, c] : p.terms()) {
        if (c.get_den() != 1) return false;
        mpz_class a = abs(c.get_num());
        if (a > maxabs) maxabs = std::move(a);
    }
    return true;
}

// Kronecker substitution: both polynomials are packed into single integers
// with one fixed-width slot per monomial of the product grid, multiplied by
// GMP, and the product is read back slot by slot. Signs are handled by
// splitting each operand into positive and negative parts.
Poly2 kronecker_mul(const Poly2& a, const Poly2& b, const mpz_class& maxa,
                    const mpz_class& maxb) {
    const int px = a.degree_x() + b.degree_x() + 1;
    const int py = a.degree_y() + b.degree_y() + 1;
    const std::size_t slots = static_cast<std::size_t>(px) * py;

    // Slot bound: every product coefficient is a sum of at most
    // min(#terms) pairwise products.
    const mpz_class bound =
        maxa * maxb * static_cast<unsigned long>(std::min(a.term_count(), b.term_count()));
    const std::size_t slot_bytes = (mpz_sizeinbase(bound.get_mpz_t(), 2) + 8) / 8;

    auto pack = [&](const Poly2& p, bool positive) {
        std::vector<unsigned char> buf(slots * slot_bytes, 0);
        for (const auto& [m, c] : p.terms()) {
            if ((sgn(c) > 0) != positive) continue;
            const std::size_t off = (static_cast<std::size_t>(m.dy) * px + m.dx) * slot_bytes;
            const mpz_class mag = abs(c.get_num());
            std::size_t count = 0;
            mpz_export(buf.data() + off, &count, -1, 1, 0, 0, mag.get_mpz_t());
        }
        mpz_class packed;
        mpz_import(packed.get_mpz_t(), buf.size(), -1, 1, 0, 0, buf.data());
        return packed;
    };

    const mpz_class apos = pack(a, true), aneg = pack(a, false);
    const mpz_class bpos = pack(b, true), bneg = pack(b, false);
    const mpz_class plus = apos * bpos + aneg * bneg;   // positive contributions
    const mpz_class minus = apos * bneg + aneg * bpos;  // negative contributions

    auto unpack = [&](const mpz_class& packed) {
        std::vector<unsigned char> buf(slots * slot_bytes, 0);
        std::size_t count = 0;
        mpz_export(buf.data(), &count, -1, 1, 0, 0, packed.get_mpz_t());
        return buf;
    };
    const std::vector<unsigned char> pbuf = unpack(plus);
    const std::vector<unsigned char> nbuf = unpack(minus);

    Poly2 r;
    mpz_class pc, nc;
    for (std::size_t s = 0; s < slots; ++s) {
        mpz_import(pc.get_mpz_t(), slot_bytes, -1, 1, 0, 0, pbuf.data() + s * slot_bytes);
        mpz_import(nc.get_mpz_t(), slot_bytes, -1, 1, 0, 0, nbuf.data() + s * slot_bytes);
        if (pc == nc) continue;
        const Mono m{static_cast<int>(s % px), static_cast<int>(s / px)};
        r.add_term(m, Rat(pc - nc));
    }
    return r;
}

}  // namespace

Poly2 Poly2::operator*(const Poly2& o) const {
    if (terms_.empty() || o.terms_.empty()) return {};
    check_budget(terms_.size() * o.terms_.size());
    if (terms_.size() >= 24 && o.terms_.size() >= 24) {
        mpz_class maxa, maxb;
        if (integer_coefficients(*this, maxa) && integer_coefficients(o, maxb))
            return kronecker_mul(*this, o, maxa, maxb);
    }
    // Sort-and-merge beats per-term map insertion on the sizes the series
    // engine produces.
    std::vector<std::pair<Mono, Rat>> parts;
    parts.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            parts.emplace_back(Mono{ma.dx + mb.dx, ma.dy + mb.dy}, ca * cb);
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        return MonoGradedLexDesc{}(a.first, b.first);
    });
    std::size_t w = 0;
    for (std::size_t i = 0; i < parts.size();) {
        Mono m = parts[i].first;
        Rat acc = std::move(parts[i].second);
        for (++i; i < parts.size() && parts[i].first == m; ++i) acc += parts[i].second;
        if (!rat_is_zero(acc)) parts[w++] = {m, std::move(acc)};
    }
    parts.resize(w);
    Poly2 r;
    r.terms_ = Terms(parts.begin(), parts.end());
    return r;
}

Poly2 Poly2::scaled(const Rat& c) const {
    Poly2 r;
    if (rat_is_zero(c)) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

Poly2 Poly2::derivative_x() const {
    Poly2 r;
    for (const auto& [m, c] : terms_)
        if (m.dx > 0) r.add_term({m.dx - 1, m.dy}, c * m.dx);
    return r;
}

Poly2 Poly2::derivative_y() const {
    Poly2 r;
    for (const auto& [m, c] : terms_)
        if (m.dy > 0) r.add_term({m.dx, m.dy - 1}, c * m.dy);
    return r;
}

Rat Poly2::eval(const Rat& x, const Rat& y) const {
    // Powers are memoized per call; degrees in this engine are modest.
    std::vector<Rat> px{Rat(1)}, py{Rat(1)};
    auto pow_of = [](std::vector<Rat>& cache, const Rat& base, int e) {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[e];
    };
    Rat acc(0);
    for (const auto& [m, c] : terms_) acc += c * pow_of(px, x, m.dx) * pow_of(py, y, m.dy);
    return acc;
}

Poly2 Poly2::div_exact(const Poly2& divisor) const {
    auto q = try_div_exact(divisor);
    if (!q) throw InternalGateViolation("inexact polynomial division");
    return std::move(*q);
}

std::optional<Poly2> Poly2::try_div_exact(const Poly2& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly2 rem = *this;
    Poly2 quot;
    const Mono dm = divisor.leading_mono();
    const Rat dc = divisor.leading_coeff();
    while (!rem.is_zero()) {
        const Mono rm = rem.leading_mono();
        if (rm.dx < dm.dx || rm.dy < dm.dy) return std::nullopt;
        const Mono qm{rm.dx - dm.dx, rm.dy - dm.dy};
        const Rat qc = rem.leading_coeff() / dc;
        quot.add_term(qm, qc);
        // subtract qc * x^qm * divisor in place
        for (const auto& [m, c] : divisor.terms_)
            rem.add_term({m.dx + qm.dx, m.dy + qm.dy}, -(qc * c));
    }
    return quot;
}

namespace {

// The gcd runs over Z[x][y] with primitive pseudo-remainder sequences:
// inputs are scaled to integer coefficients and every PRS step strips the
// Z[x]-content, which keeps coefficient heights polynomial. Rational
// coefficients come back only in the final monic normalization.

// Dense univariate polynomial over Z, little-endian.
using ZUni = std::vector<mpz_class>;

void zuni_trim(ZUni& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class zuni_content(const ZUni& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZUni zuni_scaled_down(ZUni p, const mpz_class& d) {
    if (d == 1) return p;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    return p;
}

ZUni zuni_mul(const ZUni& a, const ZUni& b) {
    if (a.empty() || b.empty()) return {};
    ZUni r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zuni_trim(r);
    return r;
}

// Fraction-free pseudo-remainder in Z[x].
ZUni zuni_prem(ZUni a, const ZUni& b) {
    while (a.size() >= b.size() && !a.empty()) {
        const mpz_class lca = a.back();
        const mpz_class lcb = b.back();
        const std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lcb;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lca * b[i];
        zuni_trim(a);
    }
    return a;
}

// Primitive PRS gcd in Z[x]; result is primitive times the content gcd.
ZUni zuni_gcd(ZUni a, ZUni b) {
    zuni_trim(a);
    zuni_trim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    const mpz_class ca = zuni_content(a);
    const mpz_class cb = zuni_content(b);
    mpz_class content;
    mpz_gcd(content.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = zuni_scaled_down(std::move(a), ca);
    b = zuni_scaled_down(std::move(b), cb);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ZUni r = zuni_prem(a, b);
        if (!r.empty()) r = zuni_scaled_down(std::move(r), zuni_content(r));
        a = std::move(b);
        b = std::move(r);
    }
    for (auto& c : a) c *= content;
    if (!a.empty() && a.back() < 0)
        for (auto& c : a) c = -c;
    return a;
}

// Exact quotient in Z[x].
ZUni zuni_div_exact(ZUni a, const ZUni& b) {
    ZUni q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpz_class(0));
    while (a.size() >= b.size() && !a.empty()) {
        mpz_class qc;
        mpz_divexact(qc.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
        const std::size_t shift = a.size() - b.size();
        q[shift] = qc;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= qc * b[i];
        zuni_trim(a);
    }
    if (!a.empty()) throw InternalGateViolation("inexact univariate division");
    zuni_trim(q);
    return q;
}

// Z[x][y]: coefficient of y^k at index k.
using ZPolyY = std::vector<ZUni>;

void zpoly_trim(ZPolyY& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

// Scales a rational polynomial to integer coefficients (times an irrelevant
// positive rational).
ZPolyY to_zpoly(const Poly2& p) {
    mpz_class lcm = 1;
    for (const auto& [m, c] : p.terms())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    ZPolyY r(static_cast<std::size_t>(p.degree_y()) + 1);
    for (const auto& [m, c] : p.terms()) {
        ZUni& u = r[m.dy];
        if (static_cast<int>(u.size()) <= m.dx) u.resize(m.dx + 1, mpz_class(0));
        u[m.dx] = c.get_num() * (lcm / c.get_den());
    }
    for (auto& u : r) zuni_trim(u);
    zpoly_trim(r);
    return r;
}

Poly2 from_zpoly(const ZPolyY& p) {
    Poly2 r;
    for (std::size_t dy = 0; dy < p.size(); ++dy)
        for (std::size_t dx = 0; dx < p[dy].size(); ++dx)
            if (p[dy][dx] != 0)
                r.add_term({static_cast<int>(dx), static_cast<int>(dy)}, Rat(p[dy][dx]));
    return r;
}

ZUni zpoly_content(const ZPolyY& p) {
    ZUni g;
    for (const auto& u : p) g = zuni_gcd(std::move(g), u);
    return g;
}

ZPolyY zpoly_div_content(ZPolyY p, const ZUni& content) {
    if (content.size() == 1) {
        for (auto& u : p) u = zuni_scaled_down(std::move(u), content[0]);
        return p;
    }
    for (auto& u : p)
        if (!u.empty()) u = zuni_div_exact(std::move(u), content);
    return p;
}

// Fraction-free pseudo-remainder in y over Z[x], with the leading
// coefficient multiplications done lazily step by step.
ZPolyY zpoly_prem(ZPolyY a, const ZPolyY& b) {
    const std::size_t db = b.size() - 1;
    const ZUni& lcb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t da = a.size() - 1;
        const ZUni lca = a.back();
        ZPolyY next(da);  // leading term cancels
        for (std::size_t i = 0; i < da; ++i) {
            ZUni left = i < a.size() ? zuni_mul(a[i], lcb) : ZUni{};
            ZUni right = i >= da - db ? zuni_mul(b[i - (da - db)], lca) : ZUni{};
            if (right.empty()) {
                next[i] = std::move(left);
            } else {
                if (left.size() < right.size()) left.resize(right.size(), mpz_class(0));
                for (std::size_t j = 0; j < right.size(); ++j) left[j] -= right[j];
                zuni_trim(left);
                next[i] = std::move(left);
            }
        }
        zpoly_trim(next);
        a = std::move(next);
    }
    return a;
}

// Primitive PRS gcd in Z[x][y].
ZPolyY zpoly_gcd(ZPolyY a, ZPolyY b) {
    zpoly_trim(a);
    zpoly_trim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;

    const ZUni content_a = zpoly_content(a);
    const ZUni content_b = zpoly_content(b);
    const ZUni content = zuni_gcd(content_a, content_b);
    a = zpoly_div_content(std::move(a), content_a);
    b = zpoly_div_content(std::move(b), content_b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ZPolyY r = zpoly_prem(std::move(a), b);
        zpoly_trim(r);
        if (!r.empty()) {
            const ZUni cr = zpoly_content(r);
            r = zpoly_div_content(std::move(r), cr);
        }
        a = std::move(b);
        b = std::move(r);
    }
    if (a.size() == 1) return ZPolyY{content};  // gcd free of y
    const ZUni ca = zpoly_content(a);
    ZPolyY pp = zpoly_div_content(std::move(a), ca);
    for (auto& u : pp) u = zuni_mul(u, content);
    return pp;
}

}  // namespace

Poly2 Poly2::gcd(const Poly2& a, const Poly2& b) {
    if (a.is_zero() && b.is_zero()) return Poly2();
    Poly2 g = from_zpoly(zpoly_gcd(to_zpoly(a), to_zpoly(b)));
    if (!g.is_zero()) g = g.scaled(Rat(1) / g.leading_coeff());  // monic
    return g;
}

mpz_class Poly2::eval_z(long x, long y) const {
    std::vector<mpz_class> px{1}, py{1};
    auto pow_of = [](std::vector<mpz_class>& cache, long base, int e) -> const mpz_class& {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[e];
    };
    mpz_class acc = 0;
    for (const auto& [m, c] : terms_) acc += c.get_num() * pow_of(px, x, m.dx) * pow_of(py, y, m.dy);
    return acc;
}

Rat Poly2::rational_content() const {
    if (terms_.empty()) return Rat(0);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat content(num_gcd, den_lcm);
    content.canonicalize();
    if (sgn(leading_coeff()) < 0) content = -content;
    return content;
}

std::string Poly2::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = sgn(c) < 0;
        const Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? "-" : "+";
        }
        std::string vars;
        if (m.dx > 0) vars += m.dx == 1 ? "x" : "x^" + std::to_string(m.dx);
        if (m.dy > 0) {
            if (!vars.empty()) vars += "*";
            vars += m.dy == 1 ? "y" : "y^" + std::to_string(m.dy);
        }
        if (vars.empty()) {
            out += rat_to_string(mag);
        } else if (mag == 1) {
            out += vars;
        } else {
            out += rat_to_string(mag) + "*" + vars;
        }
    }
    return out;
}

}  // namespace nccalc
