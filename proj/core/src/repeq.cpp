#include "nccalc/repeq.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>
#include <unordered_map>

#include "json.hpp"

namespace nccalc {

RepEnv RepEnv::derive(std::uint64_t master_seed, int k, int order, long bound, int trial) {
    RepEnv env;
    env.k = k;
    env.order = order;
    env.seed = mix64(mix64(mix64(master_seed) ^ static_cast<std::uint64_t>(k)) ^
                     static_cast<std::uint64_t>(trial));
    SplitMix rng(env.seed);
    env.s.assign(k, std::vector<long>(k));
    env.t.assign(k, std::vector<long>(k));
    for (auto& row : env.s)
        for (auto& v : row) v = rng.next_in(-bound, bound);
    for (auto& row : env.t)
        for (auto& v : row) v = rng.next_in(-bound, bound);
    return env;
}

std::string RepEnv::to_json() const {
    nlohmann::ordered_json j;
    j["k"] = k;
    j["N"] = order;
    j["seed"] = seed;
    j["S"] = s;
    j["T"] = t;
    return j.dump();
}

RepEnv RepEnv::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    RepEnv env;
    env.k = j.at("k").get<int>();
    env.order = j.at("N").get<int>();
    env.seed = j.at("seed").get<std::uint64_t>();
    env.s = j.at("S").get<std::vector<std::vector<long>>>();
    env.t = j.at("T").get<std::vector<std::vector<long>>>();
    return env;
}

// ---------------------------------------------------------------------------
// Internal evaluation engine.
//
// Coefficients are carried as a polynomial numerator over a denominator kept
// as a multiset of interned factors; the factor base is kept pairwise
// coprime (a gcd-free basis), splitting lazily when a new inversion
// numerator partially overlaps an old factor. Complete cancellation is then
// plain trial division by base factors and the only gcds ever computed are
// between the small inversion numerators at intern time. The public
// SeriesMatrix form is materialized only at the boundary.

namespace {

using DenExp = std::vector<std::pair<int, int>>;  // sorted (factor id, power)

struct FCoef {
    Poly2 num;
    Rat scale{1};  // rational multiplier kept off the polynomial
    DenExp den;

    bool is_zero() const { return num.is_zero(); }
};

class Session {
  public:
    Session(ExprStore&, const RepEnv& env) : env_(env) {}

    // k x k x (order+1) coefficient grid for the DAG node, memoized.
    const std::vector<FCoef>& eval(NCExpr e);

    SeriesMatrix materialize(const std::vector<FCoef>& m) const;

    /// CommRat value of one coefficient.
    CommRat value(const FCoef& c) const;

    /// Exact equality of two coefficients.
    bool coef_equal(const FCoef& a, const FCoef& b) const;

  private:
    FCoef& at(std::vector<FCoef>& m, int i, int j, int d) const {
        return m[(i * env_.k + j) * (env_.order + 1) + d];
    }
    const FCoef& at(const std::vector<FCoef>& m, int i, int j, int d) const {
        return m[(i * env_.k + j) * (env_.order + 1) + d];
    }

    /// Factors a primitive polynomial over the base (splitting on partial
    /// overlap) and accumulates the leaf exponents.
    void factor_den(Poly2 f, std::map<int, int>& out);
    int intern_leaf(const Poly2& primitive);
    void split_factor(int id, const Poly2& divisor);
    void expand_into(int id, int pow, std::map<int, int>& acc) const;
    /// Rewrites a denominator over the current leaves; identity when no
    /// split has happened.
    DenExp normalize_den(const DenExp& d) const;
    const Poly2& den_product(const DenExp& den);

    void cancel(FCoef& c);
    FCoef fmul(const FCoef& a, const FCoef& b) const;
    FCoef fsum(std::vector<FCoef> terms);
    FCoef fneg(FCoef c) const;
    FCoef finv_scalar(const FCoef& c);

    std::vector<FCoef> grid() const {
        return std::vector<FCoef>(env_.k * env_.k * (env_.order + 1));
    }

    std::vector<FCoef> minverse(const std::vector<FCoef>& a);

    struct Factor {
        Poly2 poly;            // primitive integer coefficients, positive lead
        mpz_class value;       // at the filter point
        std::vector<int> split;  // non-empty: decomposed into these ids
    };

    const RepEnv& env_;
    std::vector<Factor> factors_;
    bool any_split_ = false;
    std::map<std::string, int> factor_index_;
    std::map<DenExp, Poly2> product_cache_;
    std::unordered_map<NodeId, std::vector<FCoef>> memo_;
};

Poly2 make_primitive(const Poly2& p) {
    const Rat content = p.rational_content();
    return content == 1 ? p : p.scaled(Rat(1) / content);
}

// Filter point for divisibility pre-checks: f | g over Z[x,y] forces
// f(pt) | g(pt) over Z, so a failing integer division certifies "does not
// divide" without running the polynomial division.
constexpr long kFilterX = 73;
constexpr long kFilterY = -59;

int Session::intern_leaf(const Poly2& primitive) {
    const std::string key = primitive.str();
    auto it = factor_index_.find(key);
    if (it != factor_index_.end()) return it->second;
    factors_.push_back({primitive, primitive.eval_z(kFilterX, kFilterY), {}});
    factor_index_.emplace(key, static_cast<int>(factors_.size() - 1));
    return static_cast<int>(factors_.size() - 1);
}

void Session::split_factor(int id, const Poly2& divisor) {
    const Poly2 rest = make_primitive(factors_[id].poly.div_exact(divisor));
    const int gid = intern_leaf(divisor);
    const int rid = intern_leaf(rest);
    factors_[id].split = {gid, rid};
    any_split_ = true;
}

void Session::expand_into(int id, int pow, std::map<int, int>& acc) const {
    const auto& split = factors_[id].split;
    if (split.empty()) {
        acc[id] += pow;
        return;
    }
    for (const int child : split) expand_into(child, pow, acc);
}

DenExp Session::normalize_den(const DenExp& d) const {
    if (!any_split_) return d;
    std::map<int, int> acc;
    for (const auto& [id, pow] : d) expand_into(id, pow, acc);
    return DenExp(acc.begin(), acc.end());
}

void Session::factor_den(Poly2 f, std::map<int, int>& out) {
    // One forward pass: split children are appended and visited in turn,
    // and divisibility only decreases as f shrinks.
    for (int id = 0; id < static_cast<int>(factors_.size()) && !f.is_constant(); ++id) {
        if (!factors_[id].split.empty()) continue;
        for (;;) {
            const Poly2 g = Poly2::gcd(f, factors_[id].poly);
            if (g.is_constant()) break;
            const Poly2 gp = make_primitive(g);
            if (gp == factors_[id].poly) {
                f = make_primitive(f.div_exact(gp));
                out[id] += 1;  // again: the factor may divide with multiplicity
            } else {
                split_factor(id, gp);
                break;  // id is decomposed; its children lie ahead in the scan
            }
        }
    }
    if (!f.is_constant()) out[intern_leaf(make_primitive(f))] += 1;
}

const Poly2& Session::den_product(const DenExp& den) {
    auto it = product_cache_.find(den);
    if (it != product_cache_.end()) return it->second;
    Poly2 p = Poly2::constant(1);
    for (const auto& [id, pow] : den)
        for (int i = 0; i < pow; ++i) p = p * factors_[id].poly;
    return product_cache_.emplace(den, std::move(p)).first->second;
}

void Session::cancel(FCoef& c) {
    if (c.num.is_zero()) {
        c.den.clear();
        c.scale = 1;
        return;
    }
    c.den = normalize_den(c.den);
    bool have_value = false;
    mpz_class num_value;
    for (auto& [id, pow] : c.den) {
        while (pow > 0) {
            const mpz_class& fv = factors_[id].value;
            if (fv != 0) {
                if (!have_value) {
                    num_value = c.num.eval_z(kFilterX, kFilterY);
                    have_value = true;
                }
                if (!mpz_divisible_p(num_value.get_mpz_t(), fv.get_mpz_t())) break;
            }
            auto q = c.num.try_div_exact(factors_[id].poly);
            if (!q) break;
            c.num = std::move(*q);
            have_value = false;
            --pow;
        }
    }
    std::erase_if(c.den, [](const auto& e) { return e.second == 0; });
    // primitive integer coefficients: fold the content into the scale
    const Rat content = c.num.rational_content();
    if (content != 1) {
        c.num = c.num.scaled(Rat(1) / content);
        c.scale *= content;
    }
}

FCoef Session::fmul(const FCoef& a, const FCoef& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    FCoef r;
    r.num = a.num * b.num;
    r.scale = a.scale * b.scale;
    r.den = normalize_den(a.den);
    for (const auto& [id, pow] : normalize_den(b.den)) {
        auto it = std::lower_bound(r.den.begin(), r.den.end(), std::make_pair(id, 0),
                                   [](const auto& x, const auto& y) { return x.first < y.first; });
        if (it != r.den.end() && it->first == id) it->second += pow;
        else r.den.insert(it, {id, pow});
    }
    return r;
}

FCoef Session::fneg(FCoef c) const {
    c.scale = -c.scale;
    return c;
}

namespace {

DenExp den_lcm(const DenExp& a, const DenExp& b) {
    DenExp r;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) r.push_back(*ia++);
        else if (ia == a.end() || ib->first < ia->first) r.push_back(*ib++);
        else {
            r.push_back({ia->first, std::max(ia->second, ib->second)});
            ++ia;
            ++ib;
        }
    }
    return r;
}

DenExp den_minus(const DenExp& a, const DenExp& b) {
    DenExp r;
    auto ib = b.begin();
    for (const auto& [id, pow] : a) {
        while (ib != b.end() && ib->first < id) ++ib;
        const int sub = (ib != b.end() && ib->first == id) ? ib->second : 0;
        if (pow - sub > 0) r.push_back({id, pow - sub});
    }
    return r;
}

}  // namespace

FCoef Session::fsum(std::vector<FCoef> terms) {
    std::erase_if(terms, [](const FCoef& t) { return t.is_zero(); });
    if (terms.empty()) return {};
    if (terms.size() == 1) {
        FCoef r = std::move(terms.front());
        cancel(r);
        return r;
    }
    // Neighboring denominators after sorting differ by few factor powers, so
    // the incremental fold multiplies by small cofactors instead of scaling
    // every term up to the full common denominator at once.
    for (auto& t : terms) t.den = normalize_den(t.den);
    std::sort(terms.begin(), terms.end(),
              [](const FCoef& a, const FCoef& b) { return a.den < b.den; });
    FCoef acc = std::move(terms.front());
    Poly2 num = acc.num.scaled(acc.scale);
    for (std::size_t i = 1; i < terms.size(); ++i) {
        const FCoef& t = terms[i];
        const DenExp lcm = den_lcm(acc.den, t.den);
        const DenExp up_acc = den_minus(lcm, acc.den);
        const DenExp up_t = den_minus(lcm, t.den);
        if (!up_acc.empty()) num = num * den_product(up_acc);
        Poly2 tn = t.num.scaled(t.scale);
        if (!up_t.empty()) tn = tn * den_product(up_t);
        num += tn;
        acc.den = lcm;
    }
    acc.num = std::move(num);
    acc.scale = 1;
    cancel(acc);
    return acc;
}

FCoef Session::finv_scalar(const FCoef& c) {
    // Full reduction once per inversion, then the reduced numerator enters
    // the gcd-free base; nested inversions cannot compound partial factors.
    const CommRat v = value(c).reduced();
    FCoef r;
    r.num = v.den();
    if (v.num().is_constant()) {
        r.scale = Rat(1) / v.num().constant_term();
    } else {
        const Rat content = v.num().rational_content();
        r.scale = Rat(1) / content;
        std::map<int, int> den;
        factor_den(v.num().scaled(Rat(1) / content), den);
        r.den = DenExp(den.begin(), den.end());
    }
    cancel(r);
    return r;
}

std::vector<FCoef> Session::minverse(const std::vector<FCoef>& a) {
    const int k = env_.k;
    const int n = env_.order;
    // gated expressions have scalar epsilon^0 term
    bool scalar = true;
    for (int i = 0; i < k && scalar; ++i)
        for (int j = 0; j < k && scalar; ++j) {
            if (i == j) scalar = coef_equal(at(a, i, i, 0), at(a, 0, 0, 0));
            else scalar = at(a, i, j, 0).is_zero();
        }
    if (!scalar) {
        // general path through the public exact inverse
        const SeriesMatrix inv = mat_inverse(materialize(a));
        std::vector<FCoef> r = grid();
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                for (int d = 0; d <= n; ++d) {
                    const CommRat& v = inv.at(i, j).at(d);
                    if (v.is_zero()) continue;
                    FCoef c;
                    c.num = v.num();
                    if (!v.den().is_constant() || v.den().constant_term() != 1) {
                        const Rat content = v.den().rational_content();
                        c.scale = Rat(1) / content;
                        std::map<int, int> den;
                        factor_den(v.den().scaled(Rat(1) / content), den);
                        c.den = DenExp(den.begin(), den.end());
                    }
                    cancel(c);
                    at(r, i, j, d) = std::move(c);
                }
        return r;
    }
    const FCoef& c0 = at(a, 0, 0, 0);
    if (c0.is_zero()) throw SingularConstantTerm("constant-term matrix is singular");
    const FCoef s0inv = finv_scalar(c0);

    // B_0 = s0inv * Id; B_m = -s0inv * sum_{j=1..m} A_j B_{m-j}
    std::vector<FCoef> b = grid();
    for (int i = 0; i < k; ++i) at(b, i, i, 0) = s0inv;
    for (int m = 1; m <= n; ++m) {
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                std::vector<FCoef> terms;
                for (int d = 1; d <= m; ++d)
                    for (int l = 0; l < k; ++l) {
                        const FCoef& aj = at(a, i, l, d);
                        const FCoef& bk = at(b, l, j, m - d);
                        if (aj.is_zero() || bk.is_zero()) continue;
                        terms.push_back(fmul(aj, bk));
                    }
                FCoef s = fsum(std::move(terms));
                if (!s.is_zero()) at(b, i, j, m) = fneg(fmul(s0inv, s));
            }
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) cancel(at(b, i, j, m));
    }
    return b;
}

const std::vector<FCoef>& Session::eval(NCExpr e) {
    auto it = memo_.find(e.id());
    if (it != memo_.end()) return it->second;
    const int k = env_.k;
    std::vector<FCoef> result = grid();
    switch (e.kind()) {
        case NodeKind::Const:
            for (int i = 0; i < k; ++i) {
                FCoef& c = at(result, i, i, 0);
                if (e.value() != 0) {
                    c.num = Poly2::constant(1);
                    c.scale = e.value();
                }
            }
            break;
        case NodeKind::VarX:
        case NodeKind::VarY: {
            const bool is_x = e.kind() == NodeKind::VarX;
            const auto& pert = is_x ? env_.s : env_.t;
            for (int i = 0; i < k; ++i) {
                FCoef& c = at(result, i, i, 0);
                c.num = is_x ? Poly2::var_x() : Poly2::var_y();
                for (int j = 0; j < k; ++j)
                    if (pert[i][j] != 0 && env_.order >= 1) {
                        FCoef& p = at(result, i, j, 1);
                        p.num = Poly2::constant(1);
                        p.scale = Rat(pert[i][j]);
                    }
            }
            break;
        }
        case NodeKind::Add: {
            const auto& a = eval(e.child(0));
            const auto& b = eval(e.child(1));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    for (int d = 0; d <= env_.order; ++d)
                        at(result, i, j, d) = fsum({at(a, i, j, d), at(b, i, j, d)});
            break;
        }
        case NodeKind::Neg: {
            const auto& a = eval(e.child(0));
            for (std::size_t idx = 0; idx < a.size(); ++idx) result[idx] = fneg(a[idx]);
            break;
        }
        case NodeKind::Mul: {
            const auto& a = eval(e.child(0));
            const auto& b = eval(e.child(1));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    for (int d = 0; d <= env_.order; ++d) {
                        std::vector<FCoef> terms;
                        for (int l = 0; l < k; ++l)
                            for (int da = 0; da <= d; ++da) {
                                const FCoef& ca = at(a, i, l, da);
                                const FCoef& cb = at(b, l, j, d - da);
                                if (ca.is_zero() || cb.is_zero()) continue;
                                terms.push_back(fmul(ca, cb));
                            }
                        at(result, i, j, d) = fsum(std::move(terms));
                    }
            break;
        }
        case NodeKind::Inv:
            try {
                result = minverse(eval(e.child(0)));
            } catch (const SingularConstantTerm&) {
                throw InternalGateViolation("gated inverse represented singularly");
            }
            break;
    }
    return memo_.emplace(e.id(), std::move(result)).first->second;
}

CommRat Session::value(const FCoef& c) const {
    if (c.is_zero()) return CommRat();
    Poly2 den = Poly2::constant(1);
    for (const auto& [id, pow] : normalize_den(c.den))
        for (int i = 0; i < pow; ++i) den = den * factors_[id].poly;
    return CommRat(c.num.scaled(c.scale), std::move(den));
}

bool Session::coef_equal(const FCoef& a, const FCoef& b) const {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    // cross-multiply by the denominator difference
    const DenExp da = normalize_den(a.den);
    const DenExp db = normalize_den(b.den);
    DenExp only_a, only_b;
    auto ia = da.begin();
    auto ib = db.begin();
    while (ia != da.end() || ib != db.end()) {
        if (ib == db.end() || (ia != da.end() && ia->first < ib->first)) {
            only_a.push_back(*ia++);
        } else if (ia == da.end() || ib->first < ia->first) {
            only_b.push_back(*ib++);
        } else {
            const int diff = ia->second - ib->second;
            if (diff > 0) only_a.push_back({ia->first, diff});
            else if (diff < 0) only_b.push_back({ib->first, -diff});
            ++ia;
            ++ib;
        }
    }
    Poly2 lhs = a.num.scaled(a.scale);
    Poly2 rhs = b.num.scaled(b.scale);
    // multiply each side by the factors missing from its own denominator
    for (const auto& [id, pow] : only_b)
        for (int i = 0; i < pow; ++i) lhs = lhs * factors_[id].poly;
    for (const auto& [id, pow] : only_a)
        for (int i = 0; i < pow; ++i) rhs = rhs * factors_[id].poly;
    return lhs == rhs;
}

SeriesMatrix Session::materialize(const std::vector<FCoef>& m) const {
    SeriesMatrix out(env_.k, env_.order);
    for (int i = 0; i < env_.k; ++i)
        for (int j = 0; j < env_.k; ++j)
            for (int d = 0; d <= env_.order; ++d)
                out.at(i, j).at(d) = value(at(m, i, j, d));
    return out;
}

}  // namespace

SeriesMatrix represent(NCExpr e, const RepEnv& env) {
    Session session(e.store(), env);
    return session.materialize(session.eval(e));
}

std::vector<SeriesMatrix> represent_many(ExprStore& store, const std::vector<NCExpr>& exprs,
                                         const RepEnv& env) {
    Session session(store, env);
    std::vector<SeriesMatrix> out;
    out.reserve(exprs.size());
    for (const auto& e : exprs) out.push_back(session.materialize(session.eval(e)));
    return out;
}

std::string EqVerdict::witness_json() const {
    nlohmann::ordered_json j;
    j["k"] = witness_env.k;
    j["N"] = witness_env.order;
    j["seed"] = witness_env.seed;
    j["S"] = witness_env.s;
    j["T"] = witness_env.t;
    j["position"] = {witness_row, witness_col};
    j["epsilon_degree"] = witness_epsilon_degree;
    return j.dump();
}

namespace {

/// First discrepancy in row-major position order, then ascending epsilon
/// degree. Returns false when the grids agree exactly.
bool first_difference(Session& session, const std::vector<FCoef>& a, const std::vector<FCoef>& b,
                      int k, int order, int& row, int& col, int& deg) {
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int d = 0; d <= order; ++d) {
                const std::size_t idx = (i * k + j) * (order + 1) + d;
                if (!session.coef_equal(a[idx], b[idx])) {
                    row = i;
                    col = j;
                    deg = d;
                    return true;
                }
            }
    return false;
}

}  // namespace

std::vector<EqVerdict> eq_nc_pairs(ExprStore& store,
                                   const std::vector<std::pair<NCExpr, NCExpr>>& pairs,
                                   const EqConfig& cfg) {
    std::vector<EqVerdict> verdicts(pairs.size());
    std::vector<bool> open(pairs.size(), false);
    std::size_t open_count = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].first.id() == pairs[i].second.id()) continue;  // interned: equal
        const CommRat diff = store.commutativize(pairs[i].first) - store.commutativize(pairs[i].second);
        if (!diff.is_zero()) {
            verdicts[i].tag = EqVerdict::Tag::CommDistinct;
            verdicts[i].comm_difference = diff.reduced();
        } else {
            open[i] = true;
            ++open_count;
        }
    }

    // Trials are independent; waves of them run in parallel and the
    // harvest in task order keeps the reported witness the lowest (size,
    // trial) one, independent of scheduling.
    struct TrialDiff {
        std::size_t pair_index;
        int row, col, deg;
    };
    std::vector<RepEnv> envs;
    for (int k : cfg.sizes)
        for (int trial = 0; trial < cfg.trials; ++trial)
            envs.push_back(RepEnv::derive(cfg.seed, k, cfg.order, cfg.bound, trial));

    const unsigned wave =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(envs.size())));
    int trials_done = 0;
    for (std::size_t base = 0; base < envs.size() && open_count > 0; base += wave) {
        const std::size_t end = std::min(envs.size(), base + wave);
        const std::vector<bool> open_snapshot = open;  // tasks read, harvest writes
        std::vector<std::future<std::vector<TrialDiff>>> futures;
        for (std::size_t t = base; t < end; ++t) {
            futures.push_back(std::async(std::launch::async, [&, t] {
                Session session(store, envs[t]);
                std::vector<TrialDiff> diffs;
                for (std::size_t i = 0; i < pairs.size(); ++i) {
                    if (!open_snapshot[i]) continue;
                    const auto& lhs = session.eval(pairs[i].first);
                    const auto& rhs = session.eval(pairs[i].second);
                    int row, col, deg;
                    if (first_difference(session, lhs, rhs, envs[t].k, envs[t].order, row, col,
                                         deg))
                        diffs.push_back({i, row, col, deg});
                }
                return diffs;
            }));
        }
        for (std::size_t t = base; t < end; ++t) {
            const auto diffs = futures[t - base].get();
            ++trials_done;
            for (const auto& d : diffs) {
                if (!open[d.pair_index]) continue;
                EqVerdict& v = verdicts[d.pair_index];
                v.tag = EqVerdict::Tag::NCDistinct;
                v.witness_env = envs[t];
                v.witness_row = d.row;
                v.witness_col = d.col;
                v.witness_epsilon_degree = d.deg;
                open[d.pair_index] = false;
                --open_count;
            }
        }
    }

    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (verdicts[i].tag == EqVerdict::Tag::ProbablyEqual)
            verdicts[i].trials_performed = trials_done;
    return verdicts;
}

EqVerdict eq_nc(ExprStore& store, NCExpr e1, NCExpr e2, const EqConfig& cfg) {
    return eq_nc_pairs(store, {{e1, e2}}, cfg).front();
}

bool replay_witness(ExprStore& store, NCExpr e1, NCExpr e2, const EqVerdict& verdict) {
    if (verdict.tag != EqVerdict::Tag::NCDistinct) return false;
    Session session(store, verdict.witness_env);
    const auto& lhs = session.eval(e1);
    const auto& rhs = session.eval(e2);
    int row, col, deg;
    if (!first_difference(session, lhs, rhs, verdict.witness_env.k, verdict.witness_env.order,
                          row, col, deg))
        return false;
    return row == verdict.witness_row && col == verdict.witness_col &&
           deg == verdict.witness_epsilon_degree;
}

}  // namespace nccalc
