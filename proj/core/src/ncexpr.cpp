#include "nccalc/ncexpr.hpp"

#include <utility>

namespace nccalc {

NodeKind NCExpr::kind() const { return store_->nodes_[id_].kind; }

NCExpr NCExpr::child(int i) const {
    const auto& n = store_->nodes_[id_];
    return NCExpr(store_, i == 0 ? n.a : n.b);
}

const Rat& NCExpr::value() const { return store_->nodes_[id_].value; }

NCExpr NCExpr::operator+(const NCExpr& o) const { return store_->add(*this, o); }
NCExpr NCExpr::operator-(const NCExpr& o) const { return store_->sub(*this, o); }
NCExpr NCExpr::operator*(const NCExpr& o) const { return store_->mul(*this, o); }
NCExpr NCExpr::operator-() const { return store_->neg(*this); }

ExprStore::ExprStore(std::size_t node_budget) : node_budget_(node_budget) {
    // Pre-interned atoms at fixed ids.
    append({NodeKind::Const, 0, 0, Rat(0)});
    append({NodeKind::Const, 0, 0, Rat(1)});
    append({NodeKind::VarX, 0, 0, Rat(0)});
    append({NodeKind::VarY, 0, 0, Rat(0)});
    const_table_.emplace(Rat(0), kConstZero);
    const_table_.emplace(Rat(1), kConstOne);
}

NodeId ExprStore::append(Node node) {
    if (nodes_.size() >= node_budget_)
        throw BudgetExceeded("expression store node budget exceeded: " +
                             std::to_string(node_budget_));
    nodes_.push_back(std::move(node));
    comm_cache_.emplace_back();
    normalize_cache_.push_back(kUnset);
    reverse_cache_.push_back(kUnset);
    return static_cast<NodeId>(nodes_.size() - 1);
}

NCExpr ExprStore::constant(const Rat& c) {
    auto it = const_table_.find(c);
    if (it != const_table_.end()) return NCExpr(this, it->second);
    const NodeId id = append({NodeKind::Const, 0, 0, c});
    const_table_.emplace(c, id);
    return NCExpr(this, id);
}

NodeId ExprStore::intern_op(NodeKind kind, NodeId a, NodeId b) {
    const OpKey key{kind, a, b};
    auto it = op_table_.find(key);
    if (it != op_table_.end()) return it->second;
    const NodeId id = append({kind, a, b, Rat(0)});
    op_table_.emplace(key, id);
    return id;
}

NCExpr ExprStore::add(NCExpr a, NCExpr b) {
    NodeId l = a.id(), r = b.id();
    if (l > r) std::swap(l, r);  // additive commutativity, canonical by id
    return NCExpr(this, intern_op(NodeKind::Add, l, r));
}

NCExpr ExprStore::mul(NCExpr a, NCExpr b) {
    return NCExpr(this, intern_op(NodeKind::Mul, a.id(), b.id()));
}

NCExpr ExprStore::neg(NCExpr a) { return NCExpr(this, intern_op(NodeKind::Neg, a.id(), 0)); }

NCExpr ExprStore::inv(NCExpr a) {
    if (commutativize(a).is_zero())
        throw CommutatorInverse("operand lies in the commutator ideal; no inverse exists");
    return inv_unchecked(a);
}

NCExpr ExprStore::inv_unchecked(NCExpr a) {
    return NCExpr(this, intern_op(NodeKind::Inv, a.id(), 0));
}

const CommRat& ExprStore::commutativize(NCExpr e) {
    const NodeId root = e.id();
    // Explicit work stack: DAGs produced by elimination get deep.
    std::vector<NodeId> stack{root};
    while (!stack.empty()) {
        const NodeId id = stack.back();
        if (comm_cache_[id].has_value()) {
            stack.pop_back();
            continue;
        }
        const Node& n = nodes_[id];
        switch (n.kind) {
            case NodeKind::Const:
                comm_cache_[id] = CommRat(n.value);
                stack.pop_back();
                break;
            case NodeKind::VarX:
                comm_cache_[id] = CommRat::var_x();
                stack.pop_back();
                break;
            case NodeKind::VarY:
                comm_cache_[id] = CommRat::var_y();
                stack.pop_back();
                break;
            case NodeKind::Neg:
            case NodeKind::Inv:
                if (!comm_cache_[n.a].has_value()) {
                    stack.push_back(n.a);
                    break;
                }
                if (n.kind == NodeKind::Neg) {
                    comm_cache_[id] = -*comm_cache_[n.a];
                } else {
                    if (comm_cache_[n.a]->is_zero())
                        throw InternalGateViolation("inverse gate violated during commutativization");
                    comm_cache_[id] = comm_cache_[n.a]->inv();
                }
                stack.pop_back();
                break;
            case NodeKind::Add:
            case NodeKind::Mul: {
                const bool need_a = !comm_cache_[n.a].has_value();
                const bool need_b = !comm_cache_[n.b].has_value();
                if (need_a || need_b) {
                    if (need_a) stack.push_back(n.a);
                    if (need_b) stack.push_back(n.b);
                    break;
                }
                comm_cache_[id] = n.kind == NodeKind::Add
                                      ? *comm_cache_[n.a] + *comm_cache_[n.b]
                                      : *comm_cache_[n.a] * *comm_cache_[n.b];
                stack.pop_back();
                break;
            }
        }
    }
    return *comm_cache_[root];
}

NCExpr ExprStore::normalize(NCExpr e) {
    const NodeId id = e.id();
    if (normalize_cache_[id] != kUnset) return NCExpr(this, normalize_cache_[id]);

    const Node n = nodes_[id];
    NCExpr result = e;
    switch (n.kind) {
        case NodeKind::Const:
        case NodeKind::VarX:
        case NodeKind::VarY:
            break;
        case NodeKind::Add: {
            const NCExpr a = normalize(NCExpr(this, n.a));
            const NCExpr b = normalize(NCExpr(this, n.b));
            if (a.id() == kConstZero) {
                result = b;
            } else if (b.id() == kConstZero) {
                result = a;
            } else if (a.kind() == NodeKind::Const && b.kind() == NodeKind::Const) {
                result = constant(a.value() + b.value());
            } else {
                result = add(a, b);
            }
            break;
        }
        case NodeKind::Mul: {
            const NCExpr a = normalize(NCExpr(this, n.a));
            const NCExpr b = normalize(NCExpr(this, n.b));
            if (a.id() == kConstZero || b.id() == kConstZero) {
                result = NCExpr(this, kConstZero);
            } else if (a.id() == kConstOne) {
                result = b;
            } else if (b.id() == kConstOne) {
                result = a;
            } else if (a.kind() == NodeKind::Const && b.kind() == NodeKind::Const) {
                result = constant(a.value() * b.value());
            } else {
                result = mul(a, b);
            }
            break;
        }
        case NodeKind::Neg: {
            const NCExpr a = normalize(NCExpr(this, n.a));
            switch (a.kind()) {
                case NodeKind::Const:
                    result = constant(-a.value());
                    break;
                case NodeKind::Neg:
                    result = a.child(0);
                    break;
                case NodeKind::Add:
                    result = normalize(add(neg(a.child(0)), neg(a.child(1))));
                    break;
                case NodeKind::Mul:
                    // Push the sign into the left factor, toward coefficients.
                    result = normalize(mul(neg(a.child(0)), a.child(1)));
                    break;
                default:
                    result = neg(a);
            }
            break;
        }
        case NodeKind::Inv: {
            const NCExpr a = normalize(NCExpr(this, n.a));
            if (a.kind() == NodeKind::Inv) {
                result = a.child(0);
            } else if (a.kind() == NodeKind::Const) {
                result = constant(Rat(1) / a.value());  // gate guarantees nonzero
            } else {
                result = inv_unchecked(a);
            }
            break;
        }
    }
    normalize_cache_[id] = result.id();
    // A normal form is its own normal form.
    if (normalize_cache_[result.id()] == kUnset) normalize_cache_[result.id()] = result.id();
    return result;
}

NCExpr ExprStore::reverse(NCExpr e) {
    const NodeId id = e.id();
    if (reverse_cache_[id] != kUnset) return NCExpr(this, reverse_cache_[id]);

    const Node n = nodes_[id];
    NCExpr result = e;
    switch (n.kind) {
        case NodeKind::Const:
        case NodeKind::VarX:
        case NodeKind::VarY:
            break;
        case NodeKind::Add:
            result = add(reverse(NCExpr(this, n.a)), reverse(NCExpr(this, n.b)));
            break;
        case NodeKind::Mul:
            result = mul(reverse(NCExpr(this, n.b)), reverse(NCExpr(this, n.a)));
            break;
        case NodeKind::Neg:
            result = neg(reverse(NCExpr(this, n.a)));
            break;
        case NodeKind::Inv:
            // phi is fixed by reversal, so the gate transports.
            result = inv_unchecked(reverse(NCExpr(this, n.a)));
            break;
    }
    reverse_cache_[id] = result.id();
    return result;
}

NCExpr ExprStore::substitute(NCExpr e, NCExpr img_x, NCExpr img_y) {
    if (jacobian_det(commutativize(img_x), commutativize(img_y)).is_zero())
        throw DependentImages("substitution images are algebraically dependent");

    std::unordered_map<NodeId, NodeId> memo;
    // Recursive rebuild with per-call memoization over the DAG.
    auto rec = [&](auto&& self, NodeId id) -> NodeId {
        auto it = memo.find(id);
        if (it != memo.end()) return it->second;
        const Node n = nodes_[id];
        NCExpr result(this, id);
        switch (n.kind) {
            case NodeKind::Const:
                break;
            case NodeKind::VarX:
                result = img_x;
                break;
            case NodeKind::VarY:
                result = img_y;
                break;
            case NodeKind::Add:
                result = add(NCExpr(this, self(self, n.a)), NCExpr(this, self(self, n.b)));
                break;
            case NodeKind::Mul:
                result = mul(NCExpr(this, self(self, n.a)), NCExpr(this, self(self, n.b)));
                break;
            case NodeKind::Neg:
                result = neg(NCExpr(this, self(self, n.a)));
                break;
            case NodeKind::Inv: {
                const NCExpr sub(this, self(self, n.a));
                if (commutativize(sub).is_zero())
                    throw InternalGateViolation(
                        "substituted inverse operand commutativizes to zero");
                result = inv_unchecked(sub);
                break;
            }
        }
        memo.emplace(id, result.id());
        return result.id();
    };
    return NCExpr(this, rec(rec, e.id()));
}

}  // namespace nccalc
