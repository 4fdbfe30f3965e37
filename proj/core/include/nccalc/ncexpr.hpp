#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "nccalc/commrat.hpp"

namespace nccalc {

class ExprStore;

enum class NodeKind : std::uint8_t { Const, VarX, VarY, Add, Neg, Mul, Inv };

using NodeId = std::uint32_t;

/// Handle into an ExprStore. Structural equality of subterms coincides with
/// handle equality (hash-consing), so == is O(1).
class NCExpr {
  public:
    NCExpr() : store_(nullptr), id_(0) {}
    NCExpr(ExprStore* store, NodeId id) : store_(store), id_(id) {}

    NodeId id() const { return id_; }
    ExprStore& store() const { return *store_; }
    bool valid() const { return store_ != nullptr; }

    NodeKind kind() const;
    /// Children; only Add/Mul have two, Neg/Inv one.
    NCExpr child(int i) const;
    /// Constant payload; only valid on Const nodes.
    const Rat& value() const;

    bool operator==(const NCExpr& o) const { return store_ == o.store_ && id_ == o.id_; }
    bool operator!=(const NCExpr& o) const { return !(*this == o); }

    NCExpr operator+(const NCExpr& o) const;
    NCExpr operator-(const NCExpr& o) const;
    NCExpr operator*(const NCExpr& o) const;
    NCExpr operator-() const;

  private:
    ExprStore* store_;
    NodeId id_;
};

/// Append-only interning store for expression DAGs. Interning is injective:
/// building the same shape twice returns the same id. Construction must be
/// externally serialized; queries on existing nodes may run concurrently
/// with each other.
class ExprStore {
  public:
    explicit ExprStore(std::size_t node_budget = 1u << 22);

    NCExpr constant(const Rat& c);
    NCExpr constant(long c) { return constant(Rat(c)); }
    NCExpr var_x() { return NCExpr(this, kVarX); }
    NCExpr var_y() { return NCExpr(this, kVarY); }

    /// Interned Add with operands canonically ordered by node id; Mul is
    /// never reordered.
    NCExpr add(NCExpr a, NCExpr b);
    NCExpr mul(NCExpr a, NCExpr b);
    NCExpr neg(NCExpr a);
    NCExpr sub(NCExpr a, NCExpr b) { return add(a, neg(b)); }

    /// Guarded inversion: admitted only when the commutativization of the
    /// operand is nonzero, i.e. the operand lies outside the commutator
    /// ideal. Throws CommutatorInverse otherwise.
    NCExpr inv(NCExpr a);

    /// phi: the homomorphism onto Q(x,y) sending x,y to commuting variables.
    /// Memoized per node for the lifetime of the store.
    const CommRat& commutativize(NCExpr e);

    /// Confluent local rewrites: constant folding, 0/1 units, negation pushed
    /// toward coefficients, inv(inv(e)) = e, inv(const) folded, Add operand
    /// ordering. phi-preserving and idempotent.
    NCExpr normalize(NCExpr e);

    /// The reversal anti-automorphism: fixes x, y and constants, reverses
    /// every product, commutes with Add, Neg and Inv. Involutive.
    NCExpr reverse(NCExpr e);

    /// Endomorphism sending x -> img_x, y -> img_y. Requires the commutative
    /// images to be algebraically independent (nonzero Jacobian determinant);
    /// throws DependentImages otherwise. All inversion gates transport.
    NCExpr substitute(NCExpr e, NCExpr img_x, NCExpr img_y);

    std::size_t node_count() const { return nodes_.size(); }

    static constexpr NodeId kConstZero = 0;
    static constexpr NodeId kConstOne = 1;
    static constexpr NodeId kVarX = 2;
    static constexpr NodeId kVarY = 3;

  private:
    friend class NCExpr;

    struct Node {
        NodeKind kind;
        NodeId a = 0;
        NodeId b = 0;
        Rat value;  // Const only
    };

    struct OpKey {
        NodeKind kind;
        NodeId a;
        NodeId b;
        bool operator==(const OpKey&) const = default;
    };
    struct OpKeyHash {
        std::size_t operator()(const OpKey& k) const {
            std::uint64_t h = mix64((static_cast<std::uint64_t>(k.a) << 32) | k.b);
            return static_cast<std::size_t>(mix64(h ^ static_cast<std::uint64_t>(k.kind)));
        }
    };

    NodeId intern_op(NodeKind kind, NodeId a, NodeId b);
    NodeId append(Node node);
    /// Inv node with the gate already established by the caller.
    NCExpr inv_unchecked(NCExpr a);

    std::size_t node_budget_;
    std::vector<Node> nodes_;
    std::unordered_map<OpKey, NodeId, OpKeyHash> op_table_;
    std::map<Rat, NodeId> const_table_;

    // Per-node memo caches; append-only store keeps them valid forever.
    std::vector<std::optional<CommRat>> comm_cache_;
    std::vector<NodeId> normalize_cache_;
    std::vector<NodeId> reverse_cache_;

    static constexpr NodeId kUnset = 0xffffffffu;
};

/// Free-function spelling of the guarded inversion.
inline NCExpr inv(NCExpr e) { return e.store().inv(e); }

}  // namespace nccalc
