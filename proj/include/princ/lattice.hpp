#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "order.hpp"

namespace princ {

/// Finite lattice backed by a bounded order plus dense meet and join tables.
/// Construction computes both tables by exhaustive search and fails with
/// NotALattice if some pair lacks a unique greatest lower or least upper
/// bound. Named labels tag distinguished elements of constructed lattices.
class FiniteLattice {
public:
    explicit FiniteLattice(BoundedOrder order) : order_(std::move(order)) {
        const int n = order_.size();
        meet_.assign(static_cast<size_t>(n) * n, -1);
        join_.assign(static_cast<size_t>(n) * n, -1);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                int m = bound_of(i, j, false);
                int u = bound_of(i, j, true);
                meet_[static_cast<size_t>(i) * n + j] = meet_[static_cast<size_t>(j) * n + i] = m;
                join_[static_cast<size_t>(i) * n + j] = join_[static_cast<size_t>(j) * n + i] = u;
            }
        for (int i = 0; i < n; ++i) {
            int j = (i + 1) % n;
            if (meet(i, join(i, j)) != i || join(i, meet(i, j)) != i)
                throw NotALattice("absorption fails at '" + name(i) + "'");
        }
    }

    const BoundedOrder& order() const { return order_; }

    int size() const { return order_.size(); }
    const std::string& name(int i) const { return order_.name(i); }
    int index(const std::string& n) const { return order_.index(n); }
    bool has(const std::string& n) const { return order_.has(n); }
    bool leq(int i, int j) const { return order_.leq(i, j); }
    int bottom() const { return order_.bottom(); }
    int top() const { return order_.top(); }

    int meet(int i, int j) const { return meet_[static_cast<size_t>(i) * size() + j]; }
    int join(int i, int j) const { return join_[static_cast<size_t>(i) * size() + j]; }

    void set_label(const std::string& tag, int element) {
        labels_[tag] = element;
    }

    std::optional<int> label(const std::string& tag) const {
        auto it = labels_.find(tag);
        if (it == labels_.end()) return std::nullopt;
        return it->second;
    }

    int label_or_throw(const std::string& tag) const {
        auto v = label(tag);
        if (!v) throw MissingLabels("label '" + tag + "' is not set");
        return *v;
    }

    const std::map<std::string, int>& labels() const { return labels_; }

private:
    int bound_of(int i, int j, bool upper) const {
        const int n = order_.size();
        std::vector<int> cands;
        for (int k = 0; k < n; ++k) {
            bool ok = upper ? (order_.leq(i, k) && order_.leq(j, k))
                            : (order_.leq(k, i) && order_.leq(k, j));
            if (ok) cands.push_back(k);
        }
        int best = -1;
        for (int c : cands) {
            bool extremal = true;
            for (int d : cands)
                if (d != c && (upper ? order_.leq(d, c) : order_.leq(c, d))) {
                    extremal = false;
                    break;
                }
            if (!extremal) continue;
            if (best != -1)
                throw NotALattice(std::string("no unique ") + (upper ? "join" : "meet") +
                                  " for '" + name(i) + "' and '" + name(j) + "'");
            best = c;
        }
        return best;
    }

    BoundedOrder order_;
    std::vector<int> meet_;
    std::vector<int> join_;
    std::map<std::string, int> labels_;
};

inline FiniteLattice lattice_from_order(const BoundedOrder& order) {
    return FiniteLattice(order);
}

/// Exhaustive check of the lattice identities on the computed tables;
/// quadratic checks run on construction already, this adds the cubic ones.
inline void verify_lattice_axioms(const FiniteLattice& l) {
    const int n = l.size();
    for (int i = 0; i < n; ++i) {
        if (l.meet(i, i) != i || l.join(i, i) != i)
            throw NotALattice("idempotence fails at '" + l.name(i) + "'");
        for (int j = 0; j < n; ++j) {
            if (l.meet(i, j) != l.meet(j, i) || l.join(i, j) != l.join(j, i))
                throw NotALattice("commutativity fails");
            for (int k = 0; k < n; ++k) {
                if (l.meet(l.meet(i, j), k) != l.meet(i, l.meet(j, k)))
                    throw NotALattice("meet associativity fails");
                if (l.join(l.join(i, j), k) != l.join(i, l.join(j, k)))
                    throw NotALattice("join associativity fails");
            }
        }
    }
}

/// Lattice homomorphism preserving bounds. Preservation of both operations
/// is verified exhaustively on construction.
class LatticeHom {
public:
    LatticeHom(FiniteLattice source, FiniteLattice target, std::vector<int> assignment,
               bool require_bounds = true)
        : source_(std::move(source)), target_(std::move(target)), map_(std::move(assignment)) {
        if (static_cast<int>(map_.size()) != source_.size())
            throw std::invalid_argument("assignment size does not match source lattice");
        for (int v : map_)
            if (v < 0 || v >= target_.size())
                throw std::invalid_argument("assignment value out of range");
        for (int i = 0; i < source_.size(); ++i)
            for (int j = i; j < source_.size(); ++j) {
                if (at(source_.meet(i, j)) != target_.meet(at(i), at(j)))
                    throw std::invalid_argument("meet not preserved on '" + source_.name(i) +
                                                "' and '" + source_.name(j) + "'");
                if (at(source_.join(i, j)) != target_.join(at(i), at(j)))
                    throw std::invalid_argument("join not preserved on '" + source_.name(i) +
                                                "' and '" + source_.name(j) + "'");
            }
        if (require_bounds &&
            (at(source_.bottom()) != target_.bottom() || at(source_.top()) != target_.top()))
            throw std::invalid_argument("bounds not preserved");
    }

    const FiniteLattice& source() const { return source_; }
    const FiniteLattice& target() const { return target_; }

    int apply(int i) const { return map_.at(static_cast<size_t>(i)); }

    const std::string& apply(const std::string& n) const {
        return target_.name(apply(source_.index(n)));
    }

    const std::vector<int>& assignment() const { return map_; }

    bool is_surjective() const {
        std::vector<char> hit(static_cast<size_t>(target_.size()), 0);
        for (int v : map_) hit[static_cast<size_t>(v)] = 1;
        for (char c : hit)
            if (!c) return false;
        return true;
    }

private:
    int at(int i) const { return map_[static_cast<size_t>(i)]; }

    FiniteLattice source_;
    FiniteLattice target_;
    std::vector<int> map_;
};

/// Evaluates the alternating polynomial starting with a join:
/// ((x v p1) ^ p2) v p3 ... with an empty parameter list giving back x.
inline int eval_alternating_term(const FiniteLattice& l, int x, const std::vector<int>& ps) {
    int acc = x;
    for (size_t k = 0; k < ps.size(); ++k)
        acc = (k % 2 == 0) ? l.join(acc, ps[k]) : l.meet(acc, ps[k]);
    return acc;
}

/// True when the injective assignment k -> l embeds K as a sublattice
/// containing both bounds.
inline bool is_01_sublattice(const FiniteLattice& k, const FiniteLattice& l,
                             const std::vector<int>& embedding) {
    if (static_cast<int>(embedding.size()) != k.size()) return false;
    std::vector<char> seen(static_cast<size_t>(l.size()), 0);
    for (int v : embedding) {
        if (v < 0 || v >= l.size() || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = 1;
    }
    auto at = [&](int i) { return embedding[static_cast<size_t>(i)]; };
    if (at(k.bottom()) != l.bottom() || at(k.top()) != l.top()) return false;
    for (int i = 0; i < k.size(); ++i)
        for (int j = i; j < k.size(); ++j)
            if (at(k.meet(i, j)) != l.meet(at(i), at(j)) ||
                at(k.join(i, j)) != l.join(at(i), at(j)))
                return false;
    return true;
}

/// True when u meets every element outside {0, u, 1} at the bottom and joins
/// it at the top. Bounds are rejected as inputs.
inline bool is_universal_complement(const FiniteLattice& l, const std::string& element) {
    int u = l.index(element);
    if (u == l.bottom() || u == l.top())
        throw BoundElement("'" + element + "' is a bound of the lattice");
    for (int v = 0; v < l.size(); ++v) {
        if (v == u || v == l.bottom() || v == l.top()) continue;
        if (l.meet(u, v) != l.bottom() || l.join(u, v) != l.top()) return false;
    }
    return true;
}

}  // namespace princ
