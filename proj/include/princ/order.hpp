#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace princ {

using DownSet = std::set<std::string>;
using NamePair = std::pair<std::string, std::string>;

/// Finite partially ordered set with a unique least and greatest element.
/// The relation is stored reflexively and transitively closed; elements are
/// addressed either by index (their position in the construction list) or
/// by their string identifier.
class BoundedOrder {
public:
    BoundedOrder(std::vector<std::string> elements, const std::vector<NamePair>& pairs)
        : elems_(std::move(elements)) {
        if (elems_.empty()) throw EmptyOrder("order has no elements");
        build_index();
        const int n = size();
        leq_.assign(static_cast<size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) at(i, i) = 1;
        for (const auto& [a, b] : pairs) at(index(a), index(b)) = 1;
        close_transitively();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (at(i, j) && at(j, i))
                    throw CycleDetected("cycle through '" + elems_[i] + "' and '" + elems_[j] + "'");
        find_bounds();
        if (bot_ == top_)
            throw TrivialOrder("bottom and top coincide in '" + elems_[bot_] + "'");
    }

    /// One-element order. Only reachable through down_set_order on an order
    /// without interior elements; validate-style construction rejects this
    /// shape so that the set of interior elements stays well defined.
    static BoundedOrder singleton(const std::string& name) {
        return BoundedOrder(name);
    }

    int size() const { return static_cast<int>(elems_.size()); }

    const std::string& name(int i) const { return elems_.at(static_cast<size_t>(i)); }

    const std::vector<std::string>& names() const { return elems_; }

    bool has(const std::string& name) const { return index_.count(name) != 0; }

    int index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            throw std::invalid_argument("unknown element '" + name + "'");
        return it->second;
    }

    bool leq(int i, int j) const { return at(i, j) != 0; }

    bool leq(const std::string& a, const std::string& b) const {
        return leq(index(a), index(b));
    }

    bool lt(int i, int j) const { return i != j && leq(i, j); }

    int bottom() const { return bot_; }
    int top() const { return top_; }

    bool is_bound(int i) const { return i == bot_ || i == top_; }

    /// Elements that are neither the bottom nor the top, in index order.
    std::vector<int> mids() const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (!is_bound(i)) out.push_back(i);
        return out;
    }

    /// Covering pairs (i, j) with i covered by j, i.e. the transitive
    /// reduction of the relation, in lexicographic index order.
    std::vector<std::pair<int, int>> covers() const {
        std::vector<std::pair<int, int>> out;
        const int n = size();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (is_cover(i, j)) out.emplace_back(i, j);
        return out;
    }

    bool is_cover(int i, int j) const {
        if (i == j || !leq(i, j)) return false;
        for (int k = 0; k < size(); ++k)
            if (k != i && k != j && leq(i, k) && leq(k, j)) return false;
        return true;
    }

    bool operator==(const BoundedOrder& other) const {
        return elems_ == other.elems_ && leq_ == other.leq_;
    }

private:
    explicit BoundedOrder(const std::string& name)
        : elems_{name}, leq_{1}, bot_(0), top_(0) {
        index_[name] = 0;
    }

    void build_index() {
        for (int i = 0; i < size(); ++i) {
            if (!index_.emplace(elems_[static_cast<size_t>(i)], i).second)
                throw std::invalid_argument("duplicate element '" + elems_[static_cast<size_t>(i)] + "'");
        }
    }

    uint8_t& at(int i, int j) { return leq_[static_cast<size_t>(i) * size() + j]; }
    uint8_t at(int i, int j) const { return leq_[static_cast<size_t>(i) * size() + j]; }

    void close_transitively() {
        const int n = size();
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) {
                if (!at(i, k)) continue;
                for (int j = 0; j < n; ++j)
                    if (at(k, j)) at(i, j) = 1;
            }
    }

    void find_bounds() {
        const int n = size();
        bot_ = top_ = -1;
        for (int i = 0; i < n; ++i) {
            bool least = true, greatest = true;
            for (int j = 0; j < n; ++j) {
                if (!at(i, j)) least = false;
                if (!at(j, i)) greatest = false;
            }
            if (least) bot_ = i;
            if (greatest) top_ = i;
        }
        if (bot_ < 0 || top_ < 0)
            throw NoBounds("order lacks a unique least or greatest element");
    }

    std::vector<std::string> elems_;
    std::map<std::string, int> index_;
    std::vector<uint8_t> leq_;
    int bot_ = -1, top_ = -1;
};

inline BoundedOrder validate_bounded_order(std::vector<std::string> elements,
                                           const std::vector<NamePair>& pairs) {
    return BoundedOrder(std::move(elements), pairs);
}

/// Monotone map between bounded orders. Bound preservation is required by
/// default and checked on construction along with monotonicity.
class IsotoneMap {
public:
    IsotoneMap(BoundedOrder source, BoundedOrder target, std::vector<int> assignment,
               bool require_bounds = true)
        : source_(std::move(source)), target_(std::move(target)), map_(std::move(assignment)) {
        if (static_cast<int>(map_.size()) != source_.size())
            throw std::invalid_argument("assignment size does not match source order");
        for (int v : map_)
            if (v < 0 || v >= target_.size())
                throw std::invalid_argument("assignment value out of range");
        for (int i = 0; i < source_.size(); ++i)
            for (int j = 0; j < source_.size(); ++j)
                if (source_.leq(i, j) && !target_.leq(map_[static_cast<size_t>(i)], map_[static_cast<size_t>(j)]))
                    throw std::invalid_argument("map is not isotone on '" + source_.name(i) +
                                                "' <= '" + source_.name(j) + "'");
        if (require_bounds) {
            if (map_[static_cast<size_t>(source_.bottom())] != target_.bottom() ||
                map_[static_cast<size_t>(source_.top())] != target_.top())
                throw std::invalid_argument("map does not preserve the bounds");
        }
    }

    IsotoneMap(const BoundedOrder& source, const BoundedOrder& target,
               const std::vector<NamePair>& graph, bool require_bounds = true)
        : IsotoneMap(source, target, assignment_of(source, target, graph), require_bounds) {}

    const BoundedOrder& source() const { return source_; }
    const BoundedOrder& target() const { return target_; }

    int apply(int i) const { return map_.at(static_cast<size_t>(i)); }

    const std::string& apply(const std::string& name) const {
        return target_.name(apply(source_.index(name)));
    }

    const std::vector<int>& assignment() const { return map_; }

    bool is_surjective() const {
        std::vector<char> hit(static_cast<size_t>(target_.size()), 0);
        for (int v : map_) hit[static_cast<size_t>(v)] = 1;
        return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    }

private:
    static std::vector<int> assignment_of(const BoundedOrder& source, const BoundedOrder& target,
                                          const std::vector<NamePair>& graph) {
        std::vector<int> out(static_cast<size_t>(source.size()), -1);
        for (const auto& [a, b] : graph) {
            int i = source.index(a);
            if (out[static_cast<size_t>(i)] != -1)
                throw std::invalid_argument("element '" + a + "' assigned twice");
            out[static_cast<size_t>(i)] = target.index(b);
        }
        for (int i = 0; i < source.size(); ++i)
            if (out[static_cast<size_t>(i)] == -1)
                throw std::invalid_argument("element '" + source.name(i) + "' has no image");
        return out;
    }

    BoundedOrder source_;
    BoundedOrder target_;
    std::vector<int> map_;
};

/// True when only the bottom of the source is sent to the bottom of the
/// target.
inline bool is_zero_separating(const IsotoneMap& f) {
    for (int i = 0; i < f.source().size(); ++i)
        if (i != f.source().bottom() && f.apply(i) == f.target().bottom()) return false;
    return true;
}

/// A pair of bounded orders together with an isotone bound-preserving map
/// between them.
struct OrderTriple {
    BoundedOrder p;
    BoundedOrder q;
    IsotoneMap psi;

    OrderTriple(BoundedOrder p_, BoundedOrder q_, IsotoneMap psi_)
        : p(std::move(p_)), q(std::move(q_)), psi(std::move(psi_)) {
        if (!(psi.source() == p) || !(psi.target() == q))
            throw std::invalid_argument("map endpoints do not match the stated orders");
    }
};

/// Suborder of the source on the elements mapped strictly above the target
/// bottom, plus the source bottom itself. Inherits the original bounds; the
/// top always qualifies because the map preserves bounds.
inline BoundedOrder top_of_triple(const OrderTriple& t) {
    std::vector<std::string> names;
    for (int i = 0; i < t.p.size(); ++i)
        if (i == t.p.bottom() || t.psi.apply(i) != t.q.bottom()) names.push_back(t.p.name(i));
    std::vector<NamePair> pairs;
    for (const auto& a : names)
        for (const auto& b : names)
            if (a != b && t.p.leq(t.p.index(a), t.p.index(b))) pairs.emplace_back(a, b);
    return BoundedOrder(names, pairs);
}

/// Preimage of the target bottom. Downward closed since the map is isotone.
inline DownSet btm_of_triple(const OrderTriple& t) {
    DownSet out;
    for (int i = 0; i < t.p.size(); ++i)
        if (t.psi.apply(i) == t.q.bottom()) out.insert(t.p.name(i));
    return out;
}

/// Surjective retraction of the source onto top_of_triple: identity on the
/// kept elements, everything else to the bottom.
inline IsotoneMap alpha_map(const OrderTriple& t) {
    BoundedOrder r = top_of_triple(t);
    std::vector<int> assignment(static_cast<size_t>(t.p.size()), r.bottom());
    for (int i = 0; i < t.p.size(); ++i)
        if (r.has(t.p.name(i))) assignment[static_cast<size_t>(i)] = r.index(t.p.name(i));
    return IsotoneMap(t.p, r, assignment);
}

/// Restriction of the triple's map to top_of_triple. Zero separating by
/// choice of domain, and composing it after alpha_map recovers the original
/// map pointwise.
inline IsotoneMap beta_map(const OrderTriple& t) {
    BoundedOrder r = top_of_triple(t);
    std::vector<int> assignment;
    assignment.reserve(static_cast<size_t>(r.size()));
    for (int i = 0; i < r.size(); ++i)
        assignment.push_back(t.psi.apply(t.p.index(r.name(i))));
    return IsotoneMap(r, t.q, assignment);
}

namespace detail {

inline std::string down_set_name(const BoundedOrder& p, const std::vector<int>& members) {
    std::string out = "{";
    bool first = true;
    for (int m : members) {
        if (!first) out += ",";
        out += p.name(m);
        first = false;
    }
    return out + "}";
}

}  // namespace detail

/// Order of all down-sets of the interior of P under inclusion. Element
/// names spell out the members, e.g. "{}" or "{a,b}". With with_top set, a
/// fresh greatest element named "all" is adjoined above every down-set,
/// standing for the whole of P.
inline BoundedOrder down_set_order(const BoundedOrder& p, bool with_top) {
    std::vector<int> mids = p.mids();
    const int m = static_cast<int>(mids.size());
    if (m > 20) throw SizeLimitExceeded("too many interior elements for down-set enumeration");

    std::vector<std::vector<int>> sets;
    for (uint32_t mask = 0; mask < (1u << m); ++mask) {
        bool closed = true;
        for (int i = 0; i < m && closed; ++i) {
            if (!(mask & (1u << i))) continue;
            for (int j = 0; j < m; ++j)
                if (p.leq(mids[static_cast<size_t>(j)], mids[static_cast<size_t>(i)]) &&
                    !(mask & (1u << j))) {
                    closed = false;
                    break;
                }
        }
        if (!closed) continue;
        std::vector<int> members;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) members.push_back(mids[static_cast<size_t>(i)]);
        sets.push_back(std::move(members));
    }
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    std::vector<std::string> names;
    for (const auto& s : sets) names.push_back(detail::down_set_name(p, s));
    std::vector<NamePair> pairs;
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = 0; j < sets.size(); ++j)
            if (i != j && std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end()))
                pairs.emplace_back(names[i], names[j]);
    if (with_top) {
        for (const auto& n : names) pairs.emplace_back(n, "all");
        names.push_back("all");
    }
    if (names.size() == 1) return BoundedOrder::singleton(names.front());
    return BoundedOrder(std::move(names), pairs);
}

/// Down-set of the interior generated by one interior element.
inline DownSet principal_down_set(const BoundedOrder& p, const std::string& element) {
    int e = p.index(element);
    if (p.is_bound(e)) throw BoundElement("'" + element + "' is a bound of the order");
    DownSet out;
    for (int m : p.mids())
        if (p.leq(m, e)) out.insert(p.name(m));
    return out;
}

/// Disjoint union of two bounded orders amalgamated at the bounds. Interior
/// elements of Q are primed until they no longer collide with names from P.
inline BoundedOrder disjoint_union_bounded(const BoundedOrder& p, const BoundedOrder& q) {
    std::vector<std::string> names = p.names();
    std::set<std::string> used(names.begin(), names.end());
    std::map<int, std::string> qname;
    qname[q.bottom()] = p.name(p.bottom());
    qname[q.top()] = p.name(p.top());
    for (int m : q.mids()) {
        std::string n = q.name(m);
        while (used.count(n)) n += "'";
        used.insert(n);
        names.push_back(n);
        qname[m] = n;
    }
    std::vector<NamePair> pairs;
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j)
            if (p.lt(i, j)) pairs.emplace_back(p.name(i), p.name(j));
    for (int i = 0; i < q.size(); ++i)
        for (int j = 0; j < q.size(); ++j)
            if (q.lt(i, j)) pairs.emplace_back(qname.at(i), qname.at(j));
    return BoundedOrder(std::move(names), pairs);
}

namespace detail {

/// Backtracking isomorphism search. Candidate images are pruned by
/// (down-degree, up-degree) signatures, then the partial map is kept
/// relation-faithful in both directions.
inline bool extend_iso(const BoundedOrder& a, const BoundedOrder& b, std::vector<int>& img,
                       std::vector<char>& taken, int next,
                       const std::function<bool(const std::vector<int>&)>& accept) {
    const int n = a.size();
    if (next == n) return accept(img);
    for (int cand = 0; cand < n; ++cand) {
        if (taken[static_cast<size_t>(cand)]) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev) {
            int pi = img[static_cast<size_t>(prev)];
            if (a.leq(prev, next) != b.leq(pi, cand)) ok = false;
            if (a.leq(next, prev) != b.leq(cand, pi)) ok = false;
        }
        if (!ok) continue;
        img[static_cast<size_t>(next)] = cand;
        taken[static_cast<size_t>(cand)] = 1;
        if (extend_iso(a, b, img, taken, next + 1, accept)) return true;
        taken[static_cast<size_t>(cand)] = 0;
    }
    return false;
}

inline bool degree_profiles_match(const BoundedOrder& a, const BoundedOrder& b) {
    auto profile = [](const BoundedOrder& o) {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < o.size(); ++i) {
            int down = 0, up = 0;
            for (int j = 0; j < o.size(); ++j) {
                if (o.lt(j, i)) ++down;
                if (o.lt(i, j)) ++up;
            }
            out.emplace_back(down, up);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return profile(a) == profile(b);
}

inline void for_each_iso(const BoundedOrder& a, const BoundedOrder& b,
                         const std::function<bool(const std::vector<int>&)>& accept) {
    if (a.size() != b.size() || !degree_profiles_match(a, b)) return;
    std::vector<int> img(static_cast<size_t>(a.size()), -1);
    std::vector<char> taken(static_cast<size_t>(a.size()), 0);
    extend_iso(a, b, img, taken, 0, accept);
}

}  // namespace detail

/// Order isomorphism between two bounded orders, if one exists. The search
/// is exhaustive; orders above the size limit are rejected.
inline std::optional<std::vector<int>> order_isomorphism(const BoundedOrder& a,
                                                         const BoundedOrder& b,
                                                         int size_limit = 24) {
    if (a.size() > size_limit || b.size() > size_limit)
        throw SizeLimitExceeded("order too large for isomorphism search");
    std::optional<std::vector<int>> found;
    detail::for_each_iso(a, b, [&](const std::vector<int>& img) {
        found = img;
        return true;
    });
    return found;
}

/// Pair of order isomorphisms (P_s -> P_t, Q_s -> Q_t) commuting with the
/// triple maps, if one exists.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>>
triple_isomorphism(const OrderTriple& s, const OrderTriple& t, int size_limit = 24) {
    if (s.p.size() > size_limit || t.p.size() > size_limit || s.q.size() > size_limit ||
        t.q.size() > size_limit)
        throw SizeLimitExceeded("order too large for isomorphism search");
    std::optional<std::pair<std::vector<int>, std::vector<int>>> found;
    detail::for_each_iso(s.p, t.p, [&](const std::vector<int>& pim) {
        detail::for_each_iso(s.q, t.q, [&](const std::vector<int>& qim) {
            for (int x = 0; x < s.p.size(); ++x)
                if (t.psi.apply(pim[static_cast<size_t>(x)]) !=
                    qim[static_cast<size_t>(s.psi.apply(x))])
                    return false;
            found = std::make_pair(pim, qim);
            return true;
        });
        return found.has_value();
    });
    return found;
}

}  // namespace princ
