#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"
#include "order.hpp"

namespace princ {

/// Partition of lattice elements in canonical form: block ids are assigned
/// in order of each block's least member, so equal partitions compare equal
/// as vectors. The partition does not retain the lattice it belongs to.
class Congruence {
public:
    Congruence() = default;

    Congruence(int n, std::vector<int> raw) : n_(n), part_(std::move(raw)) {
        if (static_cast<int>(part_.size()) != n_)
            throw std::invalid_argument("partition size mismatch");
        canonicalize();
    }

    static Congruence delta(int n) {
        std::vector<int> p(static_cast<size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        return Congruence(n, std::move(p));
    }

    static Congruence nabla(int n) {
        return Congruence(n, std::vector<int>(static_cast<size_t>(n), 0));
    }

    int size() const { return n_; }

    int block_id(int i) const { return part_.at(static_cast<size_t>(i)); }

    bool same(int i, int j) const {
        return part_.at(static_cast<size_t>(i)) == part_.at(static_cast<size_t>(j));
    }

    int block_count() const {
        return part_.empty() ? 0 : *std::max_element(part_.begin(), part_.end()) + 1;
    }

    bool is_delta() const {
        for (size_t i = 0; i < part_.size(); ++i)
            if (part_[i] != static_cast<int>(i)) return false;
        return true;
    }

    bool is_nabla() const { return block_count() <= 1; }

    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> out(static_cast<size_t>(block_count()));
        for (int i = 0; i < n_; ++i) out[static_cast<size_t>(part_[static_cast<size_t>(i)])].push_back(i);
        return out;
    }

    /// this <= other in the congruence order (every block fits in a block).
    bool refines(const Congruence& other) const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (same(i, j) && !other.same(i, j)) return false;
        return true;
    }

    bool operator==(const Congruence& other) const {
        return n_ == other.n_ && part_ == other.part_;
    }

    bool operator<(const Congruence& other) const {
        if (n_ != other.n_) return n_ < other.n_;
        return part_ < other.part_;
    }

    /// Blocks spelled out with element names, e.g. "0,a|b|1".
    std::string to_string(const BoundedOrder& order) const {
        std::string out;
        bool first_block = true;
        for (const auto& blk : blocks()) {
            if (!first_block) out += "|";
            bool first = true;
            for (int e : blk) {
                if (!first) out += ",";
                out += order.name(e);
                first = false;
            }
            first_block = false;
        }
        return out;
    }

private:
    void canonicalize() {
        std::map<int, int> relabel;
        for (int& v : part_) {
            auto it = relabel.find(v);
            if (it == relabel.end())
                it = relabel.emplace(v, static_cast<int>(relabel.size())).first;
            v = it->second;
        }
    }

    int n_ = 0;
    std::vector<int> part_;
};

namespace detail {

struct UnionFind {
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[static_cast<size_t>(b)] = a;
        return true;
    }
    std::vector<int> parent;
};

}  // namespace detail

/// Exhaustive substitution-property test for a partition of L.
inline bool is_congruence(const FiniteLattice& l, const Congruence& c) {
    if (c.size() != l.size()) return false;
    const int n = l.size();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (!c.same(x, y)) continue;
            for (int s = 0; s < n; ++s) {
                if (!c.same(l.meet(x, s), l.meet(y, s))) return false;
                if (!c.same(l.join(x, s), l.join(y, s))) return false;
            }
        }
    return true;
}

/// Least congruence collapsing all seed pairs: union-find closure where
/// every merge event re-queues its meet and join translates.
inline Congruence congruence_closure(const FiniteLattice& l,
                                     const std::vector<std::pair<int, int>>& seeds) {
    const int n = l.size();
    detail::UnionFind uf(n);
    std::vector<std::pair<int, int>> work(seeds);
    while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        if (!uf.unite(x, y)) continue;
        for (int s = 0; s < n; ++s) {
            work.emplace_back(l.meet(x, s), l.meet(y, s));
            work.emplace_back(l.join(x, s), l.join(y, s));
        }
    }
    std::vector<int> part(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) part[static_cast<size_t>(i)] = uf.find(i);
    return Congruence(n, std::move(part));
}

inline Congruence principal_congruence(const FiniteLattice& l, int a, int b) {
    return congruence_closure(l, {{l.meet(a, b), l.join(a, b)}});
}

inline Congruence principal_congruence(const FiniteLattice& l, const std::string& a,
                                       const std::string& b) {
    return principal_congruence(l, l.index(a), l.index(b));
}

/// Every congruence of L by filtering all partitions, enumerated in
/// restricted-growth form. Only for small lattices; the result is the
/// ground truth the closure-based routines are measured against.
inline std::vector<Congruence> oracle_all_congruences(const FiniteLattice& l, int size_limit = 10) {
    const int n = l.size();
    if (n > size_limit)
        throw SizeLimitExceeded("lattice too large for exhaustive partition search");
    std::vector<Congruence> out;
    std::vector<int> rg(static_cast<size_t>(n), 0);
    while (true) {
        Congruence c(n, rg);
        if (is_congruence(l, c)) out.push_back(std::move(c));
        int i = n - 1;
        for (; i > 0; --i) {
            int cap = *std::max_element(rg.begin(), rg.begin() + i) + 1;
            if (rg[static_cast<size_t>(i)] < cap) {
                ++rg[static_cast<size_t>(i)];
                std::fill(rg.begin() + i + 1, rg.end(), 0);
                break;
            }
            }
        if (i == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Least congruence collapsing (a, b), read off the oracle's full list.
/// The list is meet-closed, so a single refinement pass finds the minimum.
inline Congruence oracle_min_congruence(const FiniteLattice& l, int a, int b, int size_limit = 10) {
    std::optional<Congruence> best;
    for (const auto& c : oracle_all_congruences(l, size_limit)) {
        if (!c.same(a, b)) continue;
        if (!best || c.refines(*best)) best = c;
    }
    return *best;
}

inline Congruence congruence_meet(const FiniteLattice& l, const Congruence& a,
                                  const Congruence& b) {
    const int n = l.size();
    std::vector<int> part(static_cast<size_t>(n));
    std::map<std::pair<int, int>, int> ids;
    for (int i = 0; i < n; ++i) {
        auto key = std::make_pair(a.block_id(i), b.block_id(i));
        auto it = ids.find(key);
        if (it == ids.end()) it = ids.emplace(key, static_cast<int>(ids.size())).first;
        part[static_cast<size_t>(i)] = it->second;
    }
    return Congruence(n, std::move(part));
}

inline Congruence congruence_join(const FiniteLattice& l, const Congruence& a,
                                  const Congruence& b) {
    std::vector<std::pair<int, int>> seeds;
    const int n = l.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a.same(i, j) || b.same(i, j)) seeds.emplace_back(i, j);
    return congruence_closure(l, seeds);
}

/// The full congruence lattice: principal congruences of covering pairs,
/// closed under join, plus the diagonal.
inline std::vector<Congruence> all_congruences(const FiniteLattice& l) {
    std::set<Congruence> out;
    out.insert(Congruence::delta(l.size()));
    std::vector<Congruence> frontier;
    for (const auto& [i, j] : l.order().covers()) {
        Congruence c = principal_congruence(l, i, j);
        if (out.insert(c).second) frontier.push_back(std::move(c));
    }
    while (!frontier.empty()) {
        std::vector<Congruence> next;
        for (const auto& f : frontier)
            for (const auto& c : out) {
                Congruence j = congruence_join(l, f, c);
                if (!out.count(j)) next.push_back(std::move(j));
            }
        for (auto& c : next) out.insert(c);
        frontier = std::move(next);
    }
    return std::vector<Congruence>(out.begin(), out.end());
}

/// The order of principal congruences under refinement. Elements are named
/// by their first generating pair in index order, e.g. "con(a,b)".
struct PrincOrder {
    BoundedOrder order;
    std::vector<Congruence> congruences;
    std::vector<std::pair<int, int>> witnesses;

    int find(const Congruence& c) const {
        for (size_t i = 0; i < congruences.size(); ++i)
            if (congruences[i] == c) return static_cast<int>(i);
        throw std::invalid_argument("congruence is not principal here");
    }
};

inline PrincOrder princ_order(const FiniteLattice& l) {
    std::vector<Congruence> congs;
    std::vector<std::pair<int, int>> wit;
    for (int i = 0; i < l.size(); ++i)
        for (int j = 0; j < l.size(); ++j) {
            if (!l.leq(i, j)) continue;
            Congruence c = principal_congruence(l, i, j);
            bool known = false;
            for (const auto& k : congs)
                if (k == c) {
                    known = true;
                    break;
                }
            if (!known) {
                congs.push_back(std::move(c));
                wit.emplace_back(i, j);
            }
        }
    std::vector<std::string> names;
    for (const auto& [a, b] : wit)
        names.push_back("con(" + l.name(a) + "," + l.name(b) + ")");
    std::vector<NamePair> pairs;
    for (size_t i = 0; i < congs.size(); ++i)
        for (size_t j = 0; j < congs.size(); ++j)
            if (i != j && congs[i].refines(congs[j])) pairs.emplace_back(names[i], names[j]);
    BoundedOrder order(names, pairs);
    return PrincOrder{std::move(order), std::move(congs), std::move(wit)};
}

/// Quotient lattice L / theta together with the projection homomorphism.
/// Block names join the member names with '+', singleton blocks keep their
/// element's name; labels of L transfer to the blocks of their holders.
inline std::pair<FiniteLattice, LatticeHom> quotient(const FiniteLattice& l,
                                                     const Congruence& theta) {
    if (!is_congruence(l, theta))
        throw NotACongruence("partition lacks the substitution property");
    auto blocks = theta.blocks();
    std::vector<std::string> names;
    for (const auto& blk : blocks) {
        if (blk.size() == 1) {
            names.push_back(l.name(blk.front()));
        } else {
            std::string n;
            for (size_t k = 0; k < blk.size(); ++k) {
                if (k) n += "+";
                n += l.name(blk[k]);
            }
            names.push_back(std::move(n));
        }
    }
    std::vector<NamePair> pairs;
    for (size_t bi = 0; bi < blocks.size(); ++bi)
        for (size_t bj = 0; bj < blocks.size(); ++bj) {
            if (bi == bj) continue;
            bool rel = false;
            for (int x : blocks[bi]) {
                for (int y : blocks[bj])
                    if (l.leq(x, y)) {
                        rel = true;
                        break;
                    }
                if (rel) break;
            }
            if (rel) pairs.emplace_back(names[bi], names[bj]);
        }
    FiniteLattice m{BoundedOrder(names, pairs)};
    for (const auto& [tag, idx] : l.labels())
        m.set_label(tag, theta.block_id(idx));
    std::vector<int> assignment(static_cast<size_t>(l.size()));
    for (int i = 0; i < l.size(); ++i) assignment[static_cast<size_t>(i)] = theta.block_id(i);
    LatticeHom hom(l, m, assignment);
    return {std::move(m), std::move(hom)};
}

struct Interval {
    int low;
    int high;
};

/// Shortest sequence of translate steps carrying the source interval onto
/// the target, flattened into parameters of the alternating polynomial
/// (padded with neutral elements so joins and meets strictly alternate).
/// Verified by evaluation before being returned.
inline std::optional<std::vector<int>> is_cong_projective(const FiniteLattice& l, Interval src,
                                                          Interval dst) {
    if (!l.leq(src.low, src.high) || !l.leq(dst.low, dst.high))
        throw std::invalid_argument("interval endpoints out of order");
    const int n = l.size();
    auto id = [n](int x, int y) { return x * n + y; };
    std::vector<int> parent(static_cast<size_t>(n) * n, -1);
    std::vector<std::pair<int, int>> step(static_cast<size_t>(n) * n, {-1, -1});  // (kind, s): 0 join, 1 meet
    std::deque<int> queue;
    int start = id(src.low, src.high), goal = id(dst.low, dst.high);
    parent[static_cast<size_t>(start)] = start;
    queue.push_back(start);
    while (!queue.empty() && parent[static_cast<size_t>(goal)] == -1) {
        int cur = queue.front();
        queue.pop_front();
        int x = cur / n, y = cur % n;
        for (int kind = 0; kind < 2; ++kind)
            for (int s = 0; s < n; ++s) {
                int nx = kind == 0 ? l.join(x, s) : l.meet(x, s);
                int ny = kind == 0 ? l.join(y, s) : l.meet(y, s);
                int nid = id(nx, ny);
                if (parent[static_cast<size_t>(nid)] != -1) continue;
                parent[static_cast<size_t>(nid)] = cur;
                step[static_cast<size_t>(nid)] = {kind, s};
                queue.push_back(nid);
            }
    }
    if (parent[static_cast<size_t>(goal)] == -1) return std::nullopt;
    std::vector<std::pair<int, int>> ops;
    for (int cur = goal; cur != start; cur = parent[static_cast<size_t>(cur)])
        ops.push_back(step[static_cast<size_t>(cur)]);
    std::reverse(ops.begin(), ops.end());
    std::vector<int> ps;
    for (const auto& [kind, s] : ops) {
        if (static_cast<int>(ps.size() % 2) != kind)
            ps.push_back(kind == 0 ? l.top() : l.bottom());
        ps.push_back(s);
    }
    if (eval_alternating_term(l, src.low, ps) != dst.low ||
        eval_alternating_term(l, src.high, ps) != dst.high)
        throw WellDefinednessViolation("projectivity witness fails evaluation");
    return ps;
}

/// Maximal chain from target.low to target.high running inside one block of
/// con(generator); each covering step is checked to be reachable from the
/// generator by translates. Absent when the target is not collapsed.
inline std::optional<std::vector<int>> spreading_chain(const FiniteLattice& l, Interval generator,
                                                       Interval target) {
    if (!l.leq(generator.low, generator.high) || !l.leq(target.low, target.high))
        throw std::invalid_argument("interval endpoints out of order");
    Congruence c = principal_congruence(l, generator.low, generator.high);
    if (!c.same(target.low, target.high)) return std::nullopt;
    std::vector<int> chain{target.low};
    int z = target.low;
    while (z != target.high) {
        int next = -1;
        for (int w = 0; w < l.size(); ++w)
            if (l.order().lt(z, w) && l.leq(w, target.high) && l.order().is_cover(z, w)) {
                next = w;
                break;
            }
        if (next == -1)
            throw WellDefinednessViolation("no covering step inside the target interval");
        if (!is_cong_projective(l, generator, Interval{z, next}))
            throw WellDefinednessViolation("collapsed cover is not reachable by translates");
        chain.push_back(next);
        z = next;
    }
    return chain;
}

/// Map induced on principal congruences by a homomorphism: con(a, b) goes to
/// con(f(a), f(b)). Well-definedness is checked over every comparable pair.
inline IsotoneMap induced_hom_map(const LatticeHom& f, const PrincOrder& src_princ,
                                  const PrincOrder& dst_princ) {
    const FiniteLattice& k = f.source();
    const FiniteLattice& l = f.target();
    std::vector<int> assignment(static_cast<size_t>(src_princ.order.size()), -1);
    for (int a = 0; a < k.size(); ++a)
        for (int b = 0; b < k.size(); ++b) {
            if (!k.leq(a, b)) continue;
            int from = src_princ.find(principal_congruence(k, a, b));
            int to = dst_princ.find(principal_congruence(l, f.apply(a), f.apply(b)));
            int& slot = assignment[static_cast<size_t>(from)];
            if (slot == -1) {
                slot = to;
            } else if (slot != to) {
                throw WellDefinednessViolation("generating pairs of con(" + k.name(a) + "," +
                                               k.name(b) + ") disagree after mapping");
            }
        }
    return IsotoneMap(src_princ.order, dst_princ.order, assignment);
}

inline IsotoneMap induced_hom_map(const LatticeHom& f) {
    return induced_hom_map(f, princ_order(f.source()), princ_order(f.target()));
}

/// Same construction along a 0,1-sublattice embedding.
inline IsotoneMap induced_sub_map(const FiniteLattice& k, const FiniteLattice& l,
                                  const std::vector<int>& embedding, const PrincOrder& src_princ,
                                  const PrincOrder& dst_princ) {
    if (!is_01_sublattice(k, l, embedding))
        throw std::invalid_argument("assignment is not a 0,1-sublattice embedding");
    std::vector<int> assignment(static_cast<size_t>(src_princ.order.size()), -1);
    for (int a = 0; a < k.size(); ++a)
        for (int b = 0; b < k.size(); ++b) {
            if (!k.leq(a, b)) continue;
            int from = src_princ.find(principal_congruence(k, a, b));
            int to = dst_princ.find(principal_congruence(
                l, embedding[static_cast<size_t>(a)], embedding[static_cast<size_t>(b)]));
            int& slot = assignment[static_cast<size_t>(from)];
            if (slot == -1) {
                slot = to;
            } else if (slot != to) {
                throw WellDefinednessViolation("generating pairs of con(" + k.name(a) + "," +
                                               k.name(b) + ") disagree after embedding");
            }
        }
    return IsotoneMap(src_princ.order, dst_princ.order, assignment);
}

inline IsotoneMap induced_sub_map(const FiniteLattice& k, const FiniteLattice& l,
                                  const std::vector<int>& embedding) {
    return induced_sub_map(k, l, embedding, princ_order(k), princ_order(l));
}

/// A congruence is 0,1-isolating when it is not the diagonal yet keeps both
/// bounds in singleton blocks.
inline bool is_01_isolating(const FiniteLattice& l, const Congruence& theta) {
    if (theta.is_delta()) return false;
    for (int i = 0; i < l.size(); ++i) {
        if (i != l.bottom() && theta.same(i, l.bottom())) return false;
        if (i != l.top() && theta.same(i, l.top())) return false;
    }
    return true;
}

/// Interior elements of P whose labelled chain is collapsed by theta. The
/// lattice must carry the labels "a:p" / "b:p" for every interior p.
inline DownSet base_of(const FiniteLattice& l, const Congruence& theta, const BoundedOrder& p) {
    DownSet out;
    for (int m : p.mids()) {
        int a = l.label_or_throw("a:" + p.name(m));
        int b = l.label_or_throw("b:" + p.name(m));
        if (theta.same(a, b)) out.insert(p.name(m));
    }
    for (const auto& nm : out)
        for (int m : p.mids())
            if (p.leq(m, p.index(nm)) && !out.count(p.name(m)))
                throw WellDefinednessViolation("collapsed chains do not form a down-set at '" +
                                               nm + "'");
    return out;
}

}  // namespace princ
