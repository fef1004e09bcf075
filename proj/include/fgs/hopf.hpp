#pragma once

#include <fgs/linalg.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fgs {

/// Sparse rank-3 tensor of exact scalars, keyed lexicographically so that
/// slices by the first index (comultiplications) and the first two indices
/// (products) are contiguous ranges. Zero entries are never stored.
class SparseTensor3 {
public:
    using Key = std::array<int, 3>;
    using Map = std::map<Key, Rat>;

    const Map& entries() const { return e_; }
    bool empty() const { return e_.empty(); }

    void set(const RingSpec& ring, int i, int j, int k, const Rat& v) {
        Rat c = ring.canonical(v);
        Key key{i, j, k};
        if (c == 0)
            e_.erase(key);
        else
            e_[key] = c;
    }

    Rat at(int i, int j, int k) const {
        auto it = e_.find(Key{i, j, k});
        return it == e_.end() ? Rat(0) : it->second;
    }

    std::pair<Map::const_iterator, Map::const_iterator> slice(int i) const {
        return {e_.lower_bound(Key{i, 0, 0}), e_.lower_bound(Key{i + 1, 0, 0})};
    }

    std::pair<Map::const_iterator, Map::const_iterator> slice(int i, int j) const {
        return {e_.lower_bound(Key{i, j, 0}), e_.lower_bound(Key{i, j + 1, 0})};
    }

    bool operator==(const SparseTensor3& o) const { return e_ == o.e_; }

private:
    Map e_;
};

/// Multiplication table of a finite group; mul[g][h] is the index of g*h.
struct CayleyTable {
    int identity = 0;
    std::vector<std::vector<int>> mul;
    std::vector<std::string> names;

    int order() const { return static_cast<int>(mul.size()); }

    int at(int g, int h) const {
        if (g < 0 || h < 0 || g >= order() || h >= order()) throw error("group index out of range");
        return mul[static_cast<size_t>(g)][static_cast<size_t>(h)];
    }

    /// Empty string when the table satisfies the group axioms.
    std::string check() const {
        const int n = order();
        if (n == 0) return "empty table";
        if (identity < 0 || identity >= n) return "identity index out of range";
        if (static_cast<int>(names.size()) != n) return "name count does not match order";
        for (int g = 0; g < n; ++g) {
            if (static_cast<int>(mul[static_cast<size_t>(g)].size()) != n) return "table is not square";
            for (int h = 0; h < n; ++h)
                if (at(g, h) < 0 || at(g, h) >= n) return "table entry out of range";
        }
        for (int g = 0; g < n; ++g)
            if (at(identity, g) != g || at(g, identity) != g) return "identity law fails";
        for (int g = 0; g < n; ++g) {
            bool has_inverse = false;
            for (int h = 0; h < n; ++h)
                if (at(g, h) == identity && at(h, g) == identity) has_inverse = true;
            if (!has_inverse) return "inverse missing";
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (at(at(a, b), c) != at(a, at(b, c))) return "associativity fails";
        return "";
    }

    int inverse(int g) const {
        for (int h = 0; h < order(); ++h)
            if (at(g, h) == identity && at(h, g) == identity) return h;
        throw error("no inverse in table");
    }

    static CayleyTable cyclic(int m) {
        if (m < 1) throw error("cyclic group order must be >= 1");
        CayleyTable t;
        t.mul.assign(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) t.mul[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % m;
        for (int i = 0; i < m; ++i)
            t.names.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
        return t;
    }

    static CayleyTable product(const CayleyTable& a, const CayleyTable& b) {
        CayleyTable t;
        const int n1 = a.order(), n2 = b.order();
        t.identity = a.identity * n2 + b.identity;
        t.mul.assign(static_cast<size_t>(n1 * n2), std::vector<int>(static_cast<size_t>(n1 * n2)));
        for (int i1 = 0; i1 < n1; ++i1)
            for (int i2 = 0; i2 < n2; ++i2)
                for (int j1 = 0; j1 < n1; ++j1)
                    for (int j2 = 0; j2 < n2; ++j2)
                        t.mul[static_cast<size_t>(i1 * n2 + i2)][static_cast<size_t>(j1 * n2 + j2)] =
                            a.at(i1, j1) * n2 + b.at(i2, j2);
        for (int i1 = 0; i1 < n1; ++i1)
            for (int i2 = 0; i2 < n2; ++i2)
                t.names.push_back("(" + a.names[static_cast<size_t>(i1)] + "," + b.names[static_cast<size_t>(i2)] + ")");
        return t;
    }

    static CayleyTable klein() {
        CayleyTable t = product(cyclic(2), cyclic(2));
        t.names = {"1", "a", "b", "ab"};
        return t;
    }

    /// Permutations of three letters; composition (g*h)(x) = g(h(x)).
    static CayleyTable symmetric3() {
        const std::array<std::array<int, 3>, 6> perms{{
            {0, 1, 2},  // 1
            {1, 0, 2},  // (12)
            {2, 1, 0},  // (13)
            {0, 2, 1},  // (23)
            {1, 2, 0},  // (123)
            {2, 0, 1},  // (132)
        }};
        CayleyTable t;
        t.names = {"1", "(12)", "(13)", "(23)", "(123)", "(132)"};
        t.mul.assign(6, std::vector<int>(6));
        for (int g = 0; g < 6; ++g)
            for (int h = 0; h < 6; ++h) {
                std::array<int, 3> comp{};
                for (int x = 0; x < 3; ++x) comp[static_cast<size_t>(x)] = perms[static_cast<size_t>(g)][static_cast<size_t>(perms[static_cast<size_t>(h)][static_cast<size_t>(x)])];
                int idx = -1;
                for (int k = 0; k < 6; ++k)
                    if (perms[static_cast<size_t>(k)] == comp) idx = k;
                t.mul[static_cast<size_t>(g)][static_cast<size_t>(h)] = idx;
            }
        return t;
    }
};

/// Finite free-rank Hopf algebra given by structure constants:
/// e_i e_j = sum_k mult[i][j][k] e_k, Delta(e_i) = sum mult... comult[i][j][k] e_j (x) e_k,
/// 1_H = sum unit[k] e_k, counit(e_i) = counit[i], S(e_i) = column i of antipode.
struct HopfAlgebra {
    RingSpec ring;
    int rank = 0;
    std::vector<std::string> labels;
    SparseTensor3 mult;
    SparseTensor3 comult;
    std::vector<Rat> unit;
    std::vector<Rat> counit;
    ExactMatrix antipode;
    // duals are measure algebras, not coordinate rings: their multiplication
    // is exempt from the commutativity axiom
    bool dual_flavor = false;
    // set when this is the function algebra of a concrete finite group
    std::optional<CayleyTable> group;

    std::vector<std::pair<int, Rat>> product(int i, int j) const {
        std::vector<std::pair<int, Rat>> out;
        auto [b, e] = mult.slice(i, j);
        for (auto it = b; it != e; ++it) out.emplace_back((*it).first[2], (*it).second);
        return out;
    }

    std::vector<std::array<int, 2>> comult_support(int i) const {
        std::vector<std::array<int, 2>> out;
        auto [b, e] = comult.slice(i);
        for (auto it = b; it != e; ++it) out.push_back({(*it).first[1], (*it).first[2]});
        return out;
    }

    /// coefficients of x*y for coordinate vectors x, y
    std::vector<Rat> multiply(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
        std::vector<Rat> out(static_cast<size_t>(rank), Rat(0));
        for (const auto& [key, c] : mult.entries()) {
            const Rat& xi = x[static_cast<size_t>(key[0])];
            const Rat& yj = y[static_cast<size_t>(key[1])];
            if (xi == 0 || yj == 0) continue;
            out[static_cast<size_t>(key[2])] += xi * yj * c;
        }
        for (auto& v : out) v = ring.canonical(v);
        return out;
    }
};

struct Violation {
    std::string axiom;
    std::vector<int> witness;

    std::string describe() const {
        std::string s = axiom;
        if (!witness.empty()) {
            s += " at (";
            for (size_t i = 0; i < witness.size(); ++i) s += (i ? "," : "") + std::to_string(witness[i]);
            s += ")";
        }
        return s;
    }
};

namespace detail {

inline std::vector<Rat> zero_vec(int n) { return std::vector<Rat>(static_cast<size_t>(n), Rat(0)); }

inline bool vec_eq_basis(const RingSpec& ring, const std::vector<Rat>& v, int i) {
    for (size_t k = 0; k < v.size(); ++k) {
        Rat want = (static_cast<int>(k) == i) ? Rat(1) : Rat(0);
        if (ring.canonical(v[k]) != ring.canonical(want)) return false;
    }
    return true;
}

}  // namespace detail

/// Checks every Hopf axiom exactly; returns one violation per failed axiom
/// with a witness index tuple. Commutativity is skipped for dual-flavored
/// algebras (measure algebras of noncommutative groups).
inline std::vector<Violation> validate(const HopfAlgebra& h) {
    std::vector<Violation> out;
    const int r = h.rank;
    const RingSpec& ring = h.ring;

    auto canon = [&](const Rat& x) { return ring.canonical(x); };

    // associativity: (e_i e_j) e_k = e_i (e_j e_k)
    bool assoc_done = false;
    for (int i = 0; i < r && !assoc_done; ++i)
        for (int j = 0; j < r && !assoc_done; ++j) {
            auto pij = h.product(i, j);
            for (int k = 0; k < r && !assoc_done; ++k) {
                auto lhs = detail::zero_vec(r), rhs = detail::zero_vec(r);
                for (const auto& [l, c] : pij)
                    for (const auto& [m, c2] : h.product(l, k)) lhs[static_cast<size_t>(m)] += c * c2;
                for (const auto& [l, c] : h.product(j, k))
                    for (const auto& [m, c2] : h.product(i, l)) rhs[static_cast<size_t>(m)] += c * c2;
                for (int m = 0; m < r; ++m)
                    if (canon(lhs[static_cast<size_t>(m)]) != canon(rhs[static_cast<size_t>(m)])) {
                        out.push_back({"associativity", {i, j, k}});
                        assoc_done = true;
                        break;
                    }
            }
        }

    // unit law: 1 * e_i = e_i = e_i * 1
    for (int i = 0; i < r; ++i) {
        auto left = detail::zero_vec(r), right = detail::zero_vec(r);
        for (int k = 0; k < r; ++k) {
            if (h.unit[static_cast<size_t>(k)] == 0) continue;
            for (const auto& [m, c] : h.product(k, i)) left[static_cast<size_t>(m)] += h.unit[static_cast<size_t>(k)] * c;
            for (const auto& [m, c] : h.product(i, k)) right[static_cast<size_t>(m)] += h.unit[static_cast<size_t>(k)] * c;
        }
        if (!detail::vec_eq_basis(ring, left, i)) {
            out.push_back({"unit-left", {i}});
            break;
        }
        if (!detail::vec_eq_basis(ring, right, i)) {
            out.push_back({"unit-right", {i}});
            break;
        }
    }

    // coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta
    for (int i = 0; i < r; ++i) {
        std::map<std::array<int, 3>, Rat> lhs, rhs;
        auto [b, e] = h.comult.slice(i);
        for (auto it = b; it != e; ++it) {
            int a = (*it).first[1], bb = (*it).first[2];
            const Rat& c = (*it).second;
            auto [b2, e2] = h.comult.slice(a);
            for (auto jt = b2; jt != e2; ++jt) lhs[{(*jt).first[1], (*jt).first[2], bb}] += c * (*jt).second;
            auto [b3, e3] = h.comult.slice(bb);
            for (auto jt = b3; jt != e3; ++jt) rhs[{a, (*jt).first[1], (*jt).first[2]}] += c * (*jt).second;
        }
        bool bad = false;
        for (const auto& [k, v] : lhs)
            if (canon(v) != canon(rhs.count(k) ? rhs[k] : Rat(0))) bad = true;
        for (const auto& [k, v] : rhs)
            if (canon(v) != canon(lhs.count(k) ? lhs[k] : Rat(0))) bad = true;
        if (bad) {
            out.push_back({"coassociativity", {i}});
            break;
        }
    }

    // counit law: (counit (x) id) Delta(e_i) = e_i = (id (x) counit) Delta(e_i)
    for (int i = 0; i < r; ++i) {
        auto left = detail::zero_vec(r), right = detail::zero_vec(r);
        auto [b, e] = h.comult.slice(i);
        for (auto it = b; it != e; ++it) {
            int a = (*it).first[1], bb = (*it).first[2];
            left[static_cast<size_t>(bb)] += (*it).second * h.counit[static_cast<size_t>(a)];
            right[static_cast<size_t>(a)] += (*it).second * h.counit[static_cast<size_t>(bb)];
        }
        if (!detail::vec_eq_basis(ring, left, i)) {
            out.push_back({"counit-left", {i}});
            break;
        }
        if (!detail::vec_eq_basis(ring, right, i)) {
            out.push_back({"counit-right", {i}});
            break;
        }
    }

    // Delta is an algebra map: Delta(e_i e_j) = Delta(e_i) Delta(e_j)
    {
        bool done = false;
        for (int i = 0; i < r && !done; ++i)
            for (int j = 0; j < r && !done; ++j) {
                std::map<std::array<int, 2>, Rat> lhs, rhs;
                for (const auto& [k, c] : h.product(i, j)) {
                    auto [b, e] = h.comult.slice(k);
                    for (auto it = b; it != e; ++it) lhs[{(*it).first[1], (*it).first[2]}] += c * (*it).second;
                }
                auto [bi, ei] = h.comult.slice(i);
                auto [bj, ej] = h.comult.slice(j);
                for (auto it = bi; it != ei; ++it)
                    for (auto jt = bj; jt != ej; ++jt) {
                        int a = (*it).first[1], bb = (*it).first[2];
                        int p = (*jt).first[1], q = (*jt).first[2];
                        Rat cc = (*it).second * (*jt).second;
                        for (const auto& [x, c1] : h.product(a, p))
                            for (const auto& [y, c2] : h.product(bb, q)) rhs[{x, y}] += cc * c1 * c2;
                    }
                bool bad = false;
                for (const auto& [k, v] : lhs)
                    if (canon(v) != canon(rhs.count(k) ? rhs[k] : Rat(0))) bad = true;
                for (const auto& [k, v] : rhs)
                    if (canon(v) != canon(lhs.count(k) ? lhs[k] : Rat(0))) bad = true;
                if (bad) {
                    out.push_back({"comult-not-multiplicative", {i, j}});
                    done = true;
                }
            }
    }

    // Delta(1) = 1 (x) 1
    {
        std::map<std::array<int, 2>, Rat> lhs;
        for (int i = 0; i < r; ++i) {
            if (h.unit[static_cast<size_t>(i)] == 0) continue;
            auto [b, e] = h.comult.slice(i);
            for (auto it = b; it != e; ++it)
                lhs[{(*it).first[1], (*it).first[2]}] += h.unit[static_cast<size_t>(i)] * (*it).second;
        }
        bool bad = false;
        for (int a = 0; a < r; ++a)
            for (int bb = 0; bb < r; ++bb) {
                Rat want = h.unit[static_cast<size_t>(a)] * h.unit[static_cast<size_t>(bb)];
                Rat got = lhs.count({a, bb}) ? lhs[{a, bb}] : Rat(0);
                if (canon(got) != canon(want)) bad = true;
            }
        if (bad) out.push_back({"comult-unit", {}});
    }

    // counit is an algebra map
    {
        bool done = false;
        for (int i = 0; i < r && !done; ++i)
            for (int j = 0; j < r && !done; ++j) {
                Rat lhs = 0;
                for (const auto& [k, c] : h.product(i, j)) lhs += c * h.counit[static_cast<size_t>(k)];
                if (canon(lhs) != canon(h.counit[static_cast<size_t>(i)] * h.counit[static_cast<size_t>(j)])) {
                    out.push_back({"counit-not-multiplicative", {i, j}});
                    done = true;
                }
            }
        Rat eps1 = 0;
        for (int i = 0; i < r; ++i) eps1 += h.unit[static_cast<size_t>(i)] * h.counit[static_cast<size_t>(i)];
        if (canon(eps1) != canon(Rat(1))) out.push_back({"counit-unit", {}});
    }

    // antipode: mult (S (x) id) Delta = unit . counit = mult (id (x) S) Delta
    for (int i = 0; i < r; ++i) {
        auto left = detail::zero_vec(r), right = detail::zero_vec(r);
        auto [b, e] = h.comult.slice(i);
        for (auto it = b; it != e; ++it) {
            int a = (*it).first[1], bb = (*it).first[2];
            const Rat& c = (*it).second;
            for (int s = 0; s < r; ++s) {
                const Rat& sa = h.antipode.at(s, a);
                if (sa != 0)
                    for (const auto& [k, c2] : h.product(s, bb)) left[static_cast<size_t>(k)] += c * sa * c2;
                const Rat& sb = h.antipode.at(s, bb);
                if (sb != 0)
                    for (const auto& [k, c2] : h.product(a, s)) right[static_cast<size_t>(k)] += c * sb * c2;
            }
        }
        bool bad_left = false, bad_right = false;
        for (int k = 0; k < r; ++k) {
            Rat want = h.counit[static_cast<size_t>(i)] * h.unit[static_cast<size_t>(k)];
            if (canon(left[static_cast<size_t>(k)]) != canon(want)) bad_left = true;
            if (canon(right[static_cast<size_t>(k)]) != canon(want)) bad_right = true;
        }
        if (bad_left) out.push_back({"antipode-left", {i}});
        if (bad_right) out.push_back({"antipode-right", {i}});
        if (bad_left || bad_right) break;
    }

    // commutativity of mult (coordinate rings only)
    if (!h.dual_flavor) {
        bool done = false;
        for (int i = 0; i < r && !done; ++i)
            for (int j = i + 1; j < r && !done; ++j) {
                auto lhs = detail::zero_vec(r), rhs = detail::zero_vec(r);
                for (const auto& [k, c] : h.product(i, j)) lhs[static_cast<size_t>(k)] += c;
                for (const auto& [k, c] : h.product(j, i)) rhs[static_cast<size_t>(k)] += c;
                for (int k = 0; k < r; ++k)
                    if (canon(lhs[static_cast<size_t>(k)]) != canon(rhs[static_cast<size_t>(k)])) {
                        out.push_back({"commutativity", {i, j}});
                        done = true;
                        break;
                    }
            }
    }

    // S . S = id
    {
        ExactMatrix ss = h.antipode * h.antipode;
        if (ss != ExactMatrix::identity(ring, r)) out.push_back({"antipode-involution", {}});
    }

    return out;
}

/// Function algebra k^G of a finite group: indicator basis e_g, convolution
/// comultiplication.
inline HopfAlgebra constant_group(const CayleyTable& table, const RingSpec& ring) {
    std::string err = table.check();
    if (!err.empty()) throw error("invalid group table: " + err);
    const int n = table.order();
    HopfAlgebra h;
    h.ring = ring;
    h.rank = n;
    for (int g = 0; g < n; ++g) h.labels.push_back("e[" + table.names[static_cast<size_t>(g)] + "]");
    for (int g = 0; g < n; ++g) h.mult.set(ring, g, g, g, 1);
    h.unit.assign(static_cast<size_t>(n), Rat(1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) h.comult.set(ring, table.at(a, b), a, b, 1);
    h.counit.assign(static_cast<size_t>(n), Rat(0));
    h.counit[static_cast<size_t>(table.identity)] = 1;
    h.antipode = ExactMatrix(ring, n, n);
    for (int g = 0; g < n; ++g) h.antipode.set(table.inverse(g), g, 1);
    h.group = table;
    return h;
}

/// k[x]/(x^n - 1) with x grouplike: the multiplicative scheme of n-th roots
/// of unity.
inline HopfAlgebra mu_n(int n, const RingSpec& ring) {
    if (n < 1) throw error("mu_n requires n >= 1");
    HopfAlgebra h;
    h.ring = ring;
    h.rank = n;
    for (int i = 0; i < n; ++i) h.labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h.mult.set(ring, i, j, (i + j) % n, 1);
    h.unit.assign(static_cast<size_t>(n), Rat(0));
    h.unit[0] = 1;
    for (int i = 0; i < n; ++i) h.comult.set(ring, i, i, i, 1);
    h.counit.assign(static_cast<size_t>(n), Rat(1));
    h.antipode = ExactMatrix(ring, n, n);
    for (int i = 0; i < n; ++i) h.antipode.set((n - i) % n, i, 1);
    return h;
}

/// k[x]/(x^p) with x primitive, over a ring of characteristic p: the
/// infinitesimal additive scheme.
inline HopfAlgebra alpha_p(int p, const RingSpec& ring) {
    if (p < 2 || !is_prime(Int(p))) throw error("alpha_p requires a prime p");
    if (ring.characteristic() != p) throw error("alpha_p requires ring characteristic " + std::to_string(p));
    HopfAlgebra h;
    h.ring = ring;
    h.rank = p;
    for (int i = 0; i < p; ++i) h.labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j + i < p; ++j) h.mult.set(ring, i, j, i + j, 1);
    h.unit.assign(static_cast<size_t>(p), Rat(0));
    h.unit[0] = 1;
    // binomial comultiplication on powers of a primitive element
    std::vector<std::vector<Int>> choose(static_cast<size_t>(p), std::vector<Int>(static_cast<size_t>(p), Int(0)));
    for (int n = 0; n < p; ++n) {
        choose[static_cast<size_t>(n)][0] = 1;
        for (int k = 1; k <= n; ++k)
            choose[static_cast<size_t>(n)][static_cast<size_t>(k)] =
                choose[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)] +
                (k <= n - 1 ? choose[static_cast<size_t>(n - 1)][static_cast<size_t>(k)] : Int(0));
    }
    for (int n = 0; n < p; ++n)
        for (int k = 0; k <= n; ++k)
            h.comult.set(ring, n, k, n - k, Rat(choose[static_cast<size_t>(n)][static_cast<size_t>(k)]));
    h.counit.assign(static_cast<size_t>(p), Rat(0));
    h.counit[0] = 1;
    h.antipode = ExactMatrix(ring, p, p);
    for (int i = 0; i < p; ++i) h.antipode.set(i, i, (i % 2 == 0) ? 1 : -1);
    return h;
}

/// Tensor-product Hopf algebra on basis e_{i1} (x) e_{i2}, flat index
/// i1 * rank2 + i2.
inline HopfAlgebra direct_product(const HopfAlgebra& h1, const HopfAlgebra& h2) {
    if (h1.ring != h2.ring) throw error("direct_product requires a common ring");
    const int r1 = h1.rank, r2 = h2.rank;
    HopfAlgebra h;
    h.ring = h1.ring;
    h.rank = r1 * r2;
    for (int i1 = 0; i1 < r1; ++i1)
        for (int i2 = 0; i2 < r2; ++i2)
            h.labels.push_back("(" + h1.labels[static_cast<size_t>(i1)] + "," + h2.labels[static_cast<size_t>(i2)] + ")");
    auto flat = [r2](int a, int b) { return a * r2 + b; };
    for (const auto& [k1, c1] : h1.mult.entries())
        for (const auto& [k2, c2] : h2.mult.entries())
            h.mult.set(h.ring, flat(k1[0], k2[0]), flat(k1[1], k2[1]), flat(k1[2], k2[2]), c1 * c2);
    for (const auto& [k1, c1] : h1.comult.entries())
        for (const auto& [k2, c2] : h2.comult.entries())
            h.comult.set(h.ring, flat(k1[0], k2[0]), flat(k1[1], k2[1]), flat(k1[2], k2[2]), c1 * c2);
    h.unit.assign(static_cast<size_t>(h.rank), Rat(0));
    h.counit.assign(static_cast<size_t>(h.rank), Rat(0));
    for (int i1 = 0; i1 < r1; ++i1)
        for (int i2 = 0; i2 < r2; ++i2) {
            h.unit[static_cast<size_t>(flat(i1, i2))] = h.ring.canonical(h1.unit[static_cast<size_t>(i1)] * h2.unit[static_cast<size_t>(i2)]);
            h.counit[static_cast<size_t>(flat(i1, i2))] = h.ring.canonical(h1.counit[static_cast<size_t>(i1)] * h2.counit[static_cast<size_t>(i2)]);
        }
    h.antipode = ExactMatrix(h.ring, h.rank, h.rank);
    for (int i1 = 0; i1 < r1; ++i1)
        for (int i2 = 0; i2 < r2; ++i2)
            for (int j1 = 0; j1 < r1; ++j1)
                for (int j2 = 0; j2 < r2; ++j2) {
                    Rat v = h1.antipode.at(i1, j1) * h2.antipode.at(i2, j2);
                    if (v != 0) h.antipode.set(flat(i1, i2), flat(j1, j2), v);
                }
    h.dual_flavor = h1.dual_flavor || h2.dual_flavor;
    if (h1.group && h2.group && !h1.dual_flavor && !h2.dual_flavor)
        h.group = CayleyTable::product(*h1.group, *h2.group);
    return h;
}

/// Scalar extension Z -> Z/m or Z -> Q along the canonical map.
inline HopfAlgebra base_change(const HopfAlgebra& h, const RingSpec& target) {
    if (!h.ring.is_integers()) throw error("base_change source must be over Z");
    if (target.is_integers()) throw error("base_change target must be Z/m or Q");
    HopfAlgebra out;
    out.ring = target;
    out.rank = h.rank;
    out.labels = h.labels;
    for (const auto& [k, c] : h.mult.entries()) out.mult.set(target, k[0], k[1], k[2], c);
    for (const auto& [k, c] : h.comult.entries()) out.comult.set(target, k[0], k[1], k[2], c);
    out.unit.reserve(h.unit.size());
    out.counit.reserve(h.counit.size());
    for (const Rat& v : h.unit) out.unit.push_back(target.canonical(v));
    for (const Rat& v : h.counit) out.counit.push_back(target.canonical(v));
    out.antipode = h.antipode.with_ring(target);
    out.dual_flavor = h.dual_flavor;
    out.group = h.group;
    return out;
}

/// Dual Hopf algebra on the dual basis: convolution algebra of measures.
inline HopfAlgebra dual(const HopfAlgebra& h) {
    auto violations = validate(h);
    if (!violations.empty()) throw error("dual: input fails validation: " + violations.front().describe());
    HopfAlgebra out;
    out.ring = h.ring;
    out.rank = h.rank;
    for (const auto& l : h.labels) out.labels.push_back(l + "*");
    for (const auto& [k, c] : h.comult.entries()) out.mult.set(h.ring, k[1], k[2], k[0], c);
    for (const auto& [k, c] : h.mult.entries()) out.comult.set(h.ring, k[2], k[0], k[1], c);
    out.unit = h.counit;
    out.counit = h.unit;
    out.antipode = h.antipode.transpose();
    out.dual_flavor = true;
    return out;
}

/// Structure-constant equality (ring, tensors, unit, counit, antipode);
/// labels and provenance flags are ignored.
inline bool same_structure(const HopfAlgebra& a, const HopfAlgebra& b) {
    return a.ring == b.ring && a.rank == b.rank && a.mult == b.mult && a.comult == b.comult &&
           a.unit == b.unit && a.counit == b.counit && a.antipode == b.antipode;
}

}  // namespace fgs
