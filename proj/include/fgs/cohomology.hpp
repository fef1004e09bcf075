#pragma once

#include <fgs/measure.hpp>

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace fgs {

/// The standard cobar/Hochschild complex C^n = M (x) H^(x)n with basis index
/// a * r^n + i_1 * r^(n-1) + ... + i_n.
struct CochainComplex {
    HopfAlgebra parent;
    Comodule coefficients;
    int max_degree = 0;
    std::vector<ExactMatrix> differentials;  // d^0 .. d^max_degree

    int rank_at(int n) const {
        long long s = coefficients.rank;
        for (int t = 0; t < n; ++t) s *= parent.rank;
        return static_cast<int>(s);
    }
};

namespace detail {

inline int encode_digits(int a, const std::vector<int>& digits, int r) {
    long long v = a;
    for (int d : digits) v = v * r + d;
    return static_cast<int>(v);
}

inline ExactMatrix cobar_differential(const HopfAlgebra& h, const Comodule& m, int n) {
    const int r = h.rank, d = m.rank;
    long long cols = d, rows;
    for (int t = 0; t < n; ++t) cols *= r;
    rows = cols * r;
    ExactMatrix out(h.ring, static_cast<int>(rows), static_cast<int>(cols));

    std::vector<int> digits(static_cast<size_t>(n));
    for (int col = 0; col < static_cast<int>(cols); ++col) {
        int rest = col;
        for (int t = n - 1; t >= 0; --t) {
            digits[static_cast<size_t>(t)] = rest % r;
            rest /= r;
        }
        const int a = rest;
        const int tail = col - a * static_cast<int>(cols / d);

        // coact on the module slot
        {
            auto [s, e] = m.coaction.slice(a);
            const int block = static_cast<int>(cols / d);  // r^n
            for (auto it = s; it != e; ++it)
                out.add_at(((*it).first[1] * r + (*it).first[2]) * block + tail, col, (*it).second);
        }
        // comultiply slot t, sign (-1)^t, slots counted from 1
        for (int t = 1; t <= n; ++t) {
            auto [s, e] = h.comult.slice(digits[static_cast<size_t>(t - 1)]);
            for (auto it = s; it != e; ++it) {
                std::vector<int> nd = digits;
                nd[static_cast<size_t>(t - 1)] = (*it).first[1];
                nd.insert(nd.begin() + t, (*it).first[2]);
                Rat v = (*it).second;
                out.add_at(encode_digits(a, nd, r), col, t % 2 == 0 ? v : -v);
            }
        }
        // append the unit, sign (-1)^(n+1)
        for (int k = 0; k < r; ++k) {
            const Rat& u = h.unit[static_cast<size_t>(k)];
            if (u != 0) out.add_at(col * r + k, col, n % 2 == 0 ? -u : u);
        }
    }
    return out;
}

}  // namespace detail

/// Builds d^0..d^max_degree and verifies d.d = 0. The guard bounds the rank
/// of every cochain space touched, C^(max_degree+1) included.
inline CochainComplex build_complex(const HopfAlgebra& h, const Comodule& m, int max_degree,
                                    long long size_limit = 5000) {
    if (max_degree < 0) throw error("max degree must be nonnegative");
    auto hv = validate(h);
    if (!hv.empty()) throw error("build_complex: Hopf algebra fails validation: " + hv.front().describe());
    if (!same_structure(h, m.parent)) throw error("build_complex: parent mismatch");
    auto mv = validate_comodule(m);
    if (!mv.empty()) throw error("build_complex: comodule fails validation: " + mv.front().describe());

    long long size = m.rank;
    for (int n = 0; n <= max_degree + 1; ++n) {
        if (size > size_limit) throw error("complex size exceeds the configured limit");
        size *= h.rank;
    }

    CochainComplex c{h, m, max_degree, {}};
    for (int n = 0; n <= max_degree; ++n) c.differentials.push_back(detail::cobar_differential(h, m, n));
    for (int n = 0; n + 1 <= max_degree; ++n)
        if (!(c.differentials[static_cast<size_t>(n + 1)] * c.differentials[static_cast<size_t>(n)]).is_zero())
            throw error("differential does not square to zero");
    return c;
}

/// Cocycles modulo coboundaries in degree i, with stored representatives.
inline SubquotientBasis cocycle_basis(const CochainComplex& c, int i) {
    if (i < 0 || i > c.max_degree) throw error("degree out of range for this complex");
    ExactMatrix kern = kernel_basis(c.differentials[static_cast<size_t>(i)]);
    ExactMatrix rels = i == 0 ? ExactMatrix(c.parent.ring, c.rank_at(0), 0)
                              : c.differentials[static_cast<size_t>(i - 1)];
    return SubquotientBasis(kern, rels);
}

inline ModulePresentation cohomology_at(const CochainComplex& c, int i) {
    return cocycle_basis(c, i).presentation();
}

/// Convenience form building a complex just deep enough for degree i.
inline ModulePresentation cohomology_at(const HopfAlgebra& h, const Comodule& m, int i,
                                        long long size_limit = 5000) {
    return cohomology_at(build_complex(h, m, i, size_limit), i);
}

struct AnnihilationLine {
    int degree = 0;
    ModulePresentation presentation;
    bool annihilated = false;
};

struct AnnihilationReport {
    Int bound;
    std::vector<AnnihilationLine> lines;  // degrees 1..max_degree
    bool all_annihilated = true;
};

/// Checks that torsion_bound(h) annihilates H^i for 0 < i <= max_degree. A
/// failed degree yields a false verdict in the report, not an exception.
inline AnnihilationReport verify_annihilation(const HopfAlgebra& h, const Comodule& m, int max_degree,
                                              long long size_limit = 5000) {
    CochainComplex c = build_complex(h, m, max_degree, size_limit);
    AnnihilationReport rep{torsion_bound(h), {}, true};
    for (int i = 1; i <= max_degree; ++i) {
        ModulePresentation p = cohomology_at(c, i);
        bool ok = true;
        for (const Int& f : p.factors)
            if (!h.ring.in_ideal(rep.bound, f)) ok = false;
        rep.lines.push_back({i, std::move(p), ok});
        rep.all_annihilated = rep.all_annihilated && ok;
    }
    return rep;
}

/// Element of C^p(G, A_s) for a graded comodule algebra A.
struct Cochain {
    int cdegree = 0;
    int adegree = 0;
    ExactMatrix coords;  // rank(A_adegree) * r^cdegree rows, one column
};

namespace detail {

inline void expand_comult_rec(const HopfAlgebra& h, int j, int count, const Rat& coeff,
                              std::vector<int>& prefix, std::map<std::vector<int>, Rat>& out) {
    if (count == 1) {
        prefix.push_back(j);
        out[prefix] += coeff;
        prefix.pop_back();
        return;
    }
    auto [s, e] = h.comult.slice(j);
    for (auto it = s; it != e; ++it) {
        prefix.push_back((*it).first[1]);
        expand_comult_rec(h, (*it).first[2], count - 1, coeff * (*it).second, prefix, out);
        prefix.pop_back();
    }
}

/// Delta^(count-1)(e_j) as a map from leg digit strings to coefficients.
inline std::map<std::vector<int>, Rat> expand_comult(const HopfAlgebra& h, int j, int count) {
    std::map<std::vector<int>, Rat> out;
    std::vector<int> prefix;
    expand_comult_rec(h, j, count, 1, prefix, out);
    return out;
}

}  // namespace detail

/// Cup product on cochains: for p >= 1 coact on the algebra slot of v, spread
/// it over the p Hopf slots of u by iterated comultiplication, and multiply
/// slotwise; for p = 0 multiply the algebra slots directly.
inline Cochain cup(const Cochain& u, const Cochain& v, const GradedComoduleAlgebra& alg) {
    if (u.adegree < 0 || v.adegree < 0 || u.adegree + v.adegree > alg.cap)
        throw error("cup product exceeds the algebra degree cap");
    const HopfAlgebra& h = alg.parent;
    const int r = h.rank, p = u.cdegree, q = v.cdegree;
    const Comodule& au = alg.pieces[static_cast<size_t>(u.adegree)];
    const Comodule& av = alg.pieces[static_cast<size_t>(v.adegree)];
    const Comodule& aw = alg.pieces[static_cast<size_t>(u.adegree + v.adegree)];
    const ExactMatrix& mul = alg.product(u.adegree, v.adegree);

    long long pow_pq = 1;
    for (int t = 0; t < p + q; ++t) pow_pq *= r;
    long long pow_p = 1, pow_q = 1;
    for (int t = 0; t < p; ++t) pow_p *= r;
    for (int t = 0; t < q; ++t) pow_q *= r;
    if (u.coords.rows() != au.rank * static_cast<int>(pow_p) || u.coords.cols() != 1)
        throw error("cup: left cochain shape mismatch");
    if (v.coords.rows() != av.rank * static_cast<int>(pow_q) || v.coords.cols() != 1)
        throw error("cup: right cochain shape mismatch");

    Cochain out{p + q, u.adegree + v.adegree, ExactMatrix(h.ring, aw.rank * static_cast<int>(pow_pq), 1)};

    for (int cu = 0; cu < u.coords.rows(); ++cu) {
        const Rat& ucoeff = u.coords.at(cu, 0);
        if (ucoeff == 0) continue;
        const int a = cu / static_cast<int>(pow_p);
        std::vector<int> f(static_cast<size_t>(p));
        {
            int rest = cu % static_cast<int>(pow_p);
            for (int t = p - 1; t >= 0; --t) {
                f[static_cast<size_t>(t)] = rest % r;
                rest /= r;
            }
        }
        for (int cv = 0; cv < v.coords.rows(); ++cv) {
            const Rat& vcoeff = v.coords.at(cv, 0);
            if (vcoeff == 0) continue;
            const int b = cv / static_cast<int>(pow_q);
            const int gtail = cv % static_cast<int>(pow_q);
            const Rat base = ucoeff * vcoeff;

            if (p == 0) {
                for (int w = 0; w < aw.rank; ++w) {
                    const Rat& c3 = mul.at(w, a * av.rank + b);
                    if (c3 != 0) out.coords.add_at(w * static_cast<int>(pow_q) + gtail, 0, base * c3);
                }
                continue;
            }

            auto [s, e] = av.coaction.slice(b);
            for (auto it = s; it != e; ++it) {
                const int b0 = (*it).first[1], j = (*it).first[2];
                const Rat c1 = base * (*it).second;
                for (const auto& [legs, c2] : detail::expand_comult(h, j, p)) {
                    // multiply slotwise: f_t . leg_t
                    std::map<int, Rat> strings{{0, c1 * c2}};
                    for (int t = 0; t < p; ++t) {
                        std::map<int, Rat> next;
                        for (const auto& [enc, cc] : strings)
                            for (const auto& [k, cm] : h.product(f[static_cast<size_t>(t)], legs[static_cast<size_t>(t)]))
                                next[enc * r + k] += cc * cm;
                        strings = std::move(next);
                    }
                    for (int w = 0; w < aw.rank; ++w) {
                        const Rat& c3 = mul.at(w, a * av.rank + b0);
                        if (c3 == 0) continue;
                        for (const auto& [enc, cc] : strings)
                            out.coords.add_at((w * static_cast<int>(pow_p) + enc) * static_cast<int>(pow_q) + gtail,
                                              0, cc * c3);
                    }
                }
            }
        }
    }
    return out;
}

inline Cochain unit_cochain(const GradedComoduleAlgebra& alg) { return {0, 0, alg.unit}; }

/// One bigraded slot (cohomological degree, internal algebra degree).
struct RingTableEntry {
    int cdegree = 0;
    int adegree = 0;
    SubquotientBasis basis;
};

struct CohomologyRingTable {
    HopfAlgebra parent;
    int max_degree = 0;
    int cap = 0;
    std::map<std::pair<int, int>, RingTableEntry> entries;
    // (i1, j1, k1, i2, j2, k2) -> coordinates of class k1 . class k2 in entry (i1+i2, j1+j2)
    std::map<std::array<int, 6>, std::vector<Rat>> products;

    const RingTableEntry& entry(int cdegree, int adegree) const {
        auto it = entries.find({cdegree, adegree});
        if (it == entries.end()) throw error("no table entry at this bidegree");
        return it->second;
    }

    const std::vector<Rat>& product_coords(int i1, int j1, int k1, int i2, int j2, int k2) const {
        auto it = products.find({i1, j1, k1, i2, j2, k2});
        if (it == products.end()) throw error("no recorded product for these classes");
        return it->second;
    }
};

/// Bigraded cohomology of a graded comodule algebra with cup products reduced
/// to the chosen representatives.
inline CohomologyRingTable cohomology_ring(const HopfAlgebra& h, const GradedComoduleAlgebra& alg,
                                           int max_degree, long long size_limit = 5000) {
    if (!same_structure(h, alg.parent)) throw error("cohomology_ring: parent mismatch");
    std::vector<CochainComplex> complexes;
    for (int j = 0; j <= alg.cap; ++j)
        complexes.push_back(build_complex(h, alg.pieces[static_cast<size_t>(j)], max_degree, size_limit));

    CohomologyRingTable table{h, max_degree, alg.cap, {}, {}};
    for (int i = 0; i <= max_degree; ++i)
        for (int j = 0; j <= alg.cap; ++j)
            table.entries.emplace(std::make_pair(i, j),
                                  RingTableEntry{i, j, cocycle_basis(complexes[static_cast<size_t>(j)], i)});

    for (const auto& [key1, e1] : table.entries)
        for (const auto& [key2, e2] : table.entries) {
            const int i = key1.first + key2.first, j = key1.second + key2.second;
            if (i > max_degree || j > alg.cap) continue;
            const RingTableEntry& target = table.entry(i, j);
            for (int k1 = 0; k1 < e1.basis.factor_count(); ++k1)
                for (int k2 = 0; k2 < e2.basis.factor_count(); ++k2) {
                    Cochain cu{key1.first, key1.second, e1.basis.representatives().col(k1)};
                    Cochain cv{key2.first, key2.second, e2.basis.representatives().col(k2)};
                    Cochain w = cup(cu, cv, alg);
                    if (!(complexes[static_cast<size_t>(j)].differentials[static_cast<size_t>(i)] * w.coords).is_zero())
                        throw error("cup product of cocycles is not a cocycle");
                    table.products[{key1.first, key1.second, k1, key2.first, key2.second, k2}] =
                        target.basis.coordinates(w.coords);
                }
        }
    return table;
}

struct ClassRef {
    int cdegree = 0;
    int adegree = 0;
    int index = 0;
};

struct GenerationReport {
    std::optional<int> degree;  // empty: not generated within the table
    std::vector<ClassRef> witnesses;
    int max_degree = 0;
};

namespace detail {

/// Columns that kill nothing new: d_k times the k-th unit column for torsion
/// factors, so span tests work against the presentation relations.
inline ExactMatrix presentation_relation_columns(const ModulePresentation& p) {
    const int n = static_cast<int>(p.factors.size());
    ExactMatrix out(p.ring, n, n);
    for (int k = 0; k < n; ++k)
        if (p.factors[static_cast<size_t>(k)] != 0) out.set(k, k, Rat(p.factors[static_cast<size_t>(k)]));
    return out;
}

}  // namespace detail

/// Smallest g such that classes of cohomological degree <= g generate every
/// recorded slot under the recorded products; empty if the truncated table
/// never saturates.
inline GenerationReport generation_degree(const CohomologyRingTable& t) {
    const RingSpec& ring = t.parent.ring;

    for (int g = 0; g <= t.max_degree; ++g) {
        std::map<std::pair<int, int>, std::vector<std::vector<Rat>>> gen;
        for (const auto& [key, e] : t.entries) {
            auto& vecs = gen[key];
            if (key.first > g) continue;
            for (int k = 0; k < e.basis.factor_count(); ++k) {
                std::vector<Rat> unit(static_cast<size_t>(e.basis.factor_count()), Rat(0));
                unit[static_cast<size_t>(k)] = 1;
                vecs.push_back(std::move(unit));
            }
        }

        auto in_span = [&](const std::pair<int, int>& key, const std::vector<Rat>& w) {
            const RingTableEntry& e = t.entry(key.first, key.second);
            const int n = e.basis.factor_count();
            ExactMatrix rels = detail::presentation_relation_columns(e.basis.presentation());
            ExactMatrix m(ring, n, static_cast<int>(gen[key].size()) + rels.cols());
            for (int c = 0; c < static_cast<int>(gen[key].size()); ++c)
                for (int i = 0; i < n; ++i) m.set(i, c, gen[key][static_cast<size_t>(c)][static_cast<size_t>(i)]);
            for (int c = 0; c < rels.cols(); ++c)
                for (int i = 0; i < n; ++i) m.set(i, static_cast<int>(gen[key].size()) + c, rels.at(i, c));
            ExactMatrix wcol(ring, n, 1);
            for (int i = 0; i < n; ++i) wcol.set(i, 0, w[static_cast<size_t>(i)]);
            return try_solve(m, wcol).has_value();
        };

        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [key1, e1] : t.entries)
                for (const auto& [key2, e2] : t.entries) {
                    const std::pair<int, int> kt{key1.first + key2.first, key1.second + key2.second};
                    if (kt.first > t.max_degree || kt.second > t.cap) continue;
                    const int nt = t.entry(kt.first, kt.second).basis.factor_count();
                    if (nt == 0) continue;
                    const size_t n1 = gen[key1].size(), n2 = gen[key2].size();
                    for (size_t x1 = 0; x1 < n1; ++x1)
                        for (size_t x2 = 0; x2 < n2; ++x2) {
                            std::vector<Rat> w(static_cast<size_t>(nt), Rat(0));
                            for (int k1 = 0; k1 < e1.basis.factor_count(); ++k1) {
                                const Rat& a = gen[key1][x1][static_cast<size_t>(k1)];
                                if (a == 0) continue;
                                for (int k2 = 0; k2 < e2.basis.factor_count(); ++k2) {
                                    const Rat& b = gen[key2][x2][static_cast<size_t>(k2)];
                                    if (b == 0) continue;
                                    const auto& pc = t.product_coords(key1.first, key1.second, k1,
                                                                      key2.first, key2.second, k2);
                                    for (int i = 0; i < nt; ++i)
                                        w[static_cast<size_t>(i)] += a * b * pc[static_cast<size_t>(i)];
                                }
                            }
                            for (Rat& c : w) c = ring.canonical(c);
                            bool all_zero = true;
                            for (const Rat& c : w)
                                if (c != 0) all_zero = false;
                            if (all_zero) continue;
                            if (!in_span(kt, w)) {
                                gen[kt].push_back(w);
                                changed = true;
                            }
                        }
                }
        }

        bool full = true;
        for (const auto& [key, e] : t.entries) {
            for (int k = 0; k < e.basis.factor_count() && full; ++k) {
                std::vector<Rat> unit(static_cast<size_t>(e.basis.factor_count()), Rat(0));
                unit[static_cast<size_t>(k)] = 1;
                if (!in_span(key, unit)) full = false;
            }
            if (!full) break;
        }
        if (full) {
            GenerationReport rep{g, {}, t.max_degree};
            for (const auto& [key, e] : t.entries) {
                if (key.first > g) continue;
                for (int k = 0; k < e.basis.factor_count(); ++k) rep.witnesses.push_back({key.first, key.second, k});
            }
            return rep;
        }
    }
    return {std::nullopt, {}, t.max_degree};
}

/// Left action matrices g -> A_g of a comodule over a constant group algebra.
inline std::vector<ExactMatrix> action_matrices(const Comodule& m) {
    if (!m.parent.group) throw error("action matrices require a constant group algebra");
    std::vector<ExactMatrix> out(static_cast<size_t>(m.parent.rank),
                                 ExactMatrix(m.parent.ring, m.rank, m.rank));
    for (const auto& [key, c] : m.coaction.entries()) out[static_cast<size_t>(key[2])].set(key[1], key[0], c);
    return out;
}

/// Group cohomology from the inhomogeneous bar complex, sharing no
/// construction code with build_complex. Input is a group table plus a left
/// action g -> action[g].
inline std::vector<ModulePresentation> bar_complex_oracle(const CayleyTable& table,
                                                          const std::vector<ExactMatrix>& action,
                                                          int max_degree, long long size_limit = 5000) {
    const int o = table.order();
    if (static_cast<int>(action.size()) != o) throw error("bar oracle: one action matrix per group element");
    const RingSpec ring = action.front().ring();
    const int d = action.front().rows();
    for (const ExactMatrix& a : action)
        if (a.rows() != d || a.cols() != d || a.ring() != ring) throw error("bar oracle: action shape mismatch");
    if (action[static_cast<size_t>(table.identity)] != ExactMatrix::identity(ring, d))
        throw error("bar oracle: identity must act trivially");
    for (int g = 0; g < o; ++g)
        for (int k = 0; k < o; ++k)
            if (action[static_cast<size_t>(g)] * action[static_cast<size_t>(k)] !=
                action[static_cast<size_t>(table.at(g, k))])
                throw error("bar oracle: action is not a homomorphism");

    long long size = d;
    for (int n = 0; n <= max_degree + 1; ++n) {
        if (size > size_limit) throw error("bar oracle: complex size exceeds the configured limit");
        size *= o;
    }

    // differentials of maps(G^n, M); row basis (b, h_1..h_{n+1})
    std::vector<ExactMatrix> diffs;
    for (int n = 0; n <= max_degree; ++n) {
        long long cols = d, rows;
        for (int t = 0; t < n; ++t) cols *= o;
        rows = cols * o;
        ExactMatrix dn(ring, static_cast<int>(rows), static_cast<int>(cols));
        std::vector<int> hs(static_cast<size_t>(n + 1));
        for (long long row_block = 0; row_block < rows / d; ++row_block) {
            long long rest = row_block;
            for (int t = n; t >= 0; --t) {
                hs[static_cast<size_t>(t)] = static_cast<int>(rest % o);
                rest /= o;
            }
            // columns reachable from this argument tuple
            long long tail = row_block % (rows / d / o);  // h_2..h_{n+1} encoded
            for (int b = 0; b < d; ++b) {
                long long row = b * (rows / d) + row_block;
                // action term
                const ExactMatrix& ah = action[static_cast<size_t>(hs[0])];
                for (int a = 0; a < d; ++a) {
                    const Rat& v = ah.at(b, a);
                    if (v != 0) dn.add_at(static_cast<int>(row), static_cast<int>(a * (cols / d) + tail), v);
                }
                // face maps merging h_t, h_{t+1}
                for (int t = 1; t <= n; ++t) {
                    long long enc = 0;
                    for (int s = 0; s <= n; ++s) {
                        if (s == t) continue;
                        int val = s == t - 1 ? table.at(hs[static_cast<size_t>(t - 1)], hs[static_cast<size_t>(t)])
                                             : hs[static_cast<size_t>(s)];
                        enc = enc * o + val;
                    }
                    dn.add_at(static_cast<int>(row), static_cast<int>(b * (cols / d) + enc),
                              t % 2 == 0 ? Rat(1) : Rat(-1));
                }
                // last face dropping h_{n+1}
                long long enc = 0;
                for (int s = 0; s < n; ++s) enc = enc * o + hs[static_cast<size_t>(s)];
                dn.add_at(static_cast<int>(row), static_cast<int>(b * (cols / d) + enc),
                          n % 2 == 0 ? Rat(-1) : Rat(1));
            }
        }
        diffs.push_back(std::move(dn));
    }
    for (size_t n = 0; n + 1 < diffs.size(); ++n)
        if (!(diffs[n + 1] * diffs[n]).is_zero()) throw error("bar oracle: differential does not square to zero");

    std::vector<ModulePresentation> out;
    for (int i = 0; i <= max_degree; ++i) {
        ExactMatrix kern = kernel_basis(diffs[static_cast<size_t>(i)]);
        ExactMatrix rels = i == 0 ? ExactMatrix(ring, d, 0) : diffs[static_cast<size_t>(i - 1)];
        out.push_back(subquotient_presentation(kern, rels));
    }
    return out;
}

/// Cohomology of a cyclic group from the period-2 resolution: kernels and
/// images of the difference map t - 1 and the norm 1 + t + ... + t^(m-1).
inline std::vector<ModulePresentation> cyclic_resolution_oracle(const ExactMatrix& generator_action,
                                                                int order, int max_degree) {
    if (order < 1) throw error("cyclic oracle: order must be positive");
    const RingSpec& ring = generator_action.ring();
    const int d = generator_action.rows();
    if (generator_action.cols() != d) throw error("cyclic oracle: action must be square");

    ExactMatrix power = ExactMatrix::identity(ring, d);
    ExactMatrix norm(ring, d, d);
    for (int k = 0; k < order; ++k) {
        norm = norm + power;
        power = power * generator_action;
    }
    if (power != ExactMatrix::identity(ring, d)) throw error("cyclic oracle: action order mismatch");
    ExactMatrix diff = generator_action - ExactMatrix::identity(ring, d);

    std::vector<ModulePresentation> out;
    for (int i = 0; i <= max_degree; ++i) {
        if (i == 0)
            out.push_back(subquotient_presentation(kernel_basis(diff), ExactMatrix(ring, d, 0)));
        else if (i % 2 == 1)
            out.push_back(subquotient_presentation(kernel_basis(norm), diff));
        else
            out.push_back(subquotient_presentation(kernel_basis(diff), norm));
    }
    return out;
}

}  // namespace fgs
