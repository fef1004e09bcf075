#pragma once

#include <fgs/hopf.hpp>

#include <map>
#include <utility>
#include <vector>

namespace fgs {

/// Right comodule over a Hopf algebra: rho(e_a) = sum_{b,i} rho[a][b][i] e_b (x) f_i
/// with e_* the module basis and f_* the Hopf basis.
struct Comodule {
    HopfAlgebra parent;
    int rank = 0;
    SparseTensor3 coaction;

    /// Coaction as a (rank * r) x rank matrix, output rows indexed b * r + i.
    ExactMatrix rho_matrix() const {
        const int r = parent.rank;
        ExactMatrix m(parent.ring, rank * r, rank);
        for (const auto& [key, c] : coaction.entries()) m.set(key[1] * r + key[2], key[0], c);
        return m;
    }
};

inline bool same_parent(const Comodule& a, const Comodule& b) { return same_structure(a.parent, b.parent); }

/// f: M -> N on basis columns, extended to M (x) H -> N (x) H with the Hopf
/// leg untouched; rows/cols flattened as b * r + i.
inline ExactMatrix extend_by_hopf_leg(const ExactMatrix& f, int r) {
    ExactMatrix out(f.ring(), f.rows() * r, f.cols() * r);
    for (int bn = 0; bn < f.rows(); ++bn)
        for (int bm = 0; bm < f.cols(); ++bm) {
            const Rat& v = f.at(bn, bm);
            if (v == 0) continue;
            for (int i = 0; i < r; ++i) out.set(bn * r + i, bm * r + i, v);
        }
    return out;
}

/// Whether f (matrix of a linear map from.rank -> to.rank) commutes with the
/// coactions.
inline bool is_comodule_morphism(const Comodule& from, const Comodule& to, const ExactMatrix& f) {
    return to.rho_matrix() * f == extend_by_hopf_leg(f, from.parent.rank) * from.rho_matrix();
}

inline std::vector<Violation> validate_comodule(const Comodule& m) {
    std::vector<Violation> out;
    const int d = m.rank, r = m.parent.rank;
    const RingSpec& ring = m.parent.ring;

    for (int a = 0; a < d; ++a) {
        bool bad = false;
        for (int b = 0; b < d; ++b) {
            Rat s = 0;
            for (int i = 0; i < r; ++i) {
                Rat c = m.coaction.at(a, b, i);
                if (c != 0) s += c * m.parent.counit[static_cast<size_t>(i)];
            }
            if (ring.canonical(s) != ring.canonical(a == b ? Rat(1) : Rat(0))) bad = true;
        }
        if (bad) {
            out.push_back({"comodule-counit", {a}});
            break;
        }
    }

    for (int a = 0; a < d; ++a) {
        std::map<std::array<int, 3>, Rat> lhs, rhs;  // keys (b, x, y)
        auto [s, e] = m.coaction.slice(a);
        for (auto it = s; it != e; ++it) {
            int b = (*it).first[1], i = (*it).first[2];
            auto [cs, ce] = m.parent.comult.slice(i);
            for (auto jt = cs; jt != ce; ++jt) lhs[{b, (*jt).first[1], (*jt).first[2]}] += (*it).second * (*jt).second;
        }
        for (auto it = s; it != e; ++it) {
            int c = (*it).first[1], y = (*it).first[2];
            auto [cs, ce] = m.coaction.slice(c);
            for (auto jt = cs; jt != ce; ++jt) rhs[{(*jt).first[1], (*jt).first[2], y}] += (*it).second * (*jt).second;
        }
        bool bad = false;
        for (const auto& [k, v] : lhs)
            if (ring.canonical(v) != ring.canonical(rhs.count(k) ? rhs[k] : Rat(0))) bad = true;
        for (const auto& [k, v] : rhs)
            if (ring.canonical(v) != ring.canonical(lhs.count(k) ? lhs[k] : Rat(0))) bad = true;
        if (bad) {
            out.push_back({"comodule-coassociativity", {a}});
            break;
        }
    }
    return out;
}

/// rho(m) = m (x) 1.
inline Comodule trivial_comodule(const HopfAlgebra& h, int d) {
    if (d < 0) throw error("comodule rank must be nonnegative");
    Comodule m{h, d, {}};
    for (int a = 0; a < d; ++a)
        for (int k = 0; k < h.rank; ++k) m.coaction.set(h.ring, a, a, k, h.unit[static_cast<size_t>(k)]);
    return m;
}

/// M = k[G] with rho = Delta.
inline Comodule regular_comodule(const HopfAlgebra& h) {
    auto violations = validate(h);
    if (!violations.empty()) throw error("regular_comodule: input fails validation: " + violations.front().describe());
    Comodule m{h, h.rank, {}};
    for (const auto& [key, c] : h.comult.entries()) m.coaction.set(h.ring, key[0], key[1], key[2], c);
    return m;
}

/// Diagonal coaction on M1 (x) M2: coact both factors, multiply the Hopf legs.
inline Comodule tensor_comodule(const Comodule& m1, const Comodule& m2) {
    if (!same_parent(m1, m2)) throw error("tensor_comodule: parent mismatch");
    const HopfAlgebra& h = m1.parent;
    const int d2 = m2.rank;
    Comodule m{h, m1.rank * d2, {}};
    std::map<std::array<int, 3>, Rat> acc;
    for (const auto& [k1, c1] : m1.coaction.entries())
        for (const auto& [k2, c2] : m2.coaction.entries()) {
            Rat cc = c1 * c2;
            for (const auto& [k, cm] : h.product(k1[2], k2[2]))
                acc[{k1[0] * d2 + k2[0], k1[1] * d2 + k2[1], k}] += cc * cm;
        }
    for (const auto& [k, v] : acc) m.coaction.set(h.ring, k[0], k[1], k[2], v);
    return m;
}

/// Contragredient comodule on the dual basis, twisted by the antipode.
inline Comodule dual_comodule(const Comodule& m) {
    const HopfAlgebra& h = m.parent;
    Comodule out{h, m.rank, {}};
    std::map<std::array<int, 3>, Rat> acc;
    for (const auto& [key, c] : m.coaction.entries()) {
        // rho(e_b) ∋ e_a (x) f_i  contributes  rho*(f^a) ∋ f^b (x) S(f_i)
        int b = key[0], a = key[1], i = key[2];
        for (int k = 0; k < h.rank; ++k) {
            const Rat& s = h.antipode.at(k, i);
            if (s != 0) acc[{a, b, k}] += c * s;
        }
    }
    for (const auto& [k, v] : acc) out.coaction.set(h.ring, k[0], k[1], k[2], v);
    return out;
}

/// Reinterprets an integer comodule over Z/m or Q, reducing the coaction.
inline Comodule comodule_base_change(const Comodule& m, const RingSpec& target) {
    Comodule out{base_change(m.parent, target), m.rank, {}};
    for (const auto& [k, c] : m.coaction.entries()) out.coaction.set(target, k[0], k[1], k[2], c);
    return out;
}

/// Saturated basis of M^G = {m : rho(m) = m (x) 1}.
inline ExactMatrix invariants(const Comodule& m) {
    const int d = m.rank, r = m.parent.rank;
    ExactMatrix l(m.parent.ring, d * r, d);
    for (int a = 0; a < d; ++a) {
        auto [s, e] = m.coaction.slice(a);
        for (auto it = s; it != e; ++it) l.add_at((*it).first[1] * r + (*it).first[2], a, (*it).second);
        for (int i = 0; i < r; ++i) l.add_at(a * r + i, a, -m.parent.unit[static_cast<size_t>(i)]);
    }
    return kernel_basis(l);
}

/// 0 -> sub -> mid -> quot -> 0 with explicit inclusion and projection.
struct ShortExactSequence {
    Comodule sub, mid, quot;
    ExactMatrix inclusion;   // mid.rank x sub.rank
    ExactMatrix projection;  // quot.rank x mid.rank
};

/// Empty when the sequence is exact with comodule morphisms and a saturated
/// injective inclusion.
inline std::vector<std::string> check_ses(const ShortExactSequence& s) {
    std::vector<std::string> out;
    if (kernel_basis(s.inclusion).cols() != 0) out.push_back("inclusion is not injective");
    if (!is_saturated_summand(s.inclusion)) out.push_back("inclusion image is not a saturated summand");
    if (!try_solve(s.projection, ExactMatrix::identity(s.projection.ring(), s.quot.rank)).has_value())
        out.push_back("projection is not surjective");
    if (!(s.projection * s.inclusion).is_zero()) out.push_back("projection . inclusion is nonzero");
    if (s.sub.rank + s.quot.rank != s.mid.rank) out.push_back("ranks do not add up");
    if (!is_comodule_morphism(s.sub, s.mid, s.inclusion)) out.push_back("inclusion is not a comodule morphism");
    if (!is_comodule_morphism(s.mid, s.quot, s.projection)) out.push_back("projection is not a comodule morphism");
    for (const auto& v : validate_comodule(s.sub)) out.push_back("sub: " + v.describe());
    for (const auto& v : validate_comodule(s.mid)) out.push_back("mid: " + v.describe());
    for (const auto& v : validate_comodule(s.quot)) out.push_back("quot: " + v.describe());
    return out;
}

namespace detail {

/// Columns completing the columns of f (injective, saturated/summand image)
/// to a basis of the ambient free module.
inline ExactMatrix complement_columns(const ExactMatrix& f) {
    const RingSpec& ring = f.ring();
    const int n = f.rows(), s = f.cols();
    if (ring.is_rationals()) {
        ExactMatrix aug = ExactMatrix::hstack(f, ExactMatrix::identity(ring, n));
        std::vector<int> pivots = rref(aug);
        ExactMatrix out(ring, n, n - s);
        int c = 0;
        for (int p : pivots)
            if (p >= s) out.set(p - s, c++, 1);
        return out;
    }
    SnfCore core;
    if (ring.is_mod()) {
        const Int& m = ring.modulus();
        IntMat lifted(n, s + n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < s; ++j) lifted.at(i, j) = rat_num(f.at(i, j));
            lifted.at(i, s + i) = m;
        }
        core.A = std::move(lifted);
    } else {
        core.A = to_int_mat(f);
    }
    core.init_transforms(false, true, false);
    core.run();
    ExactMatrix out(ring, n, n - s);
    for (int c = s; c < n; ++c)
        for (int i = 0; i < n; ++i) out.set(i, c - s, Rat(core.Uinv->at(i, c)));
    return out;
}

}  // namespace detail

/// Builds the short exact sequence determined by a saturated sub-comodule
/// inclusion: induces the coaction on the sub by solving, constructs a
/// complement-based projection, and verifies everything.
inline ShortExactSequence ses_from_sub(const Comodule& mid, const ExactMatrix& inclusion) {
    const HopfAlgebra& h = mid.parent;
    const RingSpec& ring = h.ring;
    const int n = mid.rank, s = inclusion.cols(), r = h.rank;
    if (inclusion.rows() != n) throw error("inclusion shape mismatch");
    if (kernel_basis(inclusion).cols() != 0) throw error("inclusion is not injective");
    if (!is_saturated_summand(inclusion)) throw error("inclusion image is not a saturated summand");

    auto sub_rho = try_solve(extend_by_hopf_leg(inclusion, r), mid.rho_matrix() * inclusion);
    if (!sub_rho) throw error("submodule is not stable under the coaction");
    Comodule sub{h, s, {}};
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            for (int i = 0; i < r; ++i) {
                const Rat& v = sub_rho->at(b * r + i, a);
                if (v != 0) sub.coaction.set(ring, a, b, i, v);
            }

    ExactMatrix basis = ExactMatrix::hstack(inclusion, detail::complement_columns(inclusion));
    ExactMatrix basis_inv = solve(basis, ExactMatrix::identity(ring, n));
    if (basis * basis_inv != ExactMatrix::identity(ring, n) || basis_inv * basis != ExactMatrix::identity(ring, n))
        throw error("complement construction failed");
    ExactMatrix projection = basis_inv.rows_slice(s, n);
    ExactMatrix section = basis.cols_slice(s, n);

    ExactMatrix quot_rho_mat = extend_by_hopf_leg(projection, r) * mid.rho_matrix() * section;
    Comodule quot{h, n - s, {}};
    for (int a = 0; a < n - s; ++a)
        for (int b = 0; b < n - s; ++b)
            for (int i = 0; i < r; ++i) {
                const Rat& v = quot_rho_mat.at(b * r + i, a);
                if (v != 0) quot.coaction.set(ring, a, b, i, v);
            }

    ShortExactSequence ses{std::move(sub), mid, std::move(quot), inclusion, projection};
    auto problems = check_ses(ses);
    if (!problems.empty()) throw error("short exact sequence construction failed: " + problems.front());
    return ses;
}

/// Split sequence 0 -> M1 -> M1 (+) M2 -> M2 -> 0.
inline ShortExactSequence ses_direct_sum(const Comodule& m1, const Comodule& m2) {
    if (!same_parent(m1, m2)) throw error("ses_direct_sum: parent mismatch");
    const HopfAlgebra& h = m1.parent;
    Comodule mid{h, m1.rank + m2.rank, {}};
    for (const auto& [k, c] : m1.coaction.entries()) mid.coaction.set(h.ring, k[0], k[1], k[2], c);
    for (const auto& [k, c] : m2.coaction.entries())
        mid.coaction.set(h.ring, m1.rank + k[0], m1.rank + k[1], k[2], c);
    ExactMatrix inclusion(h.ring, mid.rank, m1.rank);
    for (int i = 0; i < m1.rank; ++i) inclusion.set(i, i, 1);
    ExactMatrix projection(h.ring, m2.rank, mid.rank);
    for (int i = 0; i < m2.rank; ++i) projection.set(i, m1.rank + i, 1);
    ShortExactSequence ses{m1, std::move(mid), m2, std::move(inclusion), std::move(projection)};
    auto problems = check_ses(ses);
    if (!problems.empty()) throw error("direct sum sequence failed: " + problems.front());
    return ses;
}

/// Annihilator exponent of coker(M^G -> M''^G), the module the torsion bound
/// is proved to kill.
inline Int ses_cokernel_exponent(const ShortExactSequence& s) {
    auto problems = check_ses(s);
    if (!problems.empty()) throw error("invalid short exact sequence: " + problems.front());
    ExactMatrix mid_inv = invariants(s.mid);
    ExactMatrix quot_inv = invariants(s.quot);
    return annihilator_exponent(subquotient_presentation(quot_inv, s.projection * mid_inv));
}

/// Graded commutative algebra with G-action: pieces A_0..A_cap, products
/// A_i (x) A_j -> A_{i+j} (domain flattened as a * rank(A_j) + b), unit in A_0.
struct GradedComoduleAlgebra {
    HopfAlgebra parent;
    std::vector<Comodule> pieces;
    std::map<std::pair<int, int>, ExactMatrix> products;
    ExactMatrix unit;  // rank(A_0) x 1
    int cap = 0;

    const ExactMatrix& product(int i, int j) const {
        auto it = products.find({i, j});
        if (it == products.end()) throw error("no product stored for these degrees");
        return it->second;
    }
};

namespace detail {

inline void enumerate_monomials(int dim, int degree, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == degree) {
        out.push_back(cur);
        return;
    }
    int lo = cur.empty() ? 0 : cur.back();
    for (int v = lo; v < dim; ++v) {
        cur.push_back(v);
        enumerate_monomials(dim, degree, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> monomial_basis(int dim, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    enumerate_monomials(dim, degree, cur, out);
    return out;
}

}  // namespace detail

/// Truncated symmetric algebra Sym(V) up to degree cap, with the coaction
/// induced degreewise and monomial products. Monomial bases are ordered
/// lexicographically.
inline GradedComoduleAlgebra graded_algebra_from_action(const Comodule& v, int cap) {
    if (cap < 0) throw error("degree cap must be nonnegative");
    auto violations = validate_comodule(v);
    if (!violations.empty()) throw error("graded_algebra_from_action: invalid comodule: " + violations.front().describe());
    const HopfAlgebra& h = v.parent;
    const RingSpec& ring = h.ring;
    const int r = h.rank;

    GradedComoduleAlgebra alg;
    alg.parent = h;
    alg.cap = cap;

    std::vector<std::vector<std::vector<int>>> bases;
    std::vector<std::map<std::vector<int>, int>> index;
    for (int d = 0; d <= cap; ++d) {
        bases.push_back(detail::monomial_basis(v.rank, d));
        std::map<std::vector<int>, int> ix;
        for (size_t i = 0; i < bases.back().size(); ++i) ix[bases.back()[i]] = static_cast<int>(i);
        index.push_back(std::move(ix));
    }

    for (int d = 0; d <= cap; ++d) {
        Comodule piece{h, static_cast<int>(bases[static_cast<size_t>(d)].size()), {}};
        for (size_t a = 0; a < bases[static_cast<size_t>(d)].size(); ++a) {
            // coact factor by factor, multiplying the Hopf legs
            std::map<std::pair<std::vector<int>, int>, Rat> state;
            for (int k = 0; k < r; ++k)
                if (h.unit[static_cast<size_t>(k)] != 0) state[{{}, k}] = h.unit[static_cast<size_t>(k)];
            for (int t : bases[static_cast<size_t>(d)][a]) {
                std::map<std::pair<std::vector<int>, int>, Rat> next;
                auto [s, e] = v.coaction.slice(t);
                for (const auto& [mk, coeff] : state)
                    for (auto it = s; it != e; ++it) {
                        int b = (*it).first[1], i = (*it).first[2];
                        for (const auto& [k2, cm] : h.product(mk.second, i)) {
                            std::vector<int> mono = mk.first;
                            mono.insert(std::upper_bound(mono.begin(), mono.end(), b), b);
                            next[{std::move(mono), k2}] += coeff * (*it).second * cm;
                        }
                    }
                state = std::move(next);
            }
            for (const auto& [mk, coeff] : state) {
                int b = index[static_cast<size_t>(d)].at(mk.first);
                Rat prev = piece.coaction.at(static_cast<int>(a), b, mk.second);
                piece.coaction.set(ring, static_cast<int>(a), b, mk.second, prev + coeff);
            }
        }
        alg.pieces.push_back(std::move(piece));
    }

    for (int i = 0; i <= cap; ++i)
        for (int j = 0; i + j <= cap; ++j) {
            const auto& bi = bases[static_cast<size_t>(i)];
            const auto& bj = bases[static_cast<size_t>(j)];
            ExactMatrix p(ring, static_cast<int>(bases[static_cast<size_t>(i + j)].size()),
                          static_cast<int>(bi.size() * bj.size()));
            for (size_t a = 0; a < bi.size(); ++a)
                for (size_t b = 0; b < bj.size(); ++b) {
                    std::vector<int> mono = bi[a];
                    mono.insert(mono.end(), bj[b].begin(), bj[b].end());
                    std::sort(mono.begin(), mono.end());
                    p.set(index[static_cast<size_t>(i + j)].at(mono),
                          static_cast<int>(a * bj.size() + b), 1);
                }
            alg.products.emplace(std::make_pair(i, j), std::move(p));
        }

    alg.unit = ExactMatrix(ring, 1, 1);
    alg.unit.set(0, 0, 1);
    return alg;
}

}  // namespace fgs
