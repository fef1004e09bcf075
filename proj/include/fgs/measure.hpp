#pragma once

#include <fgs/comodule.hpp>

#include <vector>

namespace fgs {

/// Element of the measure algebra M(G) = k[G]^*, in the dual basis.
struct Measure {
    HopfAlgebra parent;
    std::vector<Rat> coeffs;
};

inline Measure make_measure(const HopfAlgebra& h, std::vector<Rat> coeffs) {
    if (static_cast<int>(coeffs.size()) != h.rank) throw error("measure coefficient count mismatch");
    for (Rat& c : coeffs) c = h.ring.canonical(c);
    return {h, std::move(coeffs)};
}

/// mu(x) for a coordinate column x.
inline Rat evaluate(const Measure& mu, const ExactMatrix& x) {
    if (x.rows() != mu.parent.rank || x.cols() != 1) throw error("evaluate shape mismatch");
    Rat s = 0;
    for (int i = 0; i < x.rows(); ++i) s += mu.coeffs[static_cast<size_t>(i)] * x.at(i, 0);
    return mu.parent.ring.canonical(s);
}

inline Rat value_at_one(const Measure& mu) {
    Rat s = 0;
    for (int i = 0; i < mu.parent.rank; ++i) s += mu.coeffs[static_cast<size_t>(i)] * mu.parent.unit[static_cast<size_t>(i)];
    return mu.parent.ring.canonical(s);
}

/// Unit of convolution.
inline Measure counit_measure(const HopfAlgebra& h) { return {h, h.counit}; }

/// Evaluation at a group element; only group algebras carry one.
inline Measure dirac(const HopfAlgebra& h, int g) {
    if (!h.group) throw error("dirac requires a constant group algebra");
    if (g < 0 || g >= h.rank) throw error("group index out of range");
    std::vector<Rat> coeffs(static_cast<size_t>(h.rank), Rat(0));
    coeffs[static_cast<size_t>(g)] = 1;
    return {h, std::move(coeffs)};
}

/// (mu * nu)(h) = (mu (x) nu)(Delta h).
inline Measure convolve(const Measure& mu, const Measure& nu) {
    if (!same_structure(mu.parent, nu.parent)) throw error("convolve: parent mismatch");
    const HopfAlgebra& h = mu.parent;
    std::vector<Rat> out(static_cast<size_t>(h.rank), Rat(0));
    for (const auto& [key, d] : h.comult.entries()) {
        const Rat& m = mu.coeffs[static_cast<size_t>(key[1])];
        if (m == 0) continue;
        const Rat& n = nu.coeffs[static_cast<size_t>(key[2])];
        if (n == 0) continue;
        out[static_cast<size_t>(key[0])] += d * m * n;
    }
    for (Rat& c : out) c = h.ring.canonical(c);
    return {h, std::move(out)};
}

/// mu . m = (id (x) mu)(rho(m)), making M a left M(G)-module.
inline ExactMatrix act(const Comodule& m, const Measure& mu, const ExactMatrix& v) {
    if (!same_structure(m.parent, mu.parent)) throw error("act: parent mismatch");
    if (v.rows() != m.rank || v.cols() != 1) throw error("act: element shape mismatch");
    ExactMatrix out(m.parent.ring, m.rank, 1);
    for (const auto& [key, c] : m.coaction.entries()) {
        const Rat& va = v.at(key[0], 0);
        if (va == 0) continue;
        const Rat& mi = mu.coeffs[static_cast<size_t>(key[2])];
        if (mi == 0) continue;
        out.add_at(key[1], 0, c * va * mi);
    }
    return out;
}

/// Generator of the left invariant measures with its diagnostics.
struct IntegralResult {
    Measure generator;
    Rat value_at_one;
    bool is_free_rank_one = false;
    bool is_summand = false;
};

/// Solves (id (x) psi)(Delta h) = psi(h) . 1_H for all basis h. The solution
/// module is free of rank one for valid input; anything else throws.
inline IntegralResult left_integrals(const HopfAlgebra& h) {
    auto violations = validate(h);
    if (!violations.empty()) throw error("left_integrals: input fails validation: " + violations.front().describe());
    const RingSpec& ring = h.ring;
    const int r = h.rank;

    ExactMatrix l(ring, r * r, r);
    for (const auto& [key, d] : h.comult.entries()) l.add_at(key[0] * r + key[1], key[2], d);
    for (int hh = 0; hh < r; ++hh)
        for (int i = 0; i < r; ++i) l.add_at(hh * r + i, hh, -h.unit[static_cast<size_t>(i)]);

    ExactMatrix kern = kernel_basis(l);
    ModulePresentation pres = subquotient_presentation(kern, ExactMatrix(ring, r, 0));
    bool free_rank_one = pres.factors.size() == 1 && pres.factors[0] == 0;
    if (!free_rank_one) throw error("integral module not free rank one");

    ExactMatrix gen(ring, r, 1);
    if (kern.cols() == 1) {
        gen = kern;
    } else {
        SubquotientBasis basis(kern, ExactMatrix(ring, r, 0));
        gen = basis.representatives().col(0);
    }

    if (!ring.is_mod()) {
        Rat v1 = 0;
        for (int k = 0; k < r; ++k) v1 += gen.at(k, 0) * h.unit[static_cast<size_t>(k)];
        bool flip = false;
        if (v1 != 0) {
            flip = v1 < 0;
        } else {
            for (int k = 0; k < r; ++k)
                if (gen.at(k, 0) != 0) {
                    flip = gen.at(k, 0) < 0;
                    break;
                }
        }
        if (flip) gen = gen.scaled(-1);
    }

    std::vector<Rat> coeffs(static_cast<size_t>(r));
    for (int k = 0; k < r; ++k) coeffs[static_cast<size_t>(k)] = gen.at(k, 0);
    Measure psi{h, std::move(coeffs)};
    Rat v1 = value_at_one(psi);
    bool summand = is_saturated_summand(gen);
    return {std::move(psi), v1, free_rank_one, summand};
}

/// psi(1_H).
inline Rat integral_value_at_one(const IntegralResult& r) { return value_at_one(r.generator); }

/// The positive integer annihilating higher cohomology: the characteristic
/// when positive, else derived from psi(1).
inline Int torsion_bound(const HopfAlgebra& h) {
    Int c = h.ring.characteristic();
    if (c > 0) return c;
    IntegralResult ir = left_integrals(h);
    if (ir.value_at_one == 0) throw error("integral vanishes at the unit; no torsion bound on this path");
    if (h.ring.is_rationals()) return 1;
    Int n = rat_num(ir.value_at_one);
    return n < 0 ? -n : n;
}

/// Matrix of m -> phi . m with phi = a psi scaled so that phi(1) = n > 0.
/// Image lies in M^G and the restriction to M^G is multiplication by n.
inline ExactMatrix phi_projection(const HopfAlgebra& h, const Comodule& m) {
    if (h.ring.is_mod()) throw error("phi projection requires characteristic zero");
    if (!same_structure(h, m.parent)) throw error("phi_projection: parent mismatch");
    IntegralResult ir = left_integrals(h);
    if (ir.value_at_one == 0) throw error("integral vanishes at the unit; no torsion bound on this path");

    Measure phi = ir.generator;
    if (h.ring.is_rationals())
        for (Rat& c : phi.coeffs) c = c / ir.value_at_one;

    ExactMatrix out(h.ring, m.rank, m.rank);
    for (const auto& [key, c] : m.coaction.entries()) {
        const Rat& p = phi.coeffs[static_cast<size_t>(key[2])];
        if (p != 0) out.add_at(key[1], key[0], c * p);
    }
    return out;
}

}  // namespace fgs
