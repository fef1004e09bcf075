#pragma once

#include <fgs/matrix.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <deque>
#include <vector>

namespace fgs {

namespace detail {

struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

inline IntMat to_int_mat(const ExactMatrix& m) {
    IntMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (rat_den(m.at(i, j)) != 1) throw error("matrix entry is not an integer");
            r.at(i, j) = rat_num(m.at(i, j));
        }
    return r;
}

inline ExactMatrix from_int_mat(const RingSpec& ring, const IntMat& m) {
    ExactMatrix r(ring, m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.set(i, j, Rat(m.at(i, j)));
    return r;
}

/// Smith normal form over Z. After run(), U * A_in * V = A with A diagonal,
/// diagonal entries nonnegative and each dividing the next. The pivot is
/// always the entry of smallest nonzero absolute value, ties broken by
/// row-major position. companion, when set, receives every row operation
/// applied to U, so it ends as U * companion_in.
struct SnfCore {
    IntMat A;
    std::optional<IntMat> U, Uinv, V;
    IntMat* companion = nullptr;

    void init_transforms(bool want_u, bool want_uinv, bool want_v) {
        if (want_u) U = IntMat::identity(A.rows);
        if (want_uinv) Uinv = IntMat::identity(A.rows);
        if (want_v) V = IntMat::identity(A.cols);
    }

    void row_swap(int i, int t) {
        if (i == t) return;
        for (int j = 0; j < A.cols; ++j) std::swap(A.at(i, j), A.at(t, j));
        if (U)
            for (int j = 0; j < U->cols; ++j) std::swap(U->at(i, j), U->at(t, j));
        if (companion)
            for (int j = 0; j < companion->cols; ++j) std::swap(companion->at(i, j), companion->at(t, j));
        if (Uinv)
            for (int k = 0; k < Uinv->rows; ++k) std::swap(Uinv->at(k, i), Uinv->at(k, t));
    }

    void row_negate(int i) {
        for (int j = 0; j < A.cols; ++j) A.at(i, j) = -A.at(i, j);
        if (U)
            for (int j = 0; j < U->cols; ++j) U->at(i, j) = -U->at(i, j);
        if (companion)
            for (int j = 0; j < companion->cols; ++j) companion->at(i, j) = -companion->at(i, j);
        if (Uinv)
            for (int k = 0; k < Uinv->rows; ++k) Uinv->at(k, i) = -Uinv->at(k, i);
    }

    // row_i -= q * row_t
    void row_sub(int i, int t, const Int& q) {
        for (int j = 0; j < A.cols; ++j) A.at(i, j) -= q * A.at(t, j);
        if (U)
            for (int j = 0; j < U->cols; ++j) U->at(i, j) -= q * U->at(t, j);
        if (companion)
            for (int j = 0; j < companion->cols; ++j) companion->at(i, j) -= q * companion->at(t, j);
        if (Uinv)
            for (int k = 0; k < Uinv->rows; ++k) Uinv->at(k, t) += q * Uinv->at(k, i);
    }

    void col_swap(int j, int t) {
        if (j == t) return;
        for (int i = 0; i < A.rows; ++i) std::swap(A.at(i, j), A.at(i, t));
        if (V)
            for (int i = 0; i < V->rows; ++i) std::swap(V->at(i, j), V->at(i, t));
    }

    void col_negate(int j) {
        for (int i = 0; i < A.rows; ++i) A.at(i, j) = -A.at(i, j);
        if (V)
            for (int i = 0; i < V->rows; ++i) V->at(i, j) = -V->at(i, j);
    }

    // col_j -= q * col_t
    void col_sub(int j, int t, const Int& q) {
        for (int i = 0; i < A.rows; ++i) A.at(i, j) -= q * A.at(i, t);
        if (V)
            for (int i = 0; i < V->rows; ++i) V->at(i, j) -= q * V->at(i, t);
    }

    void run() {
        using boost::multiprecision::abs;
        const int m = A.rows, n = A.cols;
        const int steps = std::min(m, n);
        for (int t = 0; t < steps; ++t) {
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    const Int& v = A.at(i, j);
                    if (v == 0) continue;
                    Int av = abs(v);
                    if (pi < 0 || av < best) {
                        best = av;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) break;
            row_swap(t, pi);
            col_swap(t, pj);
            while (true) {
                for (int i = t + 1; i < m; ++i)
                    while (A.at(i, t) != 0) {
                        if (abs(A.at(i, t)) < abs(A.at(t, t))) row_swap(i, t);
                        row_sub(i, t, A.at(i, t) / A.at(t, t));
                    }
                for (int j = t + 1; j < n; ++j)
                    while (A.at(t, j) != 0) {
                        if (abs(A.at(t, j)) < abs(A.at(t, t))) col_swap(j, t);
                        col_sub(j, t, A.at(t, j) / A.at(t, t));
                    }
                // column swaps during row clearing can repopulate column t
                bool dirty = false;
                for (int i = t + 1; i < m; ++i)
                    if (A.at(i, t) != 0) {
                        dirty = true;
                        break;
                    }
                if (dirty) continue;
                // enforce divisibility of the remaining block by the pivot
                int bi = -1;
                for (int i = t + 1; i < m && bi < 0; ++i)
                    for (int j = t + 1; j < n; ++j)
                        if (A.at(i, j) % A.at(t, t) != 0) {
                            bi = i;
                            break;
                        }
                if (bi < 0) break;
                row_sub(t, bi, Int(-1));
            }
            if (A.at(t, t) < 0) row_negate(t);
        }
    }

    std::vector<Int> diagonal() const {
        std::vector<Int> d(static_cast<size_t>(std::min(A.rows, A.cols)));
        for (size_t i = 0; i < d.size(); ++i) d[i] = A.at(static_cast<int>(i), static_cast<int>(i));
        return d;
    }

    int rank() const {
        int r = 0;
        for (const Int& d : diagonal())
            if (d != 0) ++r;
        return r;
    }
};

/// Howell form over Z/m, built by inserting rows one at a time. Pivot values
/// divide m; whenever a pivot row is created or its pivot changes, the
/// annihilator multiple (m/pivot) * row is inserted too, which is what makes
/// the span Howell-closed (kernels and membership tests stay complete in the
/// presence of zero divisors).
struct HowellCore {
    Int m;
    int width;
    std::map<int, std::vector<Int>> pivot_rows;  // pivot column -> row
    std::deque<std::vector<Int>> work;

    HowellCore(Int modulus, int w) : m(std::move(modulus)), width(w) {}

    static int leading(const std::vector<Int>& v) {
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) return static_cast<int>(j);
        return -1;
    }

    void add_row(std::vector<Int> v) {
        for (auto& x : v) x = mod_floor(x, m);
        work.push_back(std::move(v));
        while (!work.empty()) {
            auto w = std::move(work.front());
            work.pop_front();
            insert_one(std::move(w));
        }
    }

    // unit u mod m with u * a == gcd(a, m) (mod m)
    Int unit_multiplier(const Int& a) const {
        Int d = gcd(a, m);
        Int md = m / d;
        if (md == 1) return 1;
        Int u = mod_inverse(a / d, md);
        while (gcd(u, m) != 1) u += md;
        return u;
    }

    void insert_one(std::vector<Int> v) {
        while (true) {
            int j = leading(v);
            if (j < 0) return;
            auto it = pivot_rows.find(j);
            if (it == pivot_rows.end()) {
                Int u = unit_multiplier(v[j]);
                if (u != 1)
                    for (auto& x : v) x = mod_floor(x * u, m);
                Int d = v[j];
                pivot_rows.emplace(j, v);
                for (auto& x : v) x = mod_floor(x * (m / d), m);
                work.push_back(std::move(v));
                return;
            }
            std::vector<Int>& r = it->second;
            const Int d = r[j];
            if (v[j] % d == 0) {
                Int q = v[j] / d;
                for (int k = j; k < width; ++k) v[k] = mod_floor(v[k] - q * r[k], m);
            } else {
                Int s, t;
                Int g = ext_gcd(d, v[j], s, t);
                std::vector<Int> nr(width), nv(width);
                Int cd = d / g, cv = v[j] / g;
                for (int k = 0; k < width; ++k) {
                    nr[k] = mod_floor(s * r[k] + t * v[k], m);
                    nv[k] = mod_floor(cd * v[k] - cv * r[k], m);
                }
                r = std::move(nr);
                std::vector<Int> ann(width);
                for (int k = 0; k < width; ++k) ann[k] = mod_floor(r[k] * (m / g), m);
                work.push_back(std::move(ann));
                v = std::move(nv);
            }
        }
    }

    // reduce entries above each pivot into [0, pivot)
    void normalize() {
        for (auto it = pivot_rows.begin(); it != pivot_rows.end(); ++it) {
            const int j = it->first;
            const std::vector<Int>& r = it->second;
            const Int& d = r[j];
            for (auto jt = pivot_rows.begin(); jt != it; ++jt) {
                std::vector<Int>& above = jt->second;
                Int q = above[j] / d;
                if (q != 0)
                    for (int k = 0; k < width; ++k) above[k] = mod_floor(above[k] - q * r[k], m);
            }
        }
    }

    ExactMatrix matrix(const RingSpec& ring) const {
        ExactMatrix out(ring, static_cast<int>(pivot_rows.size()), width);
        int i = 0;
        for (const auto& [j, r] : pivot_rows) {
            (void)j;
            for (int k = 0; k < width; ++k) out.set(i, k, Rat(r[k]));
            ++i;
        }
        return out;
    }
};

/// Reduced row echelon form over Q, in place; returns the pivot columns.
inline std::vector<int> rref(ExactMatrix& a) {
    const int m = a.rows(), n = a.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int j = 0; j < n && r < m; ++j) {
        int p = -1;
        for (int i = r; i < m; ++i)
            if (a.at(i, j) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int k = 0; k < n; ++k) {
                Rat tmp = a.at(r, k);
                a.set(r, k, a.at(p, k));
                a.set(p, k, tmp);
            }
        Rat inv = 1 / a.at(r, j);
        for (int k = 0; k < n; ++k) a.set(r, k, a.at(r, k) * inv);
        for (int i = 0; i < m; ++i) {
            if (i == r || a.at(i, j) == 0) continue;
            Rat c = a.at(i, j);
            for (int k = 0; k < n; ++k) a.set(i, k, a.at(i, k) - c * a.at(r, k));
        }
        pivots.push_back(j);
        ++r;
    }
    return pivots;
}

}  // namespace detail

struct SmithNormalForm {
    ExactMatrix u, d, v;        // u * input * v = d
    std::vector<Int> diagonal;  // min(rows, cols) entries, each dividing the next
    int rank = 0;
};

inline SmithNormalForm smith_normal_form(const ExactMatrix& mat) {
    if (!mat.ring().is_integers()) throw error("smith_normal_form requires the ring Z");
    detail::SnfCore core;
    core.A = detail::to_int_mat(mat);
    core.init_transforms(true, false, true);
    core.run();
    SmithNormalForm out;
    out.u = detail::from_int_mat(mat.ring(), *core.U);
    out.d = detail::from_int_mat(mat.ring(), core.A);
    out.v = detail::from_int_mat(mat.ring(), *core.V);
    out.diagonal = core.diagonal();
    out.rank = core.rank();
    return out;
}

inline ExactMatrix howell_form(const ExactMatrix& mat) {
    if (!mat.ring().is_mod()) throw error("howell_form requires a ring Z/m");
    detail::HowellCore core(mat.ring().modulus(), mat.cols());
    for (int i = 0; i < mat.rows(); ++i) {
        std::vector<Int> row(static_cast<size_t>(mat.cols()));
        for (int j = 0; j < mat.cols(); ++j) row[static_cast<size_t>(j)] = rat_num(mat.at(i, j));
        core.add_row(std::move(row));
    }
    core.normalize();
    return core.matrix(mat.ring());
}

namespace detail {

/// Howell data for solving A * x = b and computing kernels over Z/m: the
/// Howell form of [A^T | I], whose rows are exactly the pairs (A x, x).
struct ModSolver {
    int out_dim, in_dim;
    HowellCore core;

    explicit ModSolver(const ExactMatrix& a)
        : out_dim(a.rows()), in_dim(a.cols()), core(a.ring().modulus(), a.rows() + a.cols()) {
        for (int j = 0; j < in_dim; ++j) {
            std::vector<Int> row(static_cast<size_t>(out_dim + in_dim));
            for (int i = 0; i < out_dim; ++i) row[static_cast<size_t>(i)] = rat_num(a.at(i, j));
            row[static_cast<size_t>(out_dim + j)] = 1;
            core.add_row(std::move(row));
        }
        core.normalize();
    }

    ExactMatrix kernel(const RingSpec& ring) const {
        std::vector<const std::vector<Int>*> gens;
        for (const auto& [j, r] : core.pivot_rows)
            if (j >= out_dim) gens.push_back(&r);
        ExactMatrix out(ring, in_dim, static_cast<int>(gens.size()));
        for (size_t c = 0; c < gens.size(); ++c)
            for (int i = 0; i < in_dim; ++i)
                out.set(i, static_cast<int>(c), Rat((*gens[c])[static_cast<size_t>(out_dim + i)]));
        return out;
    }

    std::optional<std::vector<Int>> solve_one(const std::vector<Int>& b) const {
        std::vector<Int> w(static_cast<size_t>(out_dim + in_dim));
        for (int i = 0; i < out_dim; ++i) w[static_cast<size_t>(i)] = mod_floor(b[static_cast<size_t>(i)], core.m);
        for (const auto& [j, r] : core.pivot_rows) {
            if (j >= out_dim) break;
            if (w[static_cast<size_t>(j)] == 0) continue;
            if (w[static_cast<size_t>(j)] % r[static_cast<size_t>(j)] != 0) return std::nullopt;
            Int q = w[static_cast<size_t>(j)] / r[static_cast<size_t>(j)];
            for (int k = j; k < out_dim + in_dim; ++k)
                w[static_cast<size_t>(k)] = mod_floor(w[static_cast<size_t>(k)] - q * r[static_cast<size_t>(k)], core.m);
        }
        for (int i = 0; i < out_dim; ++i)
            if (w[static_cast<size_t>(i)] != 0) return std::nullopt;
        std::vector<Int> x(static_cast<size_t>(in_dim));
        for (int i = 0; i < in_dim; ++i)
            x[static_cast<size_t>(i)] = mod_floor(-w[static_cast<size_t>(out_dim + i)], core.m);
        return x;
    }
};

inline ExactMatrix kernel_basis_integers(const ExactMatrix& mat) {
    SnfCore core;
    core.A = to_int_mat(mat);
    core.init_transforms(false, false, true);
    core.run();
    const int n = mat.cols();
    const int r = core.rank();
    ExactMatrix out(mat.ring(), n, n - r);
    for (int c = r; c < n; ++c) {
        int sign = 0;
        for (int i = 0; i < n && sign == 0; ++i)
            if (core.V->at(i, c) != 0) sign = core.V->at(i, c) > 0 ? 1 : -1;
        for (int i = 0; i < n; ++i) out.set(i, c - r, Rat(sign < 0 ? -core.V->at(i, c) : core.V->at(i, c)));
    }
    return out;
}

inline ExactMatrix kernel_basis_rationals(const ExactMatrix& mat) {
    ExactMatrix a = mat;
    std::vector<int> pivots = rref(a);
    const int n = mat.cols();
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    ExactMatrix out(mat.ring(), n, n - static_cast<int>(pivots.size()));
    int c = 0;
    for (int j = 0; j < n; ++j) {
        if (is_pivot[static_cast<size_t>(j)]) continue;
        out.set(j, c, 1);
        for (size_t r = 0; r < pivots.size(); ++r)
            out.set(pivots[r], c, -a.at(static_cast<int>(r), j));
        ++c;
    }
    return out;
}

inline std::optional<ExactMatrix> try_solve_integers(const ExactMatrix& a, const ExactMatrix& b) {
    SnfCore core;
    core.A = to_int_mat(a);
    IntMat rhs = to_int_mat(b);
    core.companion = &rhs;
    core.init_transforms(false, false, true);
    core.run();
    const int m = a.rows(), n = a.cols(), w = b.cols();
    const auto diag = core.diagonal();
    IntMat y(n, w);
    for (int i = 0; i < m; ++i) {
        const Int d = i < static_cast<int>(diag.size()) ? diag[static_cast<size_t>(i)] : Int(0);
        for (int j = 0; j < w; ++j) {
            const Int& c = rhs.at(i, j);
            if (d == 0) {
                if (c != 0) return std::nullopt;
            } else {
                if (c % d != 0) return std::nullopt;
                y.at(i, j) = c / d;
            }
        }
    }
    ExactMatrix x(a.ring(), n, w);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < w; ++j) {
            Int s = 0;
            for (int k = 0; k < std::min(m, n); ++k) s += core.V->at(i, k) * y.at(k, j);
            x.set(i, j, Rat(s));
        }
    return x;
}

inline std::optional<ExactMatrix> try_solve_rationals(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix aug = ExactMatrix::hstack(a, b);
    std::vector<int> pivots = rref(aug);
    const int n = a.cols();
    for (int p : pivots)
        if (p >= n) return std::nullopt;
    ExactMatrix x(a.ring(), n, b.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (int j = 0; j < b.cols(); ++j) x.set(pivots[r], j, aug.at(static_cast<int>(r), n + j));
    return x;
}

}  // namespace detail

/// Columns generate the kernel of mat (acting on column vectors). Over Z the
/// result is a basis of a saturated direct summand; over Z/m it is the Howell
/// generating set; over Q it is the standard free-variable basis.
inline ExactMatrix kernel_basis(const ExactMatrix& mat) {
    switch (mat.ring().kind()) {
        case RingKind::Integers: return detail::kernel_basis_integers(mat);
        case RingKind::Rationals: return detail::kernel_basis_rationals(mat);
        case RingKind::IntegersMod: return detail::ModSolver(mat).kernel(mat.ring());
    }
    throw error("kernel_basis: bad ring");
}

/// Any solution x of a * x = b, or nullopt when b is not in the column span.
inline std::optional<ExactMatrix> try_solve(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.ring() != b.ring() || a.rows() != b.rows()) throw error("solve: shape or ring mismatch");
    switch (a.ring().kind()) {
        case RingKind::Integers: return detail::try_solve_integers(a, b);
        case RingKind::Rationals: return detail::try_solve_rationals(a, b);
        case RingKind::IntegersMod: {
            detail::ModSolver solver(a);
            ExactMatrix x(a.ring(), a.cols(), b.cols());
            for (int j = 0; j < b.cols(); ++j) {
                std::vector<Int> col(static_cast<size_t>(a.rows()));
                for (int i = 0; i < a.rows(); ++i) col[static_cast<size_t>(i)] = rat_num(b.at(i, j));
                auto sol = solver.solve_one(col);
                if (!sol) return std::nullopt;
                for (int i = 0; i < a.cols(); ++i) x.set(i, j, Rat((*sol)[static_cast<size_t>(i)]));
            }
            return x;
        }
    }
    throw error("solve: bad ring");
}

inline ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& b) {
    auto x = try_solve(a, b);
    if (!x) throw error("linear system has no solution");
    return *x;
}

inline int rank_rationals(const ExactMatrix& mat) {
    ExactMatrix a = mat;
    return static_cast<int>(detail::rref(a).size());
}

/// Direct sum of cyclic modules R/(d_i): torsion factors first in ascending
/// divisibility order, then one 0 per free summand (free meaning R itself;
/// over Z/m that is the factor Z/m).
struct ModulePresentation {
    RingSpec ring;
    std::vector<Int> factors;

    bool is_zero() const { return factors.empty(); }

    int free_rank() const {
        int r = 0;
        for (const Int& d : factors)
            if (d == 0) ++r;
        return r;
    }

    std::vector<Int> torsion() const {
        std::vector<Int> t;
        for (const Int& d : factors)
            if (d != 0) t.push_back(d);
        return t;
    }

    bool operator==(const ModulePresentation& o) const {
        return ring == o.ring && factors == o.factors;
    }

    std::string to_string() const {
        if (factors.empty()) return "0";
        std::string base = ring.is_rationals() ? "Q" : (ring.is_mod() ? "Z/" + ring.modulus().str() : "Z");
        std::string s;
        int free = 0;
        for (const Int& d : factors) {
            if (d == 0) {
                ++free;
                continue;
            }
            if (!s.empty()) s += " + ";
            s += "Z/" + d.str();
        }
        if (free > 0) {
            if (!s.empty()) s += " + ";
            s += base;
            if (free > 1) s += "^" + std::to_string(free);
        }
        return s;
    }
};

/// Smallest n >= 1 with n * (torsion part of M) = 0: the lcm of the nonzero
/// annihilators, 1 when torsion-free.
inline Int annihilator_exponent(const ModulePresentation& p) {
    Int e = 1;
    for (const Int& d : p.factors)
        if (d != 0) e = lcm(e, d);
    return e;
}

namespace detail {

// Factors of Z^a / col(w), or of (Z/m)^a / col(w) via the integer
// presentation [lift(w) | m I]. Factors equal to 1 are dropped; over Z/m the
// factor m is reported as 0 (a free summand of R = Z/m).
inline std::vector<Int> quotient_factors(const RingSpec& ring, const ExactMatrix& w, int a,
                                         IntMat* u_out = nullptr, IntMat* uinv_out = nullptr,
                                         std::vector<int>* kept_out = nullptr) {
    SnfCore core;
    if (ring.is_mod()) {
        IntMat lifted(a, w.cols() + a);
        for (int i = 0; i < a; ++i) {
            for (int j = 0; j < w.cols(); ++j) lifted.at(i, j) = rat_num(w.at(i, j));
            lifted.at(i, w.cols() + i) = ring.modulus();
        }
        core.A = std::move(lifted);
    } else {
        core.A = to_int_mat(w);
    }
    core.init_transforms(u_out != nullptr, uinv_out != nullptr, false);
    core.run();
    auto diag = core.diagonal();
    std::vector<Int> factors;
    std::vector<int> kept;
    for (int i = 0; i < a; ++i) {
        Int d = i < static_cast<int>(diag.size()) ? diag[static_cast<size_t>(i)] : Int(0);
        if (d == 1) continue;
        if (ring.is_mod() && d == ring.modulus()) d = 0;
        factors.push_back(d);
        kept.push_back(i);
    }
    // SNF leaves zeros trailing and torsion ascending, so factors only need
    // the zeros moved to the back (already true) --reorder defensively.
    std::vector<int> order(kept.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        const Int& dx = factors[static_cast<size_t>(x)];
        const Int& dy = factors[static_cast<size_t>(y)];
        if ((dx == 0) != (dy == 0)) return dy == 0;
        return dx < dy;
    });
    std::vector<Int> sorted_factors;
    std::vector<int> sorted_kept;
    for (int i : order) {
        sorted_factors.push_back(factors[static_cast<size_t>(i)]);
        sorted_kept.push_back(kept[static_cast<size_t>(i)]);
    }
    if (u_out) *u_out = std::move(*core.U);
    if (uinv_out) *uinv_out = std::move(*core.Uinv);
    if (kept_out) *kept_out = std::move(sorted_kept);
    return sorted_factors;
}

}  // namespace detail

/// Presentation of span(gens) / span(rels) for column-generated submodules of
/// R^n. Fails when span(rels) is not contained in span(gens).
inline ModulePresentation subquotient_presentation(const ExactMatrix& gens, const ExactMatrix& rels) {
    auto x = try_solve(gens, rels);
    if (!x) throw error("relations are not contained in the generator span");
    ExactMatrix w = ExactMatrix::hstack(*x, kernel_basis(gens));
    const int a = gens.cols();
    ModulePresentation p{gens.ring(), {}};
    if (gens.ring().is_rationals()) {
        int r = rank_rationals(w);
        p.factors.assign(static_cast<size_t>(a - r), Int(0));
    } else {
        p.factors = detail::quotient_factors(gens.ring(), w, a);
    }
    return p;
}

/// Subquotient presentation plus an explicit isomorphism: one ambient
/// representative column per factor, and coordinates() writing the class of
/// an ambient element in those factors (canonical residue per factor).
class SubquotientBasis {
public:
    SubquotientBasis(const ExactMatrix& gens, const ExactMatrix& rels) : gens_(gens) {
        const RingSpec& ring = gens.ring();
        auto x = try_solve(gens, rels);
        if (!x) throw error("relations are not contained in the generator span");
        ExactMatrix w = ExactMatrix::hstack(*x, kernel_basis(gens));
        const int a = gens.cols();
        pres_.ring = ring;
        if (ring.is_rationals()) {
            ExactMatrix rel_rows = w.transpose();
            pivots_ = detail::rref(rel_rows);
            rel_rows_ = rel_rows;
            std::vector<bool> is_pivot(static_cast<size_t>(a), false);
            for (int p : pivots_) is_pivot[static_cast<size_t>(p)] = true;
            for (int j = 0; j < a; ++j)
                if (!is_pivot[static_cast<size_t>(j)]) kept_.push_back(j);
            pres_.factors.assign(kept_.size(), Int(0));
            reps_ = ExactMatrix(ring, gens.rows(), static_cast<int>(kept_.size()));
            for (size_t c = 0; c < kept_.size(); ++c)
                for (int i = 0; i < gens.rows(); ++i) reps_.set(i, static_cast<int>(c), gens.at(i, kept_[c]));
        } else {
            detail::IntMat u, uinv;
            pres_.factors = detail::quotient_factors(ring, w, a, &u, &uinv, &kept_);
            u_ = std::move(u);
            reps_ = ExactMatrix(ring, gens.rows(), static_cast<int>(kept_.size()));
            for (size_t c = 0; c < kept_.size(); ++c)
                for (int i = 0; i < gens.rows(); ++i) {
                    Rat s = 0;
                    for (int k = 0; k < a; ++k) s += gens.at(i, k) * Rat(uinv.at(k, kept_[c]));
                    reps_.set(i, static_cast<int>(c), s);
                }
        }
    }

    const ModulePresentation& presentation() const { return pres_; }
    const ExactMatrix& representatives() const { return reps_; }
    int factor_count() const { return static_cast<int>(pres_.factors.size()); }

    /// Coordinates of the class of z (a column in span(gens)) in the cyclic
    /// factors: entry i is reduced mod factors[i] when that is nonzero, and
    /// mod m for 0-factors over Z/m.
    std::vector<Rat> coordinates(const ExactMatrix& z) const {
        const RingSpec& ring = gens_.ring();
        ExactMatrix y = solve(gens_, z);
        std::vector<Rat> out;
        if (ring.is_rationals()) {
            std::vector<Rat> yy(static_cast<size_t>(y.rows()));
            for (int i = 0; i < y.rows(); ++i) yy[static_cast<size_t>(i)] = y.at(i, 0);
            for (size_t r = 0; r < pivots_.size(); ++r) {
                Rat c = yy[static_cast<size_t>(pivots_[r])];
                if (c == 0) continue;
                for (int k = 0; k < rel_rows_.cols(); ++k)
                    yy[static_cast<size_t>(k)] -= c * rel_rows_.at(static_cast<int>(r), k);
            }
            for (int j : kept_) out.push_back(yy[static_cast<size_t>(j)]);
            return out;
        }
        for (size_t c = 0; c < kept_.size(); ++c) {
            Int wsum = 0;
            for (int k = 0; k < y.rows(); ++k) wsum += u_.at(kept_[c], k) * rat_num(y.at(k, 0));
            Int d = pres_.factors[c];
            if (d == 0 && ring.is_mod()) d = ring.modulus();
            out.push_back(Rat(d == 0 ? wsum : mod_floor(wsum, d)));
        }
        return out;
    }

private:
    ExactMatrix gens_;
    ModulePresentation pres_;
    ExactMatrix reps_;
    std::vector<int> kept_;
    detail::IntMat u_;       // Z and Z/m
    ExactMatrix rel_rows_;   // Q: rref of the relation rows in coordinate space
    std::vector<int> pivots_;
};

/// Whether the column span of s is a direct summand of R^n with the columns
/// forming a basis modulo redundancy: over Z all nonzero Smith factors must
/// be 1, over Z/m all factors of [lift(s) | m I] must be 1 or m, over Q
/// every subspace is a summand.
inline bool is_saturated_summand(const ExactMatrix& s) {
    switch (s.ring().kind()) {
        case RingKind::Rationals: return true;
        case RingKind::Integers: {
            detail::SnfCore core;
            core.A = detail::to_int_mat(s);
            core.run();
            for (const Int& d : core.diagonal())
                if (d != 0 && d != 1) return false;
            return true;
        }
        case RingKind::IntegersMod: {
            detail::SnfCore core;
            const Int& m = s.ring().modulus();
            detail::IntMat lifted(s.rows(), s.cols() + s.rows());
            for (int i = 0; i < s.rows(); ++i) {
                for (int j = 0; j < s.cols(); ++j) lifted.at(i, j) = rat_num(s.at(i, j));
                lifted.at(i, s.cols() + i) = m;
            }
            core.A = std::move(lifted);
            core.run();
            for (const Int& d : core.diagonal())
                if (d != 1 && d != m) return false;
            return true;
        }
    }
    throw error("is_saturated_summand: bad ring");
}

}  // namespace fgs
