#pragma once

#include <fgs/ring.hpp>

#include <initializer_list>
#include <sstream>
#include <vector>

namespace fgs {

/// Dense matrix over a RingSpec. Entries are kept canonical for the ring
/// (see RingSpec::canonical); all arithmetic is exact.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}

    ExactMatrix(RingSpec ring, int rows, int cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, Rat(0)) {
        if (rows < 0 || cols < 0) throw error("negative matrix dimension");
    }

    static ExactMatrix identity(const RingSpec& ring, int n) {
        ExactMatrix m(ring, n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    static ExactMatrix from_rows(const RingSpec& ring,
                                 std::initializer_list<std::initializer_list<Rat>> rows) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
        ExactMatrix m(ring, r, c);
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != c) throw error("ragged rows");
            int j = 0;
            for (const auto& v : row) m.set(i, j++, v);
            ++i;
        }
        return m;
    }

    const RingSpec& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rat& at(int i, int j) const { return e_[idx(i, j)]; }
    void set(int i, int j, const Rat& v) { e_[idx(i, j)] = ring_.canonical(v); }
    void add_at(int i, int j, const Rat& v) { e_[idx(i, j)] = ring_.add(e_[idx(i, j)], v); }

    bool operator==(const ExactMatrix& o) const {
        return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& v : e_)
            if (v != 0) return false;
        return true;
    }

    ExactMatrix operator+(const ExactMatrix& o) const {
        require_same_shape(o);
        ExactMatrix r(ring_, rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = ring_.add(e_[k], o.e_[k]);
        return r;
    }

    ExactMatrix operator-(const ExactMatrix& o) const {
        require_same_shape(o);
        ExactMatrix r(ring_, rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = ring_.sub(e_[k], o.e_[k]);
        return r;
    }

    ExactMatrix operator*(const ExactMatrix& o) const {
        if (ring_ != o.ring_) throw error("ring mismatch");
        if (cols_ != o.rows_) throw error("shape mismatch in product");
        ExactMatrix r(ring_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rat& a = at(i, k);
                if (a == 0) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const Rat& b = o.at(k, j);
                    if (b == 0) continue;
                    r.e_[r.idx(i, j)] += a * b;
                }
            }
        for (auto& v : r.e_) v = ring_.canonical(v);
        return r;
    }

    ExactMatrix scaled(const Rat& c) const {
        ExactMatrix r(ring_, rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = ring_.mul(e_[k], c);
        return r;
    }

    ExactMatrix transpose() const {
        ExactMatrix r(ring_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.e_[r.idx(j, i)] = at(i, j);
        return r;
    }

    ExactMatrix col(int j) const {
        ExactMatrix r(ring_, rows_, 1);
        for (int i = 0; i < rows_; ++i) r.e_[i] = at(i, j);
        return r;
    }

    ExactMatrix cols_slice(int j0, int j1) const {
        if (j0 < 0 || j1 < j0 || j1 > cols_) throw error("bad column slice");
        ExactMatrix r(ring_, rows_, j1 - j0);
        for (int i = 0; i < rows_; ++i)
            for (int j = j0; j < j1; ++j) r.e_[r.idx(i, j - j0)] = at(i, j);
        return r;
    }

    ExactMatrix rows_slice(int i0, int i1) const {
        if (i0 < 0 || i1 < i0 || i1 > rows_) throw error("bad row slice");
        ExactMatrix r(ring_, i1 - i0, cols_);
        for (int i = i0; i < i1; ++i)
            for (int j = 0; j < cols_; ++j) r.e_[r.idx(i - i0, j)] = at(i, j);
        return r;
    }

    static ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.ring_ != b.ring_ || a.rows_ != b.rows_) throw error("hstack mismatch");
        ExactMatrix r(a.ring_, a.rows_, a.cols_ + b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int j = 0; j < a.cols_; ++j) r.e_[r.idx(i, j)] = a.at(i, j);
            for (int j = 0; j < b.cols_; ++j) r.e_[r.idx(i, a.cols_ + j)] = b.at(i, j);
        }
        return r;
    }

    /// Reinterpret the same integer entries in another ring (used for lifting
    /// mod-m data to Z and for reducing integer data mod m).
    ExactMatrix with_ring(const RingSpec& ring) const {
        ExactMatrix r(ring, rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
        return r;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < rows_; ++i) {
            os << (i ? ", [" : "[");
            for (int j = 0; j < cols_; ++j) {
                if (j) os << ", ";
                os << at(i, j);
            }
            os << "]";
        }
        os << "]";
        return os.str();
    }

private:
    size_t idx(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw error("matrix index out of range");
        return static_cast<size_t>(i) * cols_ + j;
    }

    void require_same_shape(const ExactMatrix& o) const {
        if (ring_ != o.ring_ || rows_ != o.rows_ || cols_ != o.cols_)
            throw error("matrix shape or ring mismatch");
    }

    RingSpec ring_;
    int rows_, cols_;
    std::vector<Rat> e_;
};

}  // namespace fgs
