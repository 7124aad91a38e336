#include "ffcf/intmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffcf {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols != o.rows) throw std::invalid_argument("IntMat: dimension mismatch");
    IntMat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

void IntMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
}

Int det(IntMat m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: square required");
    int n = m.rows;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

namespace {

// column ops applied to A, V and (inverse op) to Vinv
struct ColOps {
    IntMat *A, *V, *Vinv;
    void swap(int i, int j) {
        A->swap_cols(i, j);
        V->swap_cols(i, j);
        Vinv->swap_rows(i, j);
    }
    void addmul(int dst, int src, const Int& f) {  // col_dst += f * col_src
        if (f == 0) return;
        for (int r = 0; r < A->rows; ++r) A->at(r, dst) += f * A->at(r, src);
        for (int r = 0; r < V->rows; ++r) V->at(r, dst) += f * V->at(r, src);
        for (int c = 0; c < Vinv->cols; ++c) Vinv->at(src, c) -= f * Vinv->at(dst, c);
    }
    void negate(int j) {
        for (int r = 0; r < A->rows; ++r) A->at(r, j) = -A->at(r, j);
        for (int r = 0; r < V->rows; ++r) V->at(r, j) = -V->at(r, j);
        for (int c = 0; c < Vinv->cols; ++c) Vinv->at(j, c) = -Vinv->at(j, c);
    }
};

struct RowOps {
    IntMat *A, *U;
    void swap(int i, int j) {
        A->swap_rows(i, j);
        U->swap_rows(i, j);
    }
    void addmul(int dst, int src, const Int& f) {
        if (f == 0) return;
        for (int c = 0; c < A->cols; ++c) A->at(dst, c) += f * A->at(src, c);
        for (int c = 0; c < U->cols; ++c) U->at(dst, c) += f * U->at(src, c);
    }
    void negate(int i) {
        for (int c = 0; c < A->cols; ++c) A->at(i, c) = -A->at(i, c);
        for (int c = 0; c < U->cols; ++c) U->at(i, c) = -U->at(i, c);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMat& m) {
    IntMat A = m;
    int R = A.rows, C = A.cols, N = std::min(R, C);
    SmithForm out;
    out.U = IntMat::identity(R);
    out.V = IntMat::identity(C);
    out.Vinv = IntMat::identity(C);
    RowOps ro{&A, &out.U};
    ColOps co{&A, &out.V, &out.Vinv};

    for (int k = 0; k < N; ++k) {
        // find smallest nonzero entry in the trailing block
        for (;;) {
            int pi = -1, pj = -1;
            for (int i = k; i < R; ++i)
                for (int j = k; j < C; ++j) {
                    if (A.at(i, j) == 0) continue;
                    if (pi < 0 || abs(A.at(i, j)) < abs(A.at(pi, pj))) { pi = i; pj = j; }
                }
            if (pi < 0) { pi = -1; }
            if (pi < 0) goto done_pivots;
            ro.swap(k, pi);
            co.swap(k, pj);
            bool clean = true;
            for (int i = k + 1; i < R; ++i) {
                Int q = A.at(i, k) / A.at(k, k);
                ro.addmul(i, k, -q);
                if (A.at(i, k) != 0) clean = false;
            }
            for (int j = k + 1; j < C; ++j) {
                Int q = A.at(k, j) / A.at(k, k);
                co.addmul(j, k, -q);
                if (A.at(k, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility: pivot must divide every remaining entry
            bool fixed = false;
            for (int i = k + 1; i < R && !fixed; ++i)
                for (int j = k + 1; j < C && !fixed; ++j)
                    if (A.at(i, j) % A.at(k, k) != 0) {
                        ro.addmul(k, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (A.at(k, k) < 0) co.negate(k);
    }
done_pivots:
    out.diag.resize(size_t(N));
    for (int k = 0; k < N; ++k) {
        out.diag[size_t(k)] = A.at(k, k);
        if (out.diag[size_t(k)] != 0) out.rank = k + 1;
    }
    return out;
}

IntMat hnf_rows(const IntMat& m) {
    HnfAccumulator acc(m.cols);
    for (int i = 0; i < m.rows; ++i) {
        std::vector<Int> row(static_cast<size_t>(m.cols));
        for (int j = 0; j < m.cols; ++j) row[size_t(j)] = m.at(i, j);
        acc.add_row(std::move(row));
    }
    return acc.basis();
}

void HnfAccumulator::add_row(std::vector<Int> row) {
    if (int(row.size()) != cols_) throw std::invalid_argument("HnfAccumulator: bad row size");
    for (int j = 0; j < cols_; ++j) {
        if (row[size_t(j)] == 0) continue;
        int pr = pivot_row_[size_t(j)];
        if (pr < 0) {
            if (row[size_t(j)] < 0)
                for (auto& v : row) v = -v;
            pivot_row_[size_t(j)] = int(rows_.size());
            pivcol_.push_back(j);
            rows_.push_back(std::move(row));
            return;
        }
        // gcd-combine with the existing pivot row
        std::vector<Int>& base = rows_[size_t(pr)];
        Int a = base[size_t(j)], b = row[size_t(j)];
        if (b % a == 0) {
            Int q = b / a;
            for (int c = j; c < cols_; ++c) row[size_t(c)] -= q * base[size_t(c)];
            continue;
        }
        // extended gcd step: g = u*a + v*b
        Int g = a, u = 1, v = 0;
        {
            Int x = b, u1 = 0, v1 = 1;
            while (x != 0) {
                Int q = g / x;
                Int t;
                t = g - q * x; g = x; x = t;
                t = u - q * u1; u = u1; u1 = t;
                t = v - q * v1; v = v1; v1 = t;
            }
        }
        Int af = a / g, bf = b / g;
        std::vector<Int> nbase(static_cast<size_t>(cols_));
        std::vector<Int> nrow(static_cast<size_t>(cols_));
        for (int c = 0; c < cols_; ++c) {
            const Int& x = base[size_t(c)];
            const Int& y = row[size_t(c)];
            nbase[size_t(c)] = u * x + v * y;
            nrow[size_t(c)] = af * y - bf * x;
        }
        base = std::move(nbase);
        row = std::move(nrow);
        if (base[size_t(j)] < 0)
            for (auto& v : base) v = -v;
        // row now has 0 at column j; keep reducing further right
    }
}

IntMat HnfAccumulator::basis() const {
    std::vector<int> order(rows_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return pivcol_[size_t(x)] < pivcol_[size_t(y)]; });
    IntMat b(int(rows_.size()), cols_);
    for (size_t i = 0; i < order.size(); ++i)
        for (int j = 0; j < cols_; ++j) b.at(int(i), j) = rows_[size_t(order[size_t(i)])][size_t(j)];
    // full reduction: entries above each pivot into [0, pivot)
    for (int i = int(rows_.size()) - 1; i >= 0; --i) {
        int pc = pivcol_[size_t(order[size_t(i)])];
        const Int& piv = b.at(i, pc);
        for (int r = 0; r < i; ++r) {
            Int q = b.at(r, pc) / piv;
            if (b.at(r, pc) - q * piv < 0) q -= 1;  // floor division
            if (q == 0) continue;
            for (int c = 0; c < cols_; ++c) b.at(r, c) -= q * b.at(i, c);
        }
    }
    return b;
}

}  // namespace ffcf
