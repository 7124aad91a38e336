#ifndef FFCF_INTMAT_HPP
#define FFCF_INTMAT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace ffcf {

using Int = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix.  Arbitrary precision so eliminations
/// never overflow; sizes stay around a few hundred columns here.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}
    static IntMat identity(int n);

    Int& at(int r, int c) { return a[size_t(r) * size_t(cols) + size_t(c)]; }
    const Int& at(int r, int c) const { return a[size_t(r) * size_t(cols) + size_t(c)]; }

    IntMat operator*(const IntMat& o) const;
    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
};

/// Fraction-free determinant (Bareiss).
Int det(IntMat m);

/// Smith normal form: U*M*V = diag(d_1,...) with d_1 | d_2 | ... and
/// U, V unimodular.  Vinv is maintained alongside V so group coordinates
/// can be pulled back without a separate inversion.
struct SmithForm {
    std::vector<Int> diag;  // length min(rows, cols)
    IntMat U, V, Vinv;
    int rank = 0;  // nonzero diagonal entries
};
SmithForm smith_normal_form(const IntMat& m);

/// Canonical row Hermite form of the lattice spanned by the rows:
/// pivot columns strictly increasing, pivots positive, entries above a
/// pivot reduced into [0, pivot).  Zero rows dropped.
IntMat hnf_rows(const IntMat& m);

/// Incremental row-lattice accumulator; add_row keeps an echelon basis.
class HnfAccumulator {
public:
    explicit HnfAccumulator(int cols) : cols_(cols), pivot_row_(size_t(cols), -1) {}

    void add_row(std::vector<Int> row);
    int rank() const { return int(rows_.size()); }
    int cols() const { return cols_; }

    /// Canonicalized basis matrix (sorted by pivot, fully reduced).
    IntMat basis() const;

private:
    int cols_;
    std::vector<std::vector<Int>> rows_;   // echelon, rows_[i] pivot at pivcol_[i]
    std::vector<int> pivcol_;
    std::vector<int> pivot_row_;           // column -> index in rows_, or -1
};

}  // namespace ffcf

#endif
