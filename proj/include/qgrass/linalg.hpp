#pragma once

#include "qgrass/cycnum.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qgrass {

// Sorted by index, no stored zeros.
struct SparseVec {
    std::vector<std::pair<int, CycNum>> e;

    bool empty() const { return e.empty(); }
    size_t nnz() const { return e.size(); }
    CycNum get(int i) const;
    int lead() const { return e.empty() ? -1 : e.front().first; }
    bool operator==(const SparseVec& o) const;

    static SparseVec unit(int i, const Field& f);
    static SparseVec from_dense(const std::vector<CycNum>& d);
    std::vector<CycNum> to_dense(int n, const Field& f) const;
};

// y += a*x
void axpy(SparseVec& y, const CycNum& a, const SparseVec& x);
SparseVec scaled(const SparseVec& x, const CycNum& a);
SparseVec operator+(const SparseVec& a, const SparseVec& b);
SparseVec operator-(const SparseVec& a, const SparseVec& b);

// Column-compressed.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), col_(cols) {}

    static SparseMatrix identity(int n, const Field& f);
    static SparseMatrix diagonal(const std::vector<CycNum>& d);
    static SparseMatrix from_rows(int ncols, const std::vector<SparseVec>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const SparseVec& col(int j) const { return col_[j]; }
    SparseVec& col(int j) { return col_[j]; }
    void set_col(int j, SparseVec v) { col_[j] = std::move(v); }
    // adds to the existing entry
    void add(int i, int j, const CycNum& v);
    CycNum get(int i, int j) const { return col_[j].get(i); }
    size_t nnz() const;

    bool is_zero() const;
    bool is_diagonal() const;
    int max_col_nnz() const;
    std::vector<SparseVec> row_vectors() const;
    SparseMatrix transpose() const;
    SparseMatrix scaled(const CycNum& a) const;
    // first (row, col) where the matrix is nonzero, if any
    std::optional<std::pair<int, int>> first_nonzero() const;

    bool operator==(const SparseMatrix& o) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<SparseVec> col_;
};

SparseVec apply(const SparseMatrix& a, const SparseVec& x);
SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix power(const SparseMatrix& a, int k);

// Row space in fully reduced echelon form with leading ones.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient) : n_(ambient), pivot_row_(ambient, -1) {}

    static Subspace span(int ambient, const std::vector<SparseVec>& vs);
    static Subspace full(int ambient, const Field& f);

    int ambient_dim() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    // Rows sorted by pivot column.
    std::vector<SparseVec> basis() const;
    std::vector<int> pivots() const;
    const std::vector<SparseVec>& raw_rows() const { return rows_; }
    const std::vector<int>& raw_pivots() const { return piv_; }

    // v minus its projection; zero at every pivot column
    SparseVec reduce(const SparseVec& v) const;
    // returns the residual that was added, or an empty vector
    SparseVec insert(const SparseVec& v);
    bool member(const SparseVec& v) const { return reduce(v).empty(); }
    bool contains(const Subspace& o) const;
    bool operator==(const Subspace& o) const { return dim() == o.dim() && contains(o); }
    // coordinates of a member with respect to basis()
    std::vector<CycNum> coordinates(const SparseVec& v) const;
    // true when every basis row has a single entry (a coordinate subspace)
    bool is_coordinate() const;

private:
    int n_ = 0;
    std::vector<SparseVec> rows_;
    std::vector<int> piv_;
    std::vector<int> pivot_row_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
int quotient_dim(const Subspace& u, const Subspace& v);

int rank(const SparseMatrix& a);
Subspace image(const SparseMatrix& a);
// basis of {x : a x = 0}; the field is needed only when a has no nonzero entry
Subspace nullspace(const SparseMatrix& a, const Field* field = nullptr);

// Basis of {X : X M = M X for all M}. Unknowns forced to zero by diagonal
// members are pruned and the remaining system is solved per connected component.
std::vector<SparseMatrix> commutant(const std::vector<SparseMatrix>& mats, int d, const Field& f);

struct LocalAlgebraReport {
    bool local = false;
    int dim = 0;
    int semisimple_dim = 0;  // dim E / rad E
    bool closed = false;
};

// Trace-form radical of the regular representation (characteristic zero).
LocalAlgebraReport local_algebra_report(const std::vector<SparseMatrix>& basis, const Field& f);
bool is_local_algebra(const std::vector<SparseMatrix>& basis, const Field& f);

}  // namespace qgrass
