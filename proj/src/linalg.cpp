#include "qgrass/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace qgrass {

CycNum SparseVec::get(int i) const {
    auto it = std::lower_bound(e.begin(), e.end(), i,
                               [](const std::pair<int, CycNum>& p, int k) { return p.first < k; });
    if (it != e.end() && it->first == i) return it->second;
    return CycNum();
}

bool SparseVec::operator==(const SparseVec& o) const {
    if (e.size() != o.e.size()) return false;
    for (size_t k = 0; k < e.size(); ++k)
        if (e[k].first != o.e[k].first || !(e[k].second == o.e[k].second)) return false;
    return true;
}

SparseVec SparseVec::unit(int i, const Field& f) {
    SparseVec v;
    v.e.emplace_back(i, f.one());
    return v;
}

SparseVec SparseVec::from_dense(const std::vector<CycNum>& d) {
    SparseVec v;
    for (size_t i = 0; i < d.size(); ++i)
        if (!d[i].is_zero()) v.e.emplace_back(static_cast<int>(i), d[i]);
    return v;
}

std::vector<CycNum> SparseVec::to_dense(int n, const Field& f) const {
    std::vector<CycNum> d(n, f.zero());
    for (const auto& [i, x] : e) d[i] = x;
    return d;
}

void axpy(SparseVec& y, const CycNum& a, const SparseVec& x) {
    if (a.is_zero() || x.e.empty()) return;
    std::vector<std::pair<int, CycNum>> out;
    out.reserve(y.e.size() + x.e.size());
    size_t i = 0, j = 0;
    while (i < y.e.size() || j < x.e.size()) {
        if (j == x.e.size() || (i < y.e.size() && y.e[i].first < x.e[j].first)) {
            out.push_back(std::move(y.e[i++]));
        } else if (i == y.e.size() || x.e[j].first < y.e[i].first) {
            out.emplace_back(x.e[j].first, a * x.e[j].second);
            ++j;
        } else {
            CycNum v = std::move(y.e[i].second);
            v.add_mul(a, x.e[j].second);
            if (!v.is_zero()) out.emplace_back(x.e[j].first, std::move(v));
            ++i;
            ++j;
        }
    }
    y.e = std::move(out);
}

SparseVec scaled(const SparseVec& x, const CycNum& a) {
    SparseVec out;
    if (a.is_zero()) return out;
    out.e.reserve(x.e.size());
    for (const auto& [i, v] : x.e) out.e.emplace_back(i, v * a);
    return out;
}

SparseVec operator+(const SparseVec& a, const SparseVec& b) {
    SparseVec out = a;
    if (b.e.empty()) return out;
    axpy(out, b.e.front().second.field()->one(), b);
    return out;
}

SparseVec operator-(const SparseVec& a, const SparseVec& b) {
    SparseVec out = a;
    if (b.e.empty()) return out;
    axpy(out, -b.e.front().second.field()->one(), b);
    return out;
}

SparseMatrix SparseMatrix::identity(int n, const Field& f) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.col_[i] = SparseVec::unit(i, f);
    return m;
}

SparseMatrix SparseMatrix::diagonal(const std::vector<CycNum>& d) {
    int n = static_cast<int>(d.size());
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        if (!d[i].is_zero()) m.col_[i].e.emplace_back(i, d[i]);
    return m;
}

SparseMatrix SparseMatrix::from_rows(int ncols, const std::vector<SparseVec>& rows) {
    SparseMatrix m(static_cast<int>(rows.size()), ncols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& [j, v] : rows[i].e) m.col_[j].e.emplace_back(static_cast<int>(i), v);
    return m;
}

void SparseMatrix::add(int i, int j, const CycNum& v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("SparseMatrix::add");
    SparseVec u;
    u.e.emplace_back(i, v);
    axpy(col_[j], v.field()->one(), u);
}

size_t SparseMatrix::nnz() const {
    size_t n = 0;
    for (const auto& c : col_) n += c.nnz();
    return n;
}

bool SparseMatrix::is_zero() const {
    for (const auto& c : col_)
        if (!c.empty()) return false;
    return true;
}

bool SparseMatrix::is_diagonal() const {
    if (rows_ != cols_) return false;
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, v] : col_[j].e)
            if (i != j) return false;
    return true;
}

int SparseMatrix::max_col_nnz() const {
    size_t mx = 0;
    for (const auto& c : col_) mx = std::max(mx, c.nnz());
    return static_cast<int>(mx);
}

std::vector<SparseVec> SparseMatrix::row_vectors() const {
    std::vector<SparseVec> rows(rows_);
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, v] : col_[j].e) rows[i].e.emplace_back(j, v);
    return rows;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, v] : col_[j].e) t.col_[i].e.emplace_back(j, v);
    return t;
}

SparseMatrix SparseMatrix::scaled(const CycNum& a) const {
    SparseMatrix out(rows_, cols_);
    for (int j = 0; j < cols_; ++j) out.col_[j] = qgrass::scaled(col_[j], a);
    return out;
}

std::optional<std::pair<int, int>> SparseMatrix::first_nonzero() const {
    for (int j = 0; j < cols_; ++j)
        if (!col_[j].empty()) return std::make_pair(col_[j].e.front().first, j);
    return std::nullopt;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (int j = 0; j < cols_; ++j)
        if (!(col_[j] == o.col_[j])) return false;
    return true;
}

SparseVec apply(const SparseMatrix& a, const SparseVec& x) {
    if (x.e.empty()) return {};
    if (x.e.size() == 1) return scaled(a.col(x.e.front().first), x.e.front().second);
    std::map<int, CycNum> acc;
    for (const auto& [j, xv] : x.e)
        for (const auto& [i, av] : a.col(j).e) acc[i].add_mul(av, xv);
    SparseVec out;
    for (auto& [i, v] : acc)
        if (!v.is_zero()) out.e.emplace_back(i, std::move(v));
    return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
    SparseMatrix out(a.rows(), b.cols());
    for (int j = 0; j < b.cols(); ++j) out.set_col(j, apply(a, b.col(j)));
    return out;
}

namespace {
SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, bool subtract) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: dimension mismatch");
    SparseMatrix out = a;
    for (int j = 0; j < b.cols(); ++j) {
        if (b.col(j).empty()) continue;
        CycNum one = b.col(j).e.front().second.field()->one();
        axpy(out.col(j), subtract ? -one : one, b.col(j));
    }
    return out;
}
}  // namespace

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, false); }
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, true); }

SparseMatrix power(const SparseMatrix& a, int k) {
    if (k < 1) throw std::invalid_argument("power: k must be >= 1");
    SparseMatrix out = a;
    for (int i = 1; i < k; ++i) out = out * a;
    return out;
}

Subspace Subspace::span(int ambient, const std::vector<SparseVec>& vs) {
    Subspace s(ambient);
    for (const auto& v : vs) s.insert(v);
    return s;
}

Subspace Subspace::full(int ambient, const Field& f) {
    Subspace s(ambient);
    for (int i = 0; i < ambient; ++i) s.insert(SparseVec::unit(i, f));
    return s;
}

std::vector<SparseVec> Subspace::basis() const {
    std::vector<int> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return piv_[a] < piv_[b]; });
    std::vector<SparseVec> out;
    out.reserve(order.size());
    for (int k : order) out.push_back(rows_[k]);
    return out;
}

std::vector<int> Subspace::pivots() const {
    std::vector<int> p = piv_;
    std::sort(p.begin(), p.end());
    return p;
}

SparseVec Subspace::reduce(const SparseVec& v) const {
    SparseVec out = v;
    for (const auto& [c, val] : v.e) {
        if (c >= n_) throw std::out_of_range("Subspace::reduce: index beyond ambient dimension");
        int r = pivot_row_[c];
        if (r >= 0) axpy(out, -val, rows_[r]);
    }
    return out;
}

SparseVec Subspace::insert(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return r;
    CycNum inv = r.e.front().second.inverse();
    for (auto& [i, x] : r.e) x *= inv;
    int p = r.lead();
    for (auto& row : rows_) {
        CycNum c = row.get(p);
        if (!c.is_zero()) axpy(row, -c, r);
    }
    pivot_row_[p] = static_cast<int>(rows_.size());
    rows_.push_back(r);
    piv_.push_back(p);
    return r;
}

bool Subspace::contains(const Subspace& o) const {
    if (o.n_ != n_) throw std::invalid_argument("Subspace: ambient mismatch");
    for (const auto& r : o.rows_)
        if (!member(r)) return false;
    return true;
}

std::vector<CycNum> Subspace::coordinates(const SparseVec& v) const {
    std::vector<CycNum> out;
    for (int p : pivots()) out.push_back(v.get(p));
    return out;
}

bool Subspace::is_coordinate() const {
    for (const auto& r : rows_)
        if (r.nnz() != 1) return false;
    return true;
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
    Subspace s = u;
    for (const auto& r : v.raw_rows()) s.insert(r);
    return s;
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
    auto ub = u.basis();
    SparseMatrix res(u.ambient_dim(), static_cast<int>(ub.size()));
    for (size_t i = 0; i < ub.size(); ++i) res.set_col(static_cast<int>(i), v.reduce(ub[i]));
    Subspace ker = nullspace(res, ub.empty() ? nullptr : ub.front().e.front().second.field());
    Subspace out(u.ambient_dim());
    for (const auto& c : ker.raw_rows()) {
        SparseVec w;
        for (const auto& [i, x] : c.e) axpy(w, x, ub[i]);
        out.insert(w);
    }
    return out;
}

int quotient_dim(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("quotient_dim: ambient mismatch");
    if (!u.contains(v)) throw std::invalid_argument("quotient_dim: V is not contained in U");
    return u.dim() - v.dim();
}

int rank(const SparseMatrix& a) {
    Subspace s(a.cols());
    for (const auto& r : a.row_vectors()) s.insert(r);
    return s.dim();
}

Subspace image(const SparseMatrix& a) {
    Subspace s(a.rows());
    for (int j = 0; j < a.cols(); ++j) s.insert(a.col(j));
    return s;
}

Subspace nullspace(const SparseMatrix& a, const Field* field) {
    Subspace rs(a.cols());
    for (const auto& r : a.row_vectors()) rs.insert(r);
    std::vector<char> is_pivot(a.cols(), 0);
    for (int p : rs.raw_pivots()) is_pivot[p] = 1;
    std::map<int, SparseVec> kernel;
    const Field* f = field;
    for (size_t k = 0; k < rs.raw_rows().size(); ++k) {
        const auto& row = rs.raw_rows()[k];
        int p = rs.raw_pivots()[k];
        for (const auto& [c, v] : row.e) {
            if (is_pivot[c]) continue;
            kernel[c].e.emplace_back(p, -v);
            f = v.field();
        }
    }
    Subspace out(a.cols());
    for (int c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        SparseVec v;
        auto it = kernel.find(c);
        if (it != kernel.end()) v = it->second;
        // the field is needed for the unit entry; fall back to any matrix entry
        if (!f) {
            for (int j = 0; j < a.cols() && !f; ++j)
                if (!a.col(j).empty()) f = a.col(j).e.front().second.field();
        }
        if (!f) throw std::logic_error("nullspace: field unknown for an all-zero matrix");
        v.e.emplace_back(c, f->one());
        std::sort(v.e.begin(), v.e.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        out.insert(v);
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

std::vector<SparseMatrix> commutant(const std::vector<SparseMatrix>& mats, int d, const Field& f) {
    for (const auto& m : mats)
        if (m.rows() != d || m.cols() != d) throw std::invalid_argument("commutant: matrices must be d x d");
    std::vector<const SparseMatrix*> diag, general;
    for (const auto& m : mats) (m.is_diagonal() ? diag : general).push_back(&m);

    std::vector<int> cls(d, 0);
    {
        std::map<std::vector<CycNum>, int> ids;
        for (int a = 0; a < d; ++a) {
            std::vector<CycNum> key;
            for (const auto* m : diag) key.push_back(m->get(a, a));
            auto it = ids.emplace(key, static_cast<int>(ids.size())).first;
            cls[a] = it->second;
        }
    }
    // unknown numbering restricted to same-class pairs
    std::vector<std::vector<int>> members;
    {
        int nc = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
        members.resize(nc);
        for (int a = 0; a < d; ++a) members[cls[a]].push_back(a);
    }
    std::unordered_map<long long, int> uid;
    std::vector<std::pair<int, int>> unknowns;
    for (const auto& grp : members)
        for (int a : grp)
            for (int b : grp) {
                uid.emplace(static_cast<long long>(a) * d + b, static_cast<int>(unknowns.size()));
                unknowns.emplace_back(a, b);
            }
    auto unk = [&](int a, int b) -> int {
        auto it = uid.find(static_cast<long long>(a) * d + b);
        return it == uid.end() ? -1 : it->second;
    };

    // (X M - M X)_{ab} = sum_c X_ac M_cb - sum_c M_ac X_cb
    std::vector<SparseVec> equations;
    for (const auto* mp : general) {
        const SparseMatrix& m = *mp;
        auto mrows = m.row_vectors();
        std::map<std::pair<int, int>, std::map<int, CycNum>> eq;
        for (int b = 0; b < d; ++b)
            for (const auto& [c, v] : m.col(b).e)
                for (int a : members[cls[c]]) {
                    int u = unk(a, c);
                    if (u >= 0) eq[{a, b}][u] += v;
                }
        for (int a = 0; a < d; ++a)
            for (const auto& [c, v] : mrows[a].e)
                for (int b : members[cls[c]]) {
                    int u = unk(c, b);
                    if (u >= 0) eq[{a, b}][u] -= v;
                }
        for (auto& [key, terms] : eq) {
            SparseVec row;
            for (auto& [u, v] : terms)
                if (!v.is_zero()) row.e.emplace_back(u, std::move(v));
            if (!row.empty()) equations.push_back(std::move(row));
        }
    }

    int nu = static_cast<int>(unknowns.size());
    UnionFind uf(nu);
    for (const auto& row : equations)
        for (size_t k = 1; k < row.e.size(); ++k) uf.unite(row.e[0].first, row.e[k].first);
    std::map<int, std::vector<int>> comp_unknowns;
    for (int u = 0; u < nu; ++u) comp_unknowns[uf.find(u)].push_back(u);
    std::map<int, std::vector<const SparseVec*>> comp_eqs;
    for (const auto& row : equations) comp_eqs[uf.find(row.e[0].first)].push_back(&row);

    std::vector<SparseMatrix> out;
    for (const auto& [root, us] : comp_unknowns) {
        std::unordered_map<int, int> local;
        for (size_t k = 0; k < us.size(); ++k) local[us[k]] = static_cast<int>(k);
        int nl = static_cast<int>(us.size());
        std::vector<SparseVec> lrows;
        auto it = comp_eqs.find(root);
        if (it != comp_eqs.end()) {
            for (const SparseVec* row : it->second) {
                SparseVec lr;
                for (const auto& [u, v] : row->e) lr.e.emplace_back(local[u], v);
                std::sort(lr.e.begin(), lr.e.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
                lrows.push_back(std::move(lr));
            }
        }
        Subspace ker(nl);
        if (lrows.empty()) {
            for (int k = 0; k < nl; ++k) ker.insert(SparseVec::unit(k, f));
        } else {
            ker = nullspace(SparseMatrix::from_rows(nl, lrows), &f);
        }
        for (const auto& kv : ker.basis()) {
            SparseMatrix x(d, d);
            for (const auto& [k, v] : kv.e) {
                auto [a, b] = unknowns[us[k]];
                x.col(b).e.emplace_back(a, v);
            }
            for (int b = 0; b < d; ++b)
                std::sort(x.col(b).e.begin(), x.col(b).e.end(),
                          [](const auto& p, const auto& q) { return p.first < q.first; });
            out.push_back(std::move(x));
        }
    }
    return out;
}

namespace {

SparseVec flatten(const SparseMatrix& m) {
    SparseVec v;
    for (int j = 0; j < m.cols(); ++j)
        for (const auto& [i, x] : m.col(j).e) v.e.emplace_back(j * m.rows() + i, x);
    return v;
}

SparseMatrix unflatten(const SparseVec& v, int d) {
    SparseMatrix m(d, d);
    for (const auto& [k, x] : v.e) m.col(k / d).e.emplace_back(k % d, x);
    return m;
}

}  // namespace

LocalAlgebraReport local_algebra_report(const std::vector<SparseMatrix>& basis, const Field& f) {
    LocalAlgebraReport rep;
    if (basis.empty()) return rep;
    int d = basis.front().rows();
    Subspace span(d * d);
    for (const auto& b : basis) span.insert(flatten(b));
    // multiplicative completion
    bool changed = true;
    int rounds = 0;
    while (changed) {
        if (++rounds > d * d + 1) throw std::runtime_error("is_local_algebra: closure did not terminate");
        changed = false;
        auto cur = span.basis();
        std::vector<SparseMatrix> mats;
        for (const auto& v : cur) mats.push_back(unflatten(v, d));
        for (const auto& a : mats)
            for (const auto& b : mats)
                if (!span.insert(flatten(a * b)).empty()) changed = true;
        if (rounds == 1) rep.closed = !changed;
    }
    auto rows = span.basis();
    auto piv = span.pivots();
    int k = static_cast<int>(rows.size());
    rep.dim = k;
    std::vector<SparseMatrix> mats;
    for (const auto& v : rows) mats.push_back(unflatten(v, d));
    // trace of left multiplication by y: sum_j coord_j(y * B_j)
    auto reg_trace = [&](const SparseMatrix& y) {
        CycNum t = f.zero();
        for (int j = 0; j < k; ++j) {
            int a = piv[j] % d, b = piv[j] / d;
            for (const auto& [c, v] : mats[j].col(b).e) t.add_mul(y.get(a, c), v);
        }
        return t;
    };
    std::vector<SparseVec> gram(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            CycNum t = reg_trace(mats[i] * mats[j]);
            if (!t.is_zero()) gram[i].e.emplace_back(j, t);
        }
    rep.semisimple_dim = rank(SparseMatrix::from_rows(k, gram));
    rep.local = rep.semisimple_dim == 1;
    return rep;
}

bool is_local_algebra(const std::vector<SparseMatrix>& basis, const Field& f) {
    return local_algebra_report(basis, f).local;
}

}  // namespace qgrass
