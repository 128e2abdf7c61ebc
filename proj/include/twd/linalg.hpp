#pragma once

// Exact linear algebra over a field. Everything is templated on the scalar;
// the library instantiates it for twd::Q. No operation rounds, so results
// (echelon forms, kernels, complements) are canonical and reproducible.

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace twd {

using Index = Eigen::Index;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using DenseMat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Sparse matrix. The builders below never store explicit zeros.
template <typename Scalar>
using Matrix = Eigen::SparseMatrix<Scalar, Eigen::RowMajor>;

template <typename Scalar>
using SparseRow = std::vector<std::pair<Index, Scalar>>;

/// Matrices with fewer columns than this are eliminated in dense storage.
inline constexpr Index kDenseColumnThreshold = 64;

template <typename Scalar>
Vec<Scalar> zero_vec(Index n)
{
    return Vec<Scalar>::Constant(n, Scalar(0));
}

template <typename Scalar>
Vec<Scalar> unit_vec(Index n, Index i)
{
    Vec<Scalar> v = zero_vec<Scalar>(n);
    v(i) = Scalar(1);
    return v;
}

template <typename Scalar>
bool is_zero(const Vec<Scalar>& v)
{
    for (Index i = 0; i < v.size(); ++i)
        if (v(i) != 0)
            return false;
    return true;
}

template <typename Scalar>
void prune_zeros(Matrix<Scalar>& m)
{
    m.prune([](Index, Index, const Scalar& v) { return v != 0; });
}

/// Builds a sparse matrix from (row, col, value) entries; duplicates are summed
/// and cancelled entries dropped.
template <typename Scalar>
Matrix<Scalar> from_entries(Index rows, Index cols, const std::map<std::pair<Index, Index>, Scalar>& entries)
{
    std::vector<Eigen::Triplet<Scalar>> trips;
    trips.reserve(entries.size());
    for (const auto& [rc, v] : entries)
        if (v != 0)
            trips.emplace_back(rc.first, rc.second, v);
    Matrix<Scalar> m(rows, cols);
    m.setFromTriplets(trips.begin(), trips.end());
    return m;
}

/// Assembles a matrix column by column. `column(j)` returns any range of
/// (row, value) pairs; repeated rows accumulate.
template <typename Scalar, typename ColumnFn>
Matrix<Scalar> from_columns(Index rows, Index cols, ColumnFn&& column)
{
    std::map<std::pair<Index, Index>, Scalar> entries;
    for (Index j = 0; j < cols; ++j)
        for (const auto& [r, v] : column(j))
            entries[{static_cast<Index>(r), j}] += v;
    return from_entries<Scalar>(rows, cols, entries);
}

template <typename Scalar>
Matrix<Scalar> from_dense(const DenseMat<Scalar>& d)
{
    std::map<std::pair<Index, Index>, Scalar> entries;
    for (Index i = 0; i < d.rows(); ++i)
        for (Index j = 0; j < d.cols(); ++j)
            if (d(i, j) != 0)
                entries[{i, j}] = d(i, j);
    return from_entries<Scalar>(d.rows(), d.cols(), entries);
}

template <typename Scalar>
DenseMat<Scalar> to_dense(const Matrix<Scalar>& m)
{
    DenseMat<Scalar> d = DenseMat<Scalar>::Constant(m.rows(), m.cols(), Scalar(0));
    for (Index r = 0; r < m.outerSize(); ++r)
        for (typename Matrix<Scalar>::InnerIterator it(m, r); it; ++it)
            d(it.row(), it.col()) = it.value();
    return d;
}

template <typename Scalar>
Vec<Scalar> apply(const Matrix<Scalar>& m, const Vec<Scalar>& v)
{
    assert(m.cols() == v.size());
    Vec<Scalar> out = zero_vec<Scalar>(m.rows());
    for (Index r = 0; r < m.outerSize(); ++r)
        for (typename Matrix<Scalar>::InnerIterator it(m, r); it; ++it)
            out(r) += it.value() * v(it.col());
    return out;
}

template <typename Scalar>
Matrix<Scalar> multiply(const Matrix<Scalar>& a, const Matrix<Scalar>& b)
{
    Matrix<Scalar> p = a * b;
    prune_zeros(p);
    return p;
}

template <typename Scalar>
Matrix<Scalar> identity(Index n)
{
    std::map<std::pair<Index, Index>, Scalar> e;
    for (Index i = 0; i < n; ++i)
        e[{i, i}] = Scalar(1);
    return from_entries<Scalar>(n, n, e);
}

template <typename Scalar>
bool is_zero(const Matrix<Scalar>& m)
{
    for (Index r = 0; r < m.outerSize(); ++r)
        for (typename Matrix<Scalar>::InnerIterator it(m, r); it; ++it)
            if (it.value() != 0)
                return false;
    return true;
}

template <typename Scalar>
bool equal(const Matrix<Scalar>& a, const Matrix<Scalar>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    Matrix<Scalar> d = a - b;
    return is_zero(d);
}

template <typename Scalar>
std::vector<SparseRow<Scalar>> rows_of(const Matrix<Scalar>& m)
{
    std::vector<SparseRow<Scalar>> rows(static_cast<std::size_t>(m.rows()));
    for (Index r = 0; r < m.outerSize(); ++r)
        for (typename Matrix<Scalar>::InnerIterator it(m, r); it; ++it)
            if (it.value() != 0)
                rows[static_cast<std::size_t>(r)].emplace_back(it.col(), it.value());
    return rows;
}

template <typename Scalar>
SparseRow<Scalar> sparse_of(const Vec<Scalar>& v)
{
    SparseRow<Scalar> row;
    for (Index i = 0; i < v.size(); ++i)
        if (v(i) != 0)
            row.emplace_back(i, v(i));
    return row;
}

/// Reduced row-echelon form: leftmost pivots, each pivot entry equal to 1 and
/// the only nonzero in its column. Unique for a given row space.
template <typename Scalar>
struct Echelon {
    DenseMat<Scalar> rows;
    std::vector<Index> pivots;

    Index rank() const { return static_cast<Index>(pivots.size()); }
};

namespace detail {

template <typename Scalar>
Echelon<Scalar> dense_rref(const std::vector<SparseRow<Scalar>>& input, Index cols)
{
    const Index n_rows = static_cast<Index>(input.size());
    DenseMat<Scalar> a = DenseMat<Scalar>::Constant(n_rows, cols, Scalar(0));
    for (Index r = 0; r < n_rows; ++r)
        for (const auto& [c, v] : input[static_cast<std::size_t>(r)])
            a(r, c) += v;

    std::vector<Index> pivots;
    Index lead_row = 0;
    for (Index c = 0; c < cols && lead_row < n_rows; ++c) {
        Index p = lead_row;
        while (p < n_rows && a(p, c) == 0)
            ++p;
        if (p == n_rows)
            continue;
        if (p != lead_row)
            a.row(p).swap(a.row(lead_row));
        const Scalar inv = Scalar(1) / a(lead_row, c);
        for (Index j = c; j < cols; ++j)
            a(lead_row, j) *= inv;
        for (Index r = 0; r < n_rows; ++r) {
            if (r == lead_row || a(r, c) == 0)
                continue;
            const Scalar f = a(r, c);
            for (Index j = c; j < cols; ++j)
                if (a(lead_row, j) != 0)
                    a(r, j) -= f * a(lead_row, j);
        }
        pivots.push_back(c);
        ++lead_row;
    }
    Echelon<Scalar> out;
    out.rows = a.topRows(lead_row);
    out.pivots = std::move(pivots);
    return out;
}

template <typename Scalar>
Echelon<Scalar> sparse_rref(const std::vector<SparseRow<Scalar>>& input, Index cols)
{
    using Row = std::map<Index, Scalar>;
    std::vector<Row> reduced;
    std::map<Index, std::size_t> pivot_row;

    for (const auto& in : input) {
        Row r;
        for (const auto& [c, v] : in) {
            r[c] += v;
            if (r[c] == 0)
                r.erase(c);
        }
        auto it = r.begin();
        while (it != r.end()) {
            const Index c = it->first;
            auto pr = pivot_row.find(c);
            if (pr == pivot_row.end()) {
                ++it;
                continue;
            }
            const Scalar f = it->second;
            for (const auto& [pc, pv] : reduced[pr->second]) {
                Scalar& slot = r[pc];
                slot -= f * pv;
                if (slot == 0)
                    r.erase(pc);
            }
            it = r.upper_bound(c);
        }
        if (r.empty())
            continue;
        const Scalar inv = Scalar(1) / r.begin()->second;
        for (auto& [c, v] : r)
            v *= inv;
        pivot_row[r.begin()->first] = reduced.size();
        reduced.push_back(std::move(r));
    }

    // Back-substitution, largest pivot first. A row can only hold a pivot
    // column larger than its own pivot.
    for (auto p = pivot_row.rbegin(); p != pivot_row.rend(); ++p) {
        const Index c = p->first;
        const Row& prow = reduced[p->second];
        for (auto q = pivot_row.begin(); q != pivot_row.end() && q->first < c; ++q) {
            Row& r = reduced[q->second];
            auto hit = r.find(c);
            if (hit == r.end())
                continue;
            const Scalar f = hit->second;
            for (const auto& [pc, pv] : prow) {
                Scalar& slot = r[pc];
                slot -= f * pv;
                if (slot == 0)
                    r.erase(pc);
            }
        }
    }

    Echelon<Scalar> out;
    out.rows = DenseMat<Scalar>::Constant(static_cast<Index>(pivot_row.size()), cols, Scalar(0));
    Index i = 0;
    for (const auto& [c, idx] : pivot_row) {
        for (const auto& [rc, v] : reduced[idx])
            out.rows(i, rc) = v;
        out.pivots.push_back(c);
        ++i;
    }
    return out;
}

} // namespace detail

template <typename Scalar>
Echelon<Scalar> rref(const std::vector<SparseRow<Scalar>>& rows, Index cols)
{
    if (cols < kDenseColumnThreshold)
        return detail::dense_rref(rows, cols);
    return detail::sparse_rref(rows, cols);
}

template <typename Scalar>
Echelon<Scalar> rref(const Matrix<Scalar>& m)
{
    return rref(rows_of(m), m.cols());
}

template <typename Scalar>
Index rank(const Matrix<Scalar>& m)
{
    return rref(m).rank();
}

/// A linear subspace of Scalar^ambient, stored by its reduced row-echelon basis.
template <typename Scalar>
class Subspace {
public:
    explicit Subspace(Index ambient = 0)
        : ambient_(ambient)
    {
        ech_.rows = DenseMat<Scalar>(0, ambient);
    }

    static Subspace from_echelon(Index ambient, Echelon<Scalar> e)
    {
        Subspace s(ambient);
        s.ech_ = std::move(e);
        return s;
    }

    static Subspace span(Index ambient, const std::vector<Vec<Scalar>>& vectors)
    {
        std::vector<SparseRow<Scalar>> rows;
        rows.reserve(vectors.size());
        for (const auto& v : vectors) {
            assert(v.size() == ambient);
            rows.push_back(sparse_of(v));
        }
        return from_echelon(ambient, rref(rows, ambient));
    }

    static Subspace whole(Index ambient)
    {
        std::vector<Vec<Scalar>> e;
        for (Index i = 0; i < ambient; ++i)
            e.push_back(unit_vec<Scalar>(ambient, i));
        return span(ambient, e);
    }

    /// Span of the rows of `m`.
    static Subspace row_space(const Matrix<Scalar>& m) { return from_echelon(m.cols(), rref(m)); }

    Index ambient_dim() const { return ambient_; }
    Index dim() const { return ech_.rank(); }
    const DenseMat<Scalar>& basis() const { return ech_.rows; }
    const std::vector<Index>& pivots() const { return ech_.pivots; }
    Vec<Scalar> vector(Index i) const { return ech_.rows.row(i).transpose(); }

    std::vector<Vec<Scalar>> vectors() const
    {
        std::vector<Vec<Scalar>> out;
        for (Index i = 0; i < dim(); ++i)
            out.push_back(vector(i));
        return out;
    }

    /// Remainder of v after clearing every pivot coordinate. Linear,
    /// idempotent, and zero exactly on the subspace.
    Vec<Scalar> reduce(const Vec<Scalar>& v) const
    {
        assert(v.size() == ambient_);
        Vec<Scalar> r = v;
        for (Index i = 0; i < dim(); ++i) {
            const Scalar f = r(ech_.pivots[static_cast<std::size_t>(i)]);
            if (f == 0)
                continue;
            for (Index j = 0; j < ambient_; ++j)
                if (ech_.rows(i, j) != 0)
                    r(j) -= f * ech_.rows(i, j);
        }
        return r;
    }

    bool contains(const Vec<Scalar>& v) const { return is_zero(reduce(v)); }

    bool contains(const Subspace& other) const
    {
        for (Index i = 0; i < other.dim(); ++i)
            if (!contains(other.vector(i)))
                return false;
        return true;
    }

    /// Coordinates of v in the echelon basis, if v lies in the subspace.
    std::optional<Vec<Scalar>> coordinates(const Vec<Scalar>& v) const
    {
        if (!contains(v))
            return std::nullopt;
        Vec<Scalar> c(dim());
        for (Index i = 0; i < dim(); ++i)
            c(i) = v(ech_.pivots[static_cast<std::size_t>(i)]);
        return c;
    }

    /// Inverse of coordinates().
    Vec<Scalar> combine(const Vec<Scalar>& coords) const
    {
        assert(coords.size() == dim());
        Vec<Scalar> v = zero_vec<Scalar>(ambient_);
        for (Index i = 0; i < dim(); ++i)
            if (coords(i) != 0)
                v += coords(i) * vector(i);
        return v;
    }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.ech_.pivots == b.ech_.pivots && a.ech_.rows == b.ech_.rows;
    }

private:
    Index ambient_;
    Echelon<Scalar> ech_;
};

/// Full null space of m. Every returned vector v satisfies m v = 0.
template <typename Scalar>
Subspace<Scalar> kernel_basis(const Matrix<Scalar>& m)
{
    const Index cols = m.cols();
    const Echelon<Scalar> e = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Index p : e.pivots)
        is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Vec<Scalar>> null;
    for (Index f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)])
            continue;
        Vec<Scalar> v = unit_vec<Scalar>(cols, f);
        for (Index r = 0; r < e.rank(); ++r)
            v(e.pivots[static_cast<std::size_t>(r)]) = -e.rows(r, f);
        null.push_back(std::move(v));
    }
    return Subspace<Scalar>::span(cols, null);
}

/// Column space of m.
template <typename Scalar>
Subspace<Scalar> image(const Matrix<Scalar>& m)
{
    Matrix<Scalar> t = m.transpose();
    return Subspace<Scalar>::row_space(t);
}

/// Some x with m x = b, or nullopt when the system is inconsistent. Free
/// variables are set to zero, so the answer is deterministic.
template <typename Scalar>
std::optional<Vec<Scalar>> solve(const Matrix<Scalar>& m, const Vec<Scalar>& b)
{
    assert(b.size() == m.rows());
    const Index cols = m.cols();
    std::vector<SparseRow<Scalar>> rows = rows_of(m);
    for (Index r = 0; r < b.size(); ++r)
        if (b(r) != 0)
            rows[static_cast<std::size_t>(r)].emplace_back(cols, b(r));
    const Echelon<Scalar> e = rref(rows, cols + 1);
    Vec<Scalar> x = zero_vec<Scalar>(cols);
    for (Index r = 0; r < e.rank(); ++r) {
        const Index p = e.pivots[static_cast<std::size_t>(r)];
        if (p == cols)
            return std::nullopt;
        x(p) = e.rows(r, cols);
    }
    return x;
}

/// V / sub realised inside V: the complement is spanned by the unit vectors on
/// non-pivot coordinates of sub's echelon basis.
template <typename Scalar>
struct Quotient {
    std::vector<Index> complement_indices;
    std::vector<Vec<Scalar>> complement_basis;
    Matrix<Scalar> project; // ambient -> ambient, idempotent, kernel = sub
    Matrix<Scalar> coords;  // ambient -> quotient coordinates

    Index dim() const { return static_cast<Index>(complement_basis.size()); }

    Vec<Scalar> to_quotient(const Vec<Scalar>& v) const { return apply(coords, v); }

    Vec<Scalar> lift(const Vec<Scalar>& q) const
    {
        Vec<Scalar> v = zero_vec<Scalar>(project.cols());
        for (Index i = 0; i < q.size(); ++i)
            v(complement_indices[static_cast<std::size_t>(i)]) = q(i);
        return v;
    }
};

template <typename Scalar>
Quotient<Scalar> quotient(Index ambient_dim, const Subspace<Scalar>& sub)
{
    assert(sub.ambient_dim() == ambient_dim);
    Quotient<Scalar> q;
    std::vector<bool> is_pivot(static_cast<std::size_t>(ambient_dim), false);
    for (Index p : sub.pivots())
        is_pivot[static_cast<std::size_t>(p)] = true;
    for (Index j = 0; j < ambient_dim; ++j)
        if (!is_pivot[static_cast<std::size_t>(j)]) {
            q.complement_indices.push_back(j);
            q.complement_basis.push_back(unit_vec<Scalar>(ambient_dim, j));
        }
    q.project = from_columns<Scalar>(ambient_dim, ambient_dim, [&](Index j) {
        return sparse_of(sub.reduce(unit_vec<Scalar>(ambient_dim, j)));
    });
    std::vector<Index> slot(static_cast<std::size_t>(ambient_dim), -1);
    for (std::size_t k = 0; k < q.complement_indices.size(); ++k)
        slot[static_cast<std::size_t>(q.complement_indices[k])] = static_cast<Index>(k);
    const Index qdim = q.dim();
    q.coords = from_columns<Scalar>(qdim, ambient_dim, [&](Index j) {
        SparseRow<Scalar> out;
        for (const auto& [r, v] : sparse_of(sub.reduce(unit_vec<Scalar>(ambient_dim, j))))
            out.emplace_back(slot[static_cast<std::size_t>(r)], v);
        return out;
    });
    return q;
}

template <typename Scalar>
Subspace<Scalar> sum(const Subspace<Scalar>& a, const Subspace<Scalar>& b)
{
    assert(a.ambient_dim() == b.ambient_dim());
    auto vs = a.vectors();
    for (auto& v : b.vectors())
        vs.push_back(std::move(v));
    return Subspace<Scalar>::span(a.ambient_dim(), vs);
}

/// Exact intersection, via the kernel of (x, y) -> sum x_i a_i - sum y_j b_j.
template <typename Scalar>
Subspace<Scalar> intersect(const Subspace<Scalar>& a, const Subspace<Scalar>& b)
{
    assert(a.ambient_dim() == b.ambient_dim());
    const Index n = a.ambient_dim();
    const Index da = a.dim();
    const Index db = b.dim();
    Matrix<Scalar> m = from_columns<Scalar>(n, da + db, [&](Index j) {
        return j < da ? sparse_of<Scalar>(a.vector(j)) : sparse_of<Scalar>(-b.vector(j - da));
    });
    const Subspace<Scalar> k = kernel_basis(m);
    std::vector<Vec<Scalar>> out;
    for (Index i = 0; i < k.dim(); ++i) {
        Vec<Scalar> v = zero_vec<Scalar>(n);
        for (Index j = 0; j < da; ++j)
            if (k.basis()(i, j) != 0)
                v += k.basis()(i, j) * a.vector(j);
        out.push_back(std::move(v));
    }
    return Subspace<Scalar>::span(n, out);
}

/// Stacks matrices with a common column count on top of each other.
template <typename Scalar>
Matrix<Scalar> vstack(const std::vector<Matrix<Scalar>>& blocks)
{
    if (blocks.empty())
        return Matrix<Scalar>(0, 0);
    const Index cols = blocks.front().cols();
    Index rows = 0;
    std::vector<Eigen::Triplet<Scalar>> trips;
    for (const auto& b : blocks) {
        assert(b.cols() == cols);
        for (Index r = 0; r < b.outerSize(); ++r)
            for (typename Matrix<Scalar>::InnerIterator it(b, r); it; ++it)
                trips.emplace_back(rows + it.row(), it.col(), it.value());
        rows += b.rows();
    }
    Matrix<Scalar> m(rows, cols);
    m.setFromTriplets(trips.begin(), trips.end());
    return m;
}

} // namespace twd
