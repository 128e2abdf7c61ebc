#include "twd/lie.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace twd {

namespace {

void check_index(int i, int dim)
{
    if (i < 0 || i >= dim)
        throw FormatError("bracket index " + std::to_string(i) + " out of range [0, " + std::to_string(dim) + ")");
}

std::string triple_witness(const LieAlgebra& g, int i, int j, int k)
{
    const auto& n = g.basis_names();
    return "(" + n[static_cast<std::size_t>(i)] + "," + n[static_cast<std::size_t>(j)] + ","
        + n[static_cast<std::size_t>(k)] + ")";
}

// Sorts idx in place; returns the permutation sign, or 0 on a repeated index.
int sort_sign(std::vector<int>& idx)
{
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j])
                return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}

void add_wedge_term(int dim, Vec<Q>& out, std::vector<int> idx, const Q& c)
{
    if (c == 0)
        return;
    const int s = sort_sign(idx);
    if (s != 0)
        out(exterior_index(dim, idx)) += s * c;
}

Index binom(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    Index r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_names, const std::vector<StructureConstant>& bracket)
    : dim_(static_cast<int>(basis_names.size()))
    , name_(std::move(name))
    , names_(std::move(basis_names))
{
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size())
        throw FormatError("duplicate basis name in Lie algebra '" + name_ + "'");
    std::map<std::tuple<int, int, int>, Q> m;
    for (const auto& s : bracket) {
        check_index(s.i, dim_);
        check_index(s.j, dim_);
        check_index(s.k, dim_);
        m[{s.i, s.j, s.k}] += s.value;
    }
    table_.resize(static_cast<std::size_t>(dim_ * dim_));
    for (const auto& [key, v] : m)
        if (v != 0) {
            auto [i, j, k] = key;
            table_[static_cast<std::size_t>(i * dim_ + j)].push_back({k, v});
        }
}

Vec<Q> LieAlgebra::bracket(const Vec<Q>& u, const Vec<Q>& v) const
{
    Vec<Q> out = zero_vec<Q>(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (u(i) == 0)
            continue;
        for (int j = 0; j < dim_; ++j) {
            if (v(j) == 0)
                continue;
            for (const auto& t : bracket(i, j))
                out(t.k) += u(i) * v(j) * t.c;
        }
    }
    return out;
}

std::vector<StructureConstant> LieAlgebra::constants() const
{
    std::vector<StructureConstant> out;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (const auto& t : bracket(i, j))
                out.push_back({i, j, t.k, t.c});
    return out;
}

int LieAlgebra::index_of(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        throw FormatError("no basis element named '" + name + "'");
    return static_cast<int>(it - names_.begin());
}

VerificationReport verify_lie(const LieAlgebra& g)
{
    const int n = g.dim();
    auto e = [n](int i) { return unit_vec<Q>(n, i); };
    VerificationReport rep;
    std::string w;
    for (int i = 0; i < n && w.empty(); ++i)
        for (int j = i; j < n && w.empty(); ++j)
            if (!is_zero(Vec<Q>(g.bracket(e(i), e(j)) + g.bracket(e(j), e(i)))))
                w = "(" + g.basis_names()[static_cast<std::size_t>(i)] + "," + g.basis_names()[static_cast<std::size_t>(j)] + ")";
    rep.add("antisymmetry", w.empty(), w);
    w.clear();
    for (int i = 0; i < n && w.empty(); ++i)
        for (int j = 0; j < n && w.empty(); ++j)
            for (int k = 0; k < n && w.empty(); ++k) {
                const Vec<Q> jac = g.bracket(e(i), g.bracket(e(j), e(k))) + g.bracket(e(j), g.bracket(e(k), e(i)))
                    + g.bracket(e(k), g.bracket(e(i), e(j)));
                if (!is_zero(jac))
                    w = triple_witness(g, i, j, k);
            }
    rep.add("Jacobi", w.empty(), w);
    return rep;
}

DenseMat<Q> lie_ad(const LieAlgebra& g, const Vec<Q>& x)
{
    DenseMat<Q> m(g.dim(), g.dim());
    for (int i = 0; i < g.dim(); ++i)
        m.col(i) = g.bracket(x, unit_vec<Q>(g.dim(), i));
    return m;
}

DenseMat<Q> unflatten_endo(int dim, const Vec<Q>& v)
{
    DenseMat<Q> m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k)
            m(k, i) = v(i * dim + k);
    return m;
}

Vec<Q> flatten_endo(const DenseMat<Q>& m)
{
    const Index dim = m.rows();
    Vec<Q> v(dim * dim);
    for (Index i = 0; i < dim; ++i)
        for (Index k = 0; k < dim; ++k)
            v(i * dim + k) = m(k, i);
    return v;
}

Subspace<Q> lie_derivations(const LieAlgebra& g)
{
    const int n = g.dim();
    // Row ((i*n + j)*n + l): (D[e_i,e_j] - [De_i,e_j] - [e_i,De_j])_l, linear in the D(k,c) unknowns.
    std::map<std::pair<Index, Index>, Q> entries;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Index row0 = (i * n + j) * n;
            // D[e_i,e_j]: Σ_k c_ij^k D(l,k)
            for (const auto& t : g.bracket(i, j))
                for (int l = 0; l < n; ++l)
                    entries[{row0 + l, t.k * n + l}] += t.c;
            // -[De_i, e_j] = -Σ_k D(k,i) [e_k, e_j]
            for (int k = 0; k < n; ++k) {
                for (const auto& t : g.bracket(k, j))
                    entries[{row0 + t.k, i * n + k}] -= t.c;
                for (const auto& t : g.bracket(i, k))
                    entries[{row0 + t.k, j * n + k}] -= t.c;
            }
        }
    return kernel_basis(from_entries<Q>(Index(n) * n * n, Index(n) * n, entries));
}

Subspace<Q> inner_derivations(const LieAlgebra& g)
{
    std::vector<Vec<Q>> ads;
    for (int i = 0; i < g.dim(); ++i)
        ads.push_back(flatten_endo(lie_ad(g, unit_vec<Q>(g.dim(), i))));
    return Subspace<Q>::span(Index(g.dim()) * g.dim(), ads);
}

Subspace<Q> lie_centre(const LieAlgebra& g)
{
    const int n = g.dim();
    // x central iff [x, e_i] = 0 for all i.
    return kernel_basis(from_columns<Q>(Index(n) * n, n, [&](Index c) {
        SparseRow<Q> col;
        for (int i = 0; i < n; ++i)
            for (const auto& t : g.bracket(static_cast<int>(c), i))
                col.emplace_back(i * n + t.k, t.c);
        return col;
    }));
}

DenseMat<Q> OuterDerivations::lift(int dim, Index u) const
{
    return unflatten_endo(dim, der.combine(outer.lift(unit_vec<Q>(outer.dim(), u))));
}

OuterDerivations outer_derivations(const LieAlgebra& g)
{
    const int n = g.dim();
    OuterDerivations o;
    o.der = lie_derivations(g);
    o.inner = inner_derivations(g);
    std::vector<Vec<Q>> inner_coords;
    for (const auto& v : o.inner.vectors())
        inner_coords.push_back(*o.der.coordinates(v));
    o.outer = quotient(o.der.dim(), Subspace<Q>::span(o.der.dim(), inner_coords));
    const Index q = o.outer.dim();
    for (Index u = 0; u < q; ++u)
        for (Index v = 0; v < q; ++v) {
            const DenseMat<Q> a = o.lift(n, u);
            const DenseMat<Q> b = o.lift(n, v);
            o.bracket.push_back(o.outer.to_quotient(*o.der.coordinates(flatten_endo(a * b - b * a))));
        }
    return o;
}

std::vector<std::vector<int>> exterior_basis(int dim, int n)
{
    std::vector<std::vector<int>> out;
    if (n < 0 || n > dim)
        return out;
    std::vector<int> cur(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        cur[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == dim - n + i)
            --i;
        if (i < 0)
            break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

Index exterior_index(int dim, const std::vector<int>& idx)
{
    // Lexicographic rank of a combination.
    const int n = static_cast<int>(idx.size());
    Index r = 0;
    int prev = -1;
    for (int p = 0; p < n; ++p) {
        for (int v = prev + 1; v < idx[static_cast<std::size_t>(p)]; ++v)
            r += binom(dim - v - 1, n - p - 1);
        prev = idx[static_cast<std::size_t>(p)];
    }
    return r;
}

Vec<Q> wedge(int dim, const std::vector<Vec<Q>>& factors)
{
    const int k = static_cast<int>(factors.size());
    Vec<Q> out = zero_vec<Q>(binom(dim, k));
    if (k > dim)
        return out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    // Odometer over all dim^k index tuples.
    std::function<void(int, Q)> rec = [&](int p, Q c) {
        if (p == k) {
            add_wedge_term(dim, out, idx, c);
            return;
        }
        for (int i = 0; i < dim; ++i) {
            const Q& f = factors[static_cast<std::size_t>(p)](i);
            if (f == 0)
                continue;
            idx[static_cast<std::size_t>(p)] = i;
            rec(p + 1, c * f);
        }
    };
    rec(0, Q(1));
    return out;
}

Vec<Q> wedge_product(int dim, int p, const Vec<Q>& omega, int q, const Vec<Q>& eta)
{
    const auto bp = exterior_basis(dim, p);
    const auto bq = exterior_basis(dim, q);
    Vec<Q> out = zero_vec<Q>(binom(dim, p + q));
    for (std::size_t a = 0; a < bp.size(); ++a) {
        if (omega(static_cast<Index>(a)) == 0)
            continue;
        for (std::size_t b = 0; b < bq.size(); ++b) {
            if (eta(static_cast<Index>(b)) == 0)
                continue;
            std::vector<int> idx = bp[a];
            idx.insert(idx.end(), bq[b].begin(), bq[b].end());
            add_wedge_term(dim, out, idx, omega(static_cast<Index>(a)) * eta(static_cast<Index>(b)));
        }
    }
    return out;
}

DenseMat<Q> exterior_action(int dim, const DenseMat<Q>& d, int n)
{
    const auto basis = exterior_basis(dim, n);
    const Index size = static_cast<Index>(basis.size());
    DenseMat<Q> m = DenseMat<Q>::Constant(size, size, Q(0));
    for (Index c = 0; c < size; ++c) {
        Vec<Q> col = zero_vec<Q>(size);
        const auto& idx = basis[static_cast<std::size_t>(c)];
        for (int p = 0; p < n; ++p)
            for (int l = 0; l < dim; ++l) {
                const Q& f = d(l, idx[static_cast<std::size_t>(p)]);
                if (f == 0)
                    continue;
                std::vector<int> rep = idx;
                rep[static_cast<std::size_t>(p)] = l;
                add_wedge_term(dim, col, rep, f);
            }
        m.col(c) = col;
    }
    return m;
}

Subspace<Q> exterior_invariants(const LieAlgebra& g, int n)
{
    const int dim = g.dim();
    const Index size = binom(dim, n);
    std::vector<Matrix<Q>> blocks;
    for (int i = 0; i < dim; ++i)
        blocks.push_back(from_dense(exterior_action(dim, lie_ad(g, unit_vec<Q>(dim, i)), n)));
    if (blocks.empty())
        return Subspace<Q>::whole(size);
    return kernel_basis(vstack(blocks));
}

Vec<Q> schouten(const LieAlgebra& g, int m, const Vec<Q>& x, int n, const Vec<Q>& y)
{
    const int dim = g.dim();
    Vec<Q> out = zero_vec<Q>(binom(dim, m + n - 1));
    if (m == 0 || n == 0)
        return out;
    const auto bm = exterior_basis(dim, m);
    const auto bn = exterior_basis(dim, n);
    for (std::size_t a = 0; a < bm.size(); ++a) {
        if (x(static_cast<Index>(a)) == 0)
            continue;
        for (std::size_t b = 0; b < bn.size(); ++b) {
            if (y(static_cast<Index>(b)) == 0)
                continue;
            const Q c = x(static_cast<Index>(a)) * y(static_cast<Index>(b));
            const auto& xi = bm[a];
            const auto& yj = bn[b];
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) {
                    // 1-based (-1)^{i+j} equals 0-based (-1)^{i+j}.
                    const int s = (i + j) % 2 == 0 ? 1 : -1;
                    for (const auto& t : g.bracket(xi[static_cast<std::size_t>(i)], yj[static_cast<std::size_t>(j)])) {
                        std::vector<int> idx{t.k};
                        for (int p = 0; p < m; ++p)
                            if (p != i)
                                idx.push_back(xi[static_cast<std::size_t>(p)]);
                        for (int q = 0; q < n; ++q)
                            if (q != j)
                                idx.push_back(yj[static_cast<std::size_t>(q)]);
                        add_wedge_term(dim, out, idx, s * c * t.c);
                    }
                }
        }
    }
    return out;
}

Semidirect semidirect_outder_tw(const LieAlgebra& g)
{
    const int dim = g.dim();
    OuterDerivations out = outer_derivations(g);
    Subspace<Q> twists = exterior_invariants(g, 2);
    const int q = static_cast<int>(out.outer.dim());
    const int t = static_cast<int>(twists.dim());

    std::vector<std::string> names;
    for (int u = 0; u < q; ++u)
        names.push_back("d" + std::to_string(u));
    for (int s = 0; s < t; ++s)
        names.push_back("X" + std::to_string(s));

    std::vector<StructureConstant> sc;
    for (int u = 0; u < q; ++u)
        for (int v = 0; v < q; ++v) {
            const Vec<Q>& br = out.bracket[static_cast<std::size_t>(u * q + v)];
            for (int k = 0; k < q; ++k)
                if (br(k) != 0)
                    sc.push_back({u, v, k, br(k)});
        }
    VerificationReport rep;
    std::string w;
    for (int u = 0; u < q; ++u) {
        const DenseMat<Q> act = exterior_action(dim, out.lift(dim, u), 2);
        for (int s = 0; s < t; ++s) {
            const Vec<Q> image = act * twists.vector(s);
            const auto coords = twists.coordinates(image);
            if (!coords) {
                if (w.empty())
                    w = "(" + names[static_cast<std::size_t>(u)] + "," + names[static_cast<std::size_t>(q + s)] + ")";
                continue;
            }
            for (int k = 0; k < t; ++k)
                if ((*coords)(k) != 0) {
                    sc.push_back({u, q + s, q + k, (*coords)(k)});
                    sc.push_back({q + s, u, q + k, -(*coords)(k)});
                }
        }
    }
    rep.add("action preserves invariants", w.empty(), w);

    LieAlgebra algebra("OutDer(" + g.name() + ") ⋉ (Λ²" + g.name() + ")^" + g.name(), names, sc);
    rep.append(verify_lie(algebra));
    return Semidirect{std::move(algebra), std::move(out), std::move(twists), std::move(rep)};
}

} // namespace twd
