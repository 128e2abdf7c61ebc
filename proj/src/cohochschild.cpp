#include "twd/cohochschild.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace twd {

Tensor alternate(const Tensor& t)
{
    const int n = t.degree();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Tensor out(t.dim(), n);
    long count = 0;
    do {
        int inversions = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)])
                    ++inversions;
        out += Q(parity_sign(inversions)) * permute(t, perm);
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out *= Q(1) / Q(count);
    return out;
}

TensorIndex tensor_cap()
{
    if (const char* env = std::getenv("TWD_TENSOR_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<TensorIndex>(v);
    }
    return 5000;
}

void check_cap(int dim, int degree)
{
    const TensorIndex cap = tensor_cap();
    TensorIndex size = 1;
    for (int i = 0; i < degree; ++i) {
        size *= static_cast<TensorIndex>(dim);
        if (size > cap)
            throw CapExceeded("tensor space of dimension " + std::to_string(dim) + "^" + std::to_string(degree)
                + " exceeds the cap " + std::to_string(cap));
    }
}

Tensor coboundary(const Bialgebra& b, const Tensor& x) { return coboundary_of(BialgebraOps{b}, x); }

Matrix<Q> differential(const Bialgebra& b, int n)
{
    if (n < 0)
        throw std::invalid_argument("differential: negative degree");
    check_cap(b.dim(), n + 1);
    return matrix_of(b, n, n + 1, [&](const Tensor& x) { return coboundary(b, x); });
}

LinearCohomology linear_cohomology(const Matrix<Q>& d_in, const Matrix<Q>& d_out)
{
    LinearCohomology r;
    r.cocycles = kernel_basis(d_out);
    r.coboundaries = image(d_in);
    r.cocycle_dim = r.cocycles.dim();
    r.coboundary_dim = r.coboundaries.dim();
    std::vector<Vec<Q>> in_coords;
    for (const auto& v : r.coboundaries.vectors()) {
        auto c = r.cocycles.coordinates(v);
        if (!c)
            throw std::logic_error("coboundary outside the cocycles: the two maps do not compose to zero");
        in_coords.push_back(std::move(*c));
    }
    const Subspace<Q> b_in_z = Subspace<Q>::span(r.cocycle_dim, in_coords);
    const Quotient<Q> q = quotient(r.cocycle_dim, b_in_z);
    for (Index idx : q.complement_indices)
        r.representatives.push_back(r.cocycles.vector(idx));
    r.dim = q.dim();
    return r;
}

CohomologyResult cohomology(const Bialgebra& b, int n)
{
    if (n < 0)
        throw std::invalid_argument("cohomology: negative degree");
    CohomologyResult out;
    out.degree = n;
    if (n == 0) {
        out.dim = out.cocycle_dim = 1;
        out.representatives.push_back(Tensor::scalar(b.dim(), Q(1)));
        return out;
    }
    const LinearCohomology lc = linear_cohomology(differential(b, n - 1), differential(b, n));
    out.dim = lc.dim;
    out.cocycle_dim = lc.cocycle_dim;
    out.coboundary_dim = lc.coboundary_dim;
    for (const auto& v : lc.representatives)
        out.representatives.push_back(Tensor::from_dense(b.dim(), n, v));
    return out;
}

std::optional<Tensor> coboundary_preimage(const Bialgebra& b, const Tensor& target)
{
    const int n = target.degree();
    if (n < 1)
        throw std::invalid_argument("coboundary_preimage: target must have degree >= 1");
    const auto z = solve(differential(b, n - 1), target.to_dense());
    if (!z)
        return std::nullopt;
    return Tensor::from_dense(b.dim(), n - 1, *z);
}

Tensor circle_i(const Bialgebra& b, const Tensor& x, const Tensor& y, int i)
{
    return circle_i_of(BialgebraOps{b}, x, y, i);
}

Tensor circle(const Bialgebra& b, const Tensor& x, const Tensor& y, CircleSign sign)
{
    return circle_of(BialgebraOps{b}, x, y, sign);
}

Tensor gerstenhaber(const Bialgebra& b, const Tensor& x, const Tensor& y, BracketSign sign)
{
    return gerstenhaber_of(BialgebraOps{b}, x, y, sign);
}

Matrix<Q> dual_hochschild_differential(const Bialgebra& b, int n)
{
    if (n < 0)
        throw std::invalid_argument("dual_hochschild_differential: negative degree");
    check_cap(b.dim(), n + 1);
    const Bialgebra a = dual_algebra(b);
    const int dim = a.dim();
    // Factorisations of each dual basis element: k ↦ {(p, q, c) : e^p e^q has e^k-coefficient c}.
    std::vector<std::vector<StructureConstant>> factor(static_cast<std::size_t>(dim));
    for (const auto& s : a.mult_constants())
        factor[static_cast<std::size_t>(s.k)].push_back(s);

    const Tensor shape_in(dim, n);
    const Tensor shape_out(dim, n + 1);
    const auto cols = static_cast<Index>(shape_in.size());
    const auto rows = static_cast<Index>(shape_out.size());
    // Column J is the functional f_J = [args == J]; row A holds (δf_J)(e^{a_1}, ..., e^{a_{n+1}}).
    return from_columns<Q>(rows, cols, [&](Index col) {
        const MultiIndex j = shape_in.multi_index(static_cast<TensorIndex>(col));
        SparseRow<Q> out;
        MultiIndex row(static_cast<std::size_t>(n + 1));
        for (int a0 = 0; a0 < dim; ++a0) {
            const Q& e = a.counit()(a0);
            if (e == 0)
                continue;
            row[0] = a0;
            std::copy(j.begin(), j.end(), row.begin() + 1);
            out.emplace_back(static_cast<Index>(shape_out.linear_index(row)), e);
        }
        for (int i = 1; i <= n; ++i) {
            for (const auto& s : factor[static_cast<std::size_t>(j[static_cast<std::size_t>(i - 1)])]) {
                std::copy(j.begin(), j.begin() + (i - 1), row.begin());
                row[static_cast<std::size_t>(i - 1)] = s.i;
                row[static_cast<std::size_t>(i)] = s.j;
                std::copy(j.begin() + i, j.end(), row.begin() + i + 1);
                out.emplace_back(static_cast<Index>(shape_out.linear_index(row)), Q(parity_sign(i)) * s.value);
            }
        }
        for (int an = 0; an < dim; ++an) {
            const Q& e = a.counit()(an);
            if (e == 0)
                continue;
            std::copy(j.begin(), j.end(), row.begin());
            row[static_cast<std::size_t>(n)] = an;
            out.emplace_back(static_cast<Index>(shape_out.linear_index(row)), Q(parity_sign(n + 1)) * e);
        }
        return out;
    });
}

VerificationReport dual_hochschild_compare(const Bialgebra& b, int n)
{
    VerificationReport rep;
    const Matrix<Q> co = differential(b, n);
    const Matrix<Q> ho = dual_hochschild_differential(b, n);
    std::string witness;
    if (!equal(co, ho)) {
        const DenseMat<Q> diff = to_dense(Matrix<Q>(co - ho));
        for (Index r = 0; r < diff.rows() && witness.empty(); ++r)
            for (Index c = 0; c < diff.cols() && witness.empty(); ++c)
                if (diff(r, c) != 0)
                    witness = "entry (" + std::to_string(r) + "," + std::to_string(c) + ") differs by " + to_string(diff(r, c));
    }
    rep.add("dual Hochschild differential, degree " + std::to_string(n), witness.empty(), witness);
    return rep;
}

GPrimitiveCocycle gprimitive_cocycle(const Bialgebra& b, const std::vector<Vec<Q>>& gs, const std::vector<Vec<Q>>& xs)
{
    if (gs.empty() || gs.size() != xs.size())
        throw PreconditionError("gprimitive_cocycle needs equally many (>= 1) group-likes and elements");
    const Tensor one = unit_tensor(b, 1);
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (auto defect = group_like_defect(b, gs[i]))
            throw PreconditionError("g_" + std::to_string(i + 1) + " is not group-like: " + *defect);
        const Tensor x = element(b, xs[i]);
        const Tensor r = apply_delta_at(b, x, 0) - concat(one, x) - concat(x, element(b, gs[i]));
        if (!r.is_zero())
            throw PreconditionError("x_" + std::to_string(i + 1) + " is not g-primitive: residual "
                + format_tensor(r, b.basis_names()));
    }
    Tensor prefix = one;
    Tensor f = Tensor::scalar(b.dim(), Q(1));
    for (std::size_t i = 0; i < gs.size(); ++i) {
        f = concat(f, tensor_mult(b, prefix, element(b, xs[i])));
        prefix = tensor_mult(b, prefix, element(b, gs[i]));
    }
    GPrimitiveCocycle out;
    out.residual = coboundary(b, f) - Q(parity_sign(static_cast<long>(gs.size()))) * concat(f, prefix - one);
    out.cochain = std::move(f);
    return out;
}

VerificationReport filtration_subcomplex(const Bialgebra& b, const Subspace<Q>& k, int m, int max_degree)
{
    if (auto defect = sub_bialgebra_defect(b, k))
        throw PreconditionError("not a sub-bialgebra: " + *defect);
    if (m < 0 || max_degree < 0)
        throw std::invalid_argument("filtration_subcomplex: negative degree");
    const DenseMat<Q> proj = to_dense(quotient(b.dim(), k).project);
    const auto kvecs = k.vectors();
    auto in_filtration = [&](const Tensor& t) {
        for (int s = 0; s < std::min(t.degree(), m); ++s)
            if (!apply_endo_at(t, proj, s).is_zero())
                return false;
        return true;
    };

    VerificationReport rep;
    for (int i = 0; i <= max_degree; ++i) {
        check_cap(b.dim(), i + 1);
        const int restricted = std::min(i, m);
        std::vector<std::size_t> choice(static_cast<std::size_t>(i), 0);
        auto slot_count = [&](int s) { return s < restricted ? kvecs.size() : static_cast<std::size_t>(b.dim()); };
        std::string witness;
        bool done = false;
        while (!done && witness.empty()) {
            Tensor x = Tensor::scalar(b.dim(), Q(1));
            for (int s = 0; s < i; ++s) {
                const std::size_t c = choice[static_cast<std::size_t>(s)];
                x = concat(x, s < restricted ? element(b, kvecs[c]) : basis_element(b, static_cast<int>(c)));
            }
            if (!in_filtration(coboundary(b, x)))
                witness = "∂(" + format_tensor(x, b.basis_names()) + ") leaves the filtration";
            int s = i - 1;
            while (s >= 0 && ++choice[static_cast<std::size_t>(s)] == slot_count(s)) {
                choice[static_cast<std::size_t>(s)] = 0;
                --s;
            }
            done = s < 0;
            if (restricted > 0 && kvecs.empty())
                done = true;
        }
        rep.add("∂ C^" + std::to_string(i) + "_" + std::to_string(m) + " ⊆ C^" + std::to_string(i + 1) + "_"
                + std::to_string(m),
            witness.empty(), witness);
    }
    return rep;
}

Matrix<Q> alternation(int dim, int n)
{
    const Tensor shape(dim, n);
    const auto size = static_cast<Index>(shape.size());
    return from_columns<Q>(size, size, [&](Index c) {
        Tensor e(dim, n);
        e.add(static_cast<TensorIndex>(c), Q(1));
        return alternate(e).to_sparse();
    });
}

std::optional<Homotopy> solve_homotopy(const Matrix<Q>& d_in, const Matrix<Q>& d_out, const Matrix<Q>& target)
{
    const Index c_prev = d_in.cols();
    const Index c_n = d_in.rows();
    const Index c_next = d_out.rows();
    if (d_out.cols() != c_n || target.rows() != c_n || target.cols() != c_n)
        throw std::invalid_argument("solve_homotopy: incompatible shapes");
    // Unknowns: a_n(r, q) at r*c_n + q, then a_{n+1}(p, s) at offset + p*c_next + s.
    // Equation (p, q): Σ_r d_in(p,r) a_n(r,q) + Σ_s a_{n+1}(p,s) d_out(s,q) = target(p,q).
    const Index offset = c_prev * c_n;
    std::map<std::pair<Index, Index>, Q> entries;
    for (Index p = 0; p < d_in.outerSize(); ++p)
        for (Matrix<Q>::InnerIterator it(d_in, p); it; ++it)
            for (Index q = 0; q < c_n; ++q)
                entries[{p * c_n + q, it.col() * c_n + q}] += it.value();
    for (Index s = 0; s < d_out.outerSize(); ++s)
        for (Matrix<Q>::InnerIterator it(d_out, s); it; ++it)
            for (Index p = 0; p < c_n; ++p)
                entries[{p * c_n + it.col(), offset + p * c_next + s}] += it.value();
    const Matrix<Q> system = from_entries<Q>(c_n * c_n, offset + c_n * c_next, entries);
    Vec<Q> rhs = zero_vec<Q>(c_n * c_n);
    for (Index p = 0; p < target.outerSize(); ++p)
        for (Matrix<Q>::InnerIterator it(target, p); it; ++it)
            rhs(p * c_n + it.col()) = it.value();
    const auto x = solve(system, rhs);
    if (!x)
        return std::nullopt;
    std::map<std::pair<Index, Index>, Q> lower;
    std::map<std::pair<Index, Index>, Q> upper;
    for (Index u = 0; u < x->size(); ++u) {
        if ((*x)(u) == 0)
            continue;
        if (u < offset)
            lower[{u / c_n, u % c_n}] = (*x)(u);
        else
            upper[{(u - offset) / c_next, (u - offset) % c_next}] = (*x)(u);
    }
    return Homotopy{from_entries<Q>(c_prev, c_n, lower), from_entries<Q>(c_n, c_next, upper)};
}

std::optional<Homotopy> alternation_homotopy(const Bialgebra& b, int n)
{
    if (n < 1)
        throw std::invalid_argument("alternation_homotopy: n must be >= 1");
    const Matrix<Q> target = identity<Q>(static_cast<Index>(power(b.dim(), n))) - alternation(b.dim(), n);
    return solve_homotopy(differential(b, n - 1), differential(b, n), target);
}

} // namespace twd
