#include "twd/bialgebra.hpp"

#include <algorithm>
#include <map>

namespace twd {

namespace {

std::string name_of(const Bialgebra& b, int i) { return b.basis_names()[static_cast<std::size_t>(i)]; }

void check_index(int i, int dim, const char* what)
{
    if (i < 0 || i >= dim)
        throw FormatError(std::string(what) + " index " + std::to_string(i) + " out of range [0, " + std::to_string(dim) + ")");
}

Tensor coproduct_basis(const Bialgebra& b, int i)
{
    Tensor out(b.dim(), 2);
    for (const auto& t : b.coproduct(i))
        out.add(MultiIndex{t.j, t.k}, t.c);
    return out;
}

// m(u ⊗ v) for degree-1 tensors.
Tensor mult1(const Bialgebra& b, const Tensor& u, const Tensor& v)
{
    Tensor out(b.dim(), 1);
    for (const auto& [i, a] : u.terms())
        for (const auto& [j, c] : v.terms())
            for (const auto& t : b.product(static_cast<int>(i), static_cast<int>(j)))
                out.add(TensorIndex(t.k), a * c * t.c);
    return out;
}

Tensor counit_all(const Bialgebra& b, const Tensor& t)
{
    Tensor out = t;
    while (out.degree() > 0)
        out = apply_counit_at(b, out, 0);
    return out;
}

} // namespace

Bialgebra::Bialgebra(std::string name, std::vector<std::string> basis_names, const std::vector<StructureConstant>& mult,
    Vec<Q> unit, const std::vector<StructureConstant>& comult, Vec<Q> counit, std::optional<DenseMat<Q>> antipode)
    : dim_(static_cast<int>(basis_names.size()))
    , name_(std::move(name))
    , names_(std::move(basis_names))
    , unit_(std::move(unit))
    , counit_(std::move(counit))
    , antipode_(std::move(antipode))
{
    if (dim_ <= 0)
        throw FormatError("bialgebra must have positive dimension");
    if (unit_.size() != dim_ || counit_.size() != dim_)
        throw FormatError("unit/counit length does not match dimension");
    if (antipode_ && (antipode_->rows() != dim_ || antipode_->cols() != dim_))
        throw FormatError("antipode must be dim x dim");

    std::map<std::tuple<int, int, int>, Q> m;
    for (const auto& s : mult) {
        check_index(s.i, dim_, "mult");
        check_index(s.j, dim_, "mult");
        check_index(s.k, dim_, "mult");
        m[{s.i, s.j, s.k}] += s.value;
    }
    mult_.resize(static_cast<std::size_t>(dim_ * dim_));
    for (const auto& [key, v] : m)
        if (v != 0) {
            auto [i, j, k] = key;
            mult_[static_cast<std::size_t>(i * dim_ + j)].push_back({k, v});
        }

    std::map<std::tuple<int, int, int>, Q> c;
    for (const auto& s : comult) {
        check_index(s.i, dim_, "comult");
        check_index(s.j, dim_, "comult");
        check_index(s.k, dim_, "comult");
        c[{s.i, s.j, s.k}] += s.value;
    }
    comult_.resize(static_cast<std::size_t>(dim_));
    for (const auto& [key, v] : c)
        if (v != 0) {
            auto [i, j, k] = key;
            comult_[static_cast<std::size_t>(i)].push_back({j, k, v});
        }
}

std::vector<StructureConstant> Bialgebra::mult_constants() const
{
    std::vector<StructureConstant> out;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (const auto& t : product(i, j))
                out.push_back({i, j, t.k, t.c});
    return out;
}

std::vector<StructureConstant> Bialgebra::comult_constants() const
{
    std::vector<StructureConstant> out;
    for (int i = 0; i < dim_; ++i)
        for (const auto& t : coproduct(i))
            out.push_back({i, t.j, t.k, t.c});
    return out;
}

int Bialgebra::index_of(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        throw FormatError("no basis element named '" + name + "'");
    return static_cast<int>(it - names_.begin());
}

Tensor element(const Bialgebra& b, const Vec<Q>& coords)
{
    if (coords.size() != b.dim())
        throw std::invalid_argument("element: wrong coordinate count");
    return Tensor::from_vector(coords);
}

Tensor basis_element(const Bialgebra& b, int i) { return Tensor::basis(b.dim(), {i}); }

Tensor unit_tensor(const Bialgebra& b, int degree) { return unit_power(b.unit(), degree); }

Tensor tensor_mult(const Bialgebra& b, const Tensor& u, const Tensor& v)
{
    if (u.degree() != v.degree())
        throw std::invalid_argument("tensor_mult: degree mismatch");
    if (u.dim() != b.dim() || v.dim() != b.dim())
        throw std::invalid_argument("tensor_mult: dimension mismatch");
    const int n = u.degree();
    Tensor out(b.dim(), n);
    if (n == 0) {
        out.add(TensorIndex{0}, u.coeff(TensorIndex{0}) * v.coeff(TensorIndex{0}));
        return out;
    }
    // Expand slot by slot; each slot product has at most a few terms.
    std::vector<std::pair<MultiIndex, Q>> partial;
    for (const auto& [iu, cu] : u.terms()) {
        const MultiIndex mu = u.multi_index(iu);
        for (const auto& [iv, cv] : v.terms()) {
            const MultiIndex mv = v.multi_index(iv);
            partial.assign(1, {MultiIndex{}, cu * cv});
            for (int s = 0; s < n && !partial.empty(); ++s) {
                const auto& prod = b.product(mu[static_cast<std::size_t>(s)], mv[static_cast<std::size_t>(s)]);
                std::vector<std::pair<MultiIndex, Q>> next;
                next.reserve(partial.size() * prod.size());
                for (const auto& [m, c] : partial)
                    for (const auto& t : prod) {
                        MultiIndex e = m;
                        e.push_back(t.k);
                        next.emplace_back(std::move(e), c * t.c);
                    }
                partial = std::move(next);
            }
            for (const auto& [m, c] : partial)
                out.add(m, c);
        }
    }
    return out;
}

Tensor commutator(const Bialgebra& b, const Tensor& u, const Tensor& v)
{
    return tensor_mult(b, u, v) - tensor_mult(b, v, u);
}

Tensor apply_delta_at(const Bialgebra& b, const Tensor& u, int slot)
{
    if (slot < 0 || slot >= u.degree())
        throw std::out_of_range("apply_delta_at: slot " + std::to_string(slot) + " out of range for degree "
            + std::to_string(u.degree()));
    Tensor out(b.dim(), u.degree() + 1);
    for (const auto& [i, c] : u.terms()) {
        const MultiIndex m = u.multi_index(i);
        MultiIndex e(m.size() + 1);
        std::copy(m.begin(), m.begin() + slot, e.begin());
        std::copy(m.begin() + slot + 1, m.end(), e.begin() + slot + 2);
        for (const auto& t : b.coproduct(m[static_cast<std::size_t>(slot)])) {
            e[static_cast<std::size_t>(slot)] = t.j;
            e[static_cast<std::size_t>(slot) + 1] = t.k;
            out.add(e, c * t.c);
        }
    }
    return out;
}

Tensor iterated_delta_at(const Bialgebra& b, const Tensor& u, int slot, int copies)
{
    if (copies < 0)
        throw std::invalid_argument("iterated_delta_at: negative copy count");
    if (copies == 0)
        return apply_counit_at(b, u, slot);
    Tensor out = u;
    for (int c = 1; c < copies; ++c)
        out = apply_delta_at(b, out, slot);
    return out;
}

Tensor iterated_coproduct(const Bialgebra& b, const Vec<Q>& x, int n)
{
    if (n < 1)
        throw std::invalid_argument("iterated_coproduct: n must be >= 1");
    Tensor out = element(b, x);
    for (int k = 1; k < n; ++k)
        out = apply_delta_at(b, out, 0);
    return out;
}

Tensor apply_counit_at(const Bialgebra& b, const Tensor& u, int slot)
{
    if (slot < 0 || slot >= u.degree())
        throw std::out_of_range("apply_counit_at: slot out of range");
    Tensor out(b.dim(), u.degree() - 1);
    for (const auto& [i, c] : u.terms()) {
        MultiIndex m = u.multi_index(i);
        const Q& e = b.counit()(m[static_cast<std::size_t>(slot)]);
        if (e == 0)
            continue;
        m.erase(m.begin() + slot);
        out.add(m, c * e);
    }
    return out;
}

Matrix<Q> matrix_of(const Bialgebra& b, int in_degree, int out_degree, const std::function<Tensor(const Tensor&)>& map)
{
    const TensorIndex cols = power(b.dim(), in_degree);
    const TensorIndex rows = power(b.dim(), out_degree);
    return from_columns<Q>(static_cast<Index>(rows), static_cast<Index>(cols), [&](Index j) {
        Tensor e(b.dim(), in_degree);
        e.add(static_cast<TensorIndex>(j), Q(1));
        const Tensor img = map(e);
        if (img.degree() != out_degree)
            throw std::logic_error("matrix_of: map returned the wrong degree");
        return img.to_sparse();
    });
}

DenseMat<Q> left_mult_matrix(const Bialgebra& b, const Vec<Q>& a)
{
    DenseMat<Q> m = DenseMat<Q>::Constant(b.dim(), b.dim(), Q(0));
    const Tensor ta = element(b, a);
    for (int j = 0; j < b.dim(); ++j) {
        const Tensor p = mult1(b, ta, basis_element(b, j));
        for (const auto& [k, c] : p.terms())
            m(static_cast<Index>(k), j) = c;
    }
    return m;
}

DenseMat<Q> right_mult_matrix(const Bialgebra& b, const Vec<Q>& a)
{
    DenseMat<Q> m = DenseMat<Q>::Constant(b.dim(), b.dim(), Q(0));
    const Tensor ta = element(b, a);
    for (int j = 0; j < b.dim(); ++j) {
        const Tensor p = mult1(b, basis_element(b, j), ta);
        for (const auto& [k, c] : p.terms())
            m(static_cast<Index>(k), j) = c;
    }
    return m;
}

DenseMat<Q> ad_matrix(const Bialgebra& b, const Vec<Q>& a)
{
    return left_mult_matrix(b, a) - right_mult_matrix(b, a);
}

std::optional<std::string> group_like_defect(const Bialgebra& b, const Vec<Q>& g)
{
    const Tensor tg = element(b, g);
    const Tensor residual = apply_delta_at(b, tg, 0) - concat(tg, tg);
    if (!residual.is_zero())
        return "Δ(g) - g⊗g = " + format_tensor(residual, b.basis_names());
    Q e = 0;
    for (int i = 0; i < b.dim(); ++i)
        e += b.counit()(i) * g(i);
    if (e != 1)
        return "ε(g) = " + to_string(e);
    return std::nullopt;
}

Subspace<Q> augmentation_ideal(const Bialgebra& b)
{
    Matrix<Q> m = from_columns<Q>(1, b.dim(), [&](Index j) {
        SparseRow<Q> r;
        if (b.counit()(j) != 0)
            r.emplace_back(0, b.counit()(j));
        return r;
    });
    return kernel_basis(m);
}

namespace {

Subspace<Q> skew_primitives(const Bialgebra& b, const Tensor& left, const Tensor& right)
{
    // Δ(x) - left⊗x - x⊗right = 0, linear in x.
    auto fn = [&](const Tensor& x) { return apply_delta_at(b, x, 0) - concat(left, x) - concat(x, right); };
    return kernel_basis(matrix_of(b, 1, 2, fn));
}

} // namespace

Subspace<Q> primitives(const Bialgebra& b)
{
    const Tensor one = unit_tensor(b, 1);
    return skew_primitives(b, one, one);
}

Subspace<Q> g_primitives(const Bialgebra& b, const Vec<Q>& g)
{
    if (auto defect = group_like_defect(b, g))
        throw PreconditionError("g is not group-like: " + *defect);
    return skew_primitives(b, unit_tensor(b, 1), element(b, g));
}

Subspace<Q> centre(const Bialgebra& b) { return adjoint_invariants(b, 1); }

Subspace<Q> adjoint_invariants(const Bialgebra& b, int n)
{
    if (n < 1)
        throw std::invalid_argument("adjoint_invariants: n must be >= 1");
    std::vector<Tensor> deltas;
    for (int i = 0; i < b.dim(); ++i)
        deltas.push_back(iterated_coproduct(b, unit_vec<Q>(b.dim(), i), n));
    std::vector<Matrix<Q>> blocks;
    for (const auto& di : deltas)
        blocks.push_back(matrix_of(b, n, n, [&](const Tensor& x) { return commutator(b, x, di); }));
    return kernel_basis(vstack(blocks));
}

Bialgebra dual_algebra(const Bialgebra& b)
{
    // (e^j e^k)(e_i) = coefficient of e_j⊗e_k in Δ(e_i); Δ(e^k)(e_i⊗e_j) = m[i][j][k].
    std::vector<StructureConstant> mult;
    for (const auto& c : b.comult_constants())
        mult.push_back({c.j, c.k, c.i, c.value});
    std::vector<StructureConstant> comult;
    for (const auto& m : b.mult_constants())
        comult.push_back({m.k, m.i, m.j, m.value});
    std::vector<std::string> names;
    for (const auto& n : b.basis_names())
        names.push_back(n + "*");
    std::optional<DenseMat<Q>> s;
    if (b.antipode())
        s = b.antipode()->transpose();
    Bialgebra d(b.name() + "_dual", names, mult, b.counit(), comult, b.unit(), s);
    d.set_description("dual of " + b.name());
    return d;
}

std::optional<std::string> sub_bialgebra_defect(const Bialgebra& b, const Subspace<Q>& k)
{
    if (k.ambient_dim() != b.dim())
        throw std::invalid_argument("sub_bialgebra_defect: ambient dimension mismatch");
    if (!k.contains(b.unit()))
        return std::string("unit not in subspace");
    const auto vs = k.vectors();
    for (std::size_t p = 0; p < vs.size(); ++p)
        for (std::size_t q = 0; q < vs.size(); ++q) {
            const Tensor prod = mult1(b, element(b, vs[p]), element(b, vs[q]));
            if (!k.contains(prod.to_dense()))
                return "product of basis vectors " + std::to_string(p) + "," + std::to_string(q) + " leaves the subspace";
        }
    // Δ(v) ∈ K⊗K iff both (π⊗I)Δ(v) and (I⊗π)Δ(v) vanish, π the projection killing K.
    const Quotient<Q> quo = quotient(b.dim(), k);
    const DenseMat<Q> proj = to_dense(quo.project);
    for (std::size_t p = 0; p < vs.size(); ++p) {
        const Tensor dv = apply_delta_at(b, element(b, vs[p]), 0);
        if (!apply_endo_at(dv, proj, 0).is_zero() || !apply_endo_at(dv, proj, 1).is_zero())
            return "coproduct of basis vector " + std::to_string(p) + " leaves K⊗K";
    }
    return std::nullopt;
}

VerificationReport verify_bialgebra(const Bialgebra& b)
{
    VerificationReport rep;
    const int n = b.dim();
    const Tensor one = unit_tensor(b, 1);
    auto e = [&](int i) { return basis_element(b, i); };
    auto first_failure = [](auto&& pred) -> std::string {
        std::string w;
        pred(w);
        return w;
    };

    std::string w = first_failure([&](std::string& out) {
        for (int i = 0; i < n && out.empty(); ++i)
            for (int j = 0; j < n && out.empty(); ++j)
                for (int k = 0; k < n && out.empty(); ++k)
                    if (!(mult1(b, mult1(b, e(i), e(j)), e(k)) == mult1(b, e(i), mult1(b, e(j), e(k)))))
                        out = "(" + name_of(b, i) + "," + name_of(b, j) + "," + name_of(b, k) + ")";
    });
    rep.add("associativity", w.empty(), w);

    w = first_failure([&](std::string& out) {
        for (int i = 0; i < n && out.empty(); ++i)
            if (!(mult1(b, one, e(i)) == e(i)) || !(mult1(b, e(i), one) == e(i)))
                out = "(" + name_of(b, i) + ")";
    });
    rep.add("unit", w.empty(), w);

    w = first_failure([&](std::string& out) {
        for (int i = 0; i < n && out.empty(); ++i) {
            const Tensor d = coproduct_basis(b, i);
            if (!(apply_delta_at(b, d, 0) == apply_delta_at(b, d, 1)))
                out = "(" + name_of(b, i) + ")";
        }
    });
    rep.add("coassociativity", w.empty(), w);

    w = first_failure([&](std::string& out) {
        for (int i = 0; i < n && out.empty(); ++i) {
            const Tensor d = coproduct_basis(b, i);
            if (!(apply_counit_at(b, d, 0) == e(i)) || !(apply_counit_at(b, d, 1) == e(i)))
                out = "(" + name_of(b, i) + ")";
        }
    });
    rep.add("counit", w.empty(), w);

    w = first_failure([&](std::string& out) {
        for (int i = 0; i < n && out.empty(); ++i)
            for (int j = 0; j < n && out.empty(); ++j) {
                const Tensor lhs = apply_delta_at(b, mult1(b, e(i), e(j)), 0);
                const Tensor rhs = tensor_mult(b, coproduct_basis(b, i), coproduct_basis(b, j));
                if (!(lhs == rhs))
                    out = "(" + name_of(b, i) + "," + name_of(b, j) + ")";
            }
    });
    rep.add("Δ multiplicative", w.empty(), w);

    rep.add("Δ unital", apply_delta_at(b, one, 0) == unit_tensor(b, 2),
        "Δ(1) = " + format_tensor(apply_delta_at(b, one, 0), b.basis_names()));

    w = first_failure([&](std::string& out) {
        for (int i = 0; i < n && out.empty(); ++i)
            for (int j = 0; j < n && out.empty(); ++j) {
                const Tensor lhs = counit_all(b, mult1(b, e(i), e(j)));
                const Q rhs = b.counit()(i) * b.counit()(j);
                if (lhs.coeff(TensorIndex{0}) != rhs)
                    out = "(" + name_of(b, i) + "," + name_of(b, j) + ")";
            }
    });
    rep.add("ε multiplicative", w.empty(), w);

    const Q eps_one = counit_all(b, one).coeff(TensorIndex{0});
    rep.add("ε unital", eps_one == 1, "ε(1) = " + to_string(eps_one));

    if (b.antipode()) {
        const DenseMat<Q>& s = *b.antipode();
        w = first_failure([&](std::string& out) {
            for (int i = 0; i < n && out.empty(); ++i) {
                const Tensor eps1 = Q(b.counit()(i)) * one;
                Tensor left(n, 1);
                Tensor right(n, 1);
                for (const auto& t : b.coproduct(i)) {
                    const Tensor sj = Tensor::from_vector(s.col(t.j));
                    const Tensor sk = Tensor::from_vector(s.col(t.k));
                    left += t.c * mult1(b, sj, e(t.k));
                    right += t.c * mult1(b, e(t.j), sk);
                }
                if (!(left == eps1) || !(right == eps1))
                    out = "(" + name_of(b, i) + ")";
            }
        });
        rep.add("antipode", w.empty(), w);
    }
    return rep;
}

} // namespace twd
