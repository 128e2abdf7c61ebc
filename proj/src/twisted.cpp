#include "twd/twisted.hpp"

#include <array>
#include <string>

namespace twd {

namespace {

std::size_t sz(Index i) { return static_cast<std::size_t>(i); }

Tensor apply_map(const DenseMat<Q>& m, const Tensor& x) { return apply_endo_at(x, m, 0); }

Q counit_of(const Bialgebra& b, const Vec<Q>& a) { return b.counit().dot(a); }

std::string index_witness(const Bialgebra& b, const Tensor& t)
{
    if (t.is_zero())
        return {};
    const MultiIndex idx = t.multi_index(t.terms().begin()->first);
    std::string w = "(";
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k)
            w += ",";
        w += b.basis_names()[static_cast<std::size_t>(idx[k])];
    }
    return w + ")";
}

std::string pair_witness(Index i, Index j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

// Residual families of the twisted derivation equations. Each is a tensor
// whose leading slots name the basis input and whose last slots carry the
// value, so a zero tensor means the family holds.

Tensor leibniz_residual(const Bialgebra& b, const DenseMat<Q>& d)
{
    const int n = b.dim();
    Tensor out(n, 3);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Tensor ei = basis_element(b, i);
            const Tensor ej = basis_element(b, j);
            const Tensor r = apply_map(d, tensor_mult(b, ei, ej)) - tensor_mult(b, apply_map(d, ei), ej)
                - tensor_mult(b, ei, apply_map(d, ej));
            for (const auto& [k, c] : r.terms())
                out.add(MultiIndex{i, j, static_cast<int>(k)}, c);
        }
    return out;
}

// (I⊗d + d⊗I)Δx - Δ(dx), indexed (x, a, b).
Tensor coderivation_defect(const Bialgebra& b, const DenseMat<Q>& d)
{
    const int n = b.dim();
    Tensor out(n, 3);
    for (int i = 0; i < n; ++i) {
        const Tensor x = basis_element(b, i);
        const Tensor r = apply_derivation(apply_delta_at(b, x, 0), d) - apply_delta_at(b, apply_map(d, x), 0);
        for (const auto& [k, c] : r.terms())
            out.add(static_cast<TensorIndex>(i) * power(n, 2) + k, c);
    }
    return out;
}

Tensor conjd_residual(const Bialgebra& b, const TwistedDerivation& t)
{
    const int n = b.dim();
    Tensor out = coderivation_defect(b, t.d);
    for (int i = 0; i < n; ++i) {
        const Tensor c = commutator(b, t.phi, apply_delta_at(b, basis_element(b, i), 0));
        for (const auto& [k, v] : c.terms())
            out.add(static_cast<TensorIndex>(i) * power(n, 2) + k, -v);
    }
    return out;
}

Tensor cocd_residual(const Bialgebra& b, const Tensor& phi)
{
    const Tensor one = unit_tensor(b, 1);
    return concat(one, phi) + apply_delta_at(b, phi, 1) - concat(phi, one) - apply_delta_at(b, phi, 0);
}

std::array<Tensor, 3> normd_residual(const Bialgebra& b, const TwistedDerivation& t)
{
    Tensor ed(b.dim(), 1);
    for (int i = 0; i < b.dim(); ++i)
        ed.add(TensorIndex(i), counit_of(b, t.d.col(i)));
    return {ed, apply_counit_at(b, t.phi, 0), apply_counit_at(b, t.phi, 1)};
}

void append_tensor(SparseRow<Q>& row, Index& offset, const Tensor& t)
{
    for (const auto& [k, c] : t.terms())
        row.emplace_back(offset + static_cast<Index>(k), c);
    offset += static_cast<Index>(t.size());
}

SparseRow<Q> full_residual(const Bialgebra& b, const TwistedDerivation& t)
{
    SparseRow<Q> row;
    Index offset = 0;
    append_tensor(row, offset, leibniz_residual(b, t.d));
    append_tensor(row, offset, conjd_residual(b, t));
    append_tensor(row, offset, cocd_residual(b, t.phi));
    for (const auto& r : normd_residual(b, t))
        append_tensor(row, offset, r);
    return row;
}

Index residual_size(const Bialgebra& b)
{
    const Index n = b.dim();
    return 3 * n * n * n + 3 * n;
}

// Constraint matrix restricted to the packed columns [first, first + count).
Matrix<Q> constraint_matrix(const Bialgebra& b, Index first, Index count)
{
    const Index total = packed_size(b);
    return from_columns<Q>(residual_size(b), count,
        [&](Index j) { return full_residual(b, unpack(b, unit_vec<Q>(total, first + j))); });
}

Tensor scaled(const Tensor& t, const Q& c) { return c * t; }

} // namespace

TwistedDerivation zero_twisted_derivation(const Bialgebra& b)
{
    return {DenseMat<Q>::Constant(b.dim(), b.dim(), Q(0)), Tensor(b.dim(), 2)};
}

Index packed_size(const Bialgebra& b) { return 2 * Index(b.dim()) * b.dim(); }

Vec<Q> pack(const Bialgebra& b, const TwistedDerivation& t)
{
    const Index n = b.dim();
    Vec<Q> v = zero_vec<Q>(packed_size(b));
    for (Index i = 0; i < n; ++i)
        for (Index k = 0; k < n; ++k)
            v(i * n + k) = t.d(k, i);
    for (const auto& [idx, c] : t.phi.terms())
        v(n * n + static_cast<Index>(idx)) = c;
    return v;
}

TwistedDerivation unpack(const Bialgebra& b, const Vec<Q>& v)
{
    const Index n = b.dim();
    if (v.size() != packed_size(b))
        throw FormatError("packed twisted derivation has length " + std::to_string(v.size()) + ", expected "
            + std::to_string(packed_size(b)));
    TwistedDerivation t = zero_twisted_derivation(b);
    for (Index i = 0; i < n; ++i)
        for (Index k = 0; k < n; ++k)
            t.d(k, i) = v(i * n + k);
    for (Index j = 0; j < n * n; ++j)
        if (v(n * n + j) != 0)
            t.phi.add(static_cast<TensorIndex>(j), v(n * n + j));
    return t;
}

TwistedDerivation operator+(const TwistedDerivation& a, const TwistedDerivation& b) { return {a.d + b.d, a.phi + b.phi}; }

TwistedDerivation operator-(const TwistedDerivation& a, const TwistedDerivation& b) { return {a.d - b.d, a.phi - b.phi}; }

TwistedDerivation operator*(const Q& c, const TwistedDerivation& t)
{
    DenseMat<Q> d = t.d;
    for (Index i = 0; i < d.rows(); ++i)
        for (Index j = 0; j < d.cols(); ++j)
            d(i, j) *= c;
    return {d, scaled(t.phi, c)};
}

VerificationReport verify_twisted_derivation(const Bialgebra& b, const TwistedDerivation& t)
{
    VerificationReport rep;
    const Tensor lr = leibniz_residual(b, t.d);
    rep.add("Leibniz", lr.is_zero(), index_witness(b, lr));
    const Tensor cr = conjd_residual(b, t);
    rep.add("conjd", cr.is_zero(), index_witness(b, cr));
    const Tensor co = cocd_residual(b, t.phi);
    rep.add("cocd", co.is_zero(), index_witness(b, co));
    const auto nr = normd_residual(b, t);
    std::string w;
    for (const auto& r : nr)
        if (w.empty() && !r.is_zero())
            w = index_witness(b, r);
    rep.add("normd", w.empty(), w);
    return rep;
}

Subspace<Q> twisted_derivation_space(const Bialgebra& b)
{
    return kernel_basis(constraint_matrix(b, 0, packed_size(b)));
}

TwistedDerivation bracket(const Bialgebra& b, const TwistedDerivation& t1, const TwistedDerivation& t2)
{
    TwistedDerivation out;
    out.d = t1.d * t2.d - t2.d * t1.d;
    out.phi = apply_derivation(t2.phi, t1.d) - apply_derivation(t1.phi, t2.d) - commutator(b, t1.phi, t2.phi);
    return out;
}

TwistedDerivation boundary(const Bialgebra& b, const Vec<Q>& a)
{
    if (counit_of(b, a) != 0)
        throw PreconditionError("boundary: ε(a) = " + to_string(counit_of(b, a)) + " is not zero");
    const Tensor at = element(b, a);
    const Tensor one = unit_tensor(b, 1);
    return {ad_matrix(b, a), concat(at, one) + concat(one, at) - apply_delta_at(b, at, 0)};
}

std::optional<Vec<Q>> gauge_between(const Bialgebra& b, const TwistedDerivation& t1, const TwistedDerivation& t2)
{
    const Subspace<Q> h_eps = augmentation_ideal(b);
    const Matrix<Q> m = from_columns<Q>(packed_size(b), h_eps.dim(),
        [&](Index j) { return sparse_of(pack(b, boundary(b, h_eps.vector(j)))); });
    const auto c = solve(m, pack(b, t2 - t1));
    if (!c)
        return std::nullopt;
    return h_eps.combine(*c);
}

TwistedDerivation TwistedCrossedModule::section(const Bialgebra& b, Index u) const
{
    return unpack(b, der.combine(inv.section.col(u)));
}

std::vector<Vec<Q>> TwistedCrossedModule::pi1_vectors() const
{
    std::vector<Vec<Q>> out;
    for (const auto& v : inv.pi1.vectors())
        out.push_back(h_eps.combine(v));
    return out;
}

TwistedCrossedModule crossed_module(const Bialgebra& b)
{
    TwistedCrossedModule cm;
    cm.der = twisted_derivation_space(b);
    cm.h_eps = augmentation_ideal(b);
    const Subspace<Q> der = cm.der;
    const Subspace<Q> h_eps = cm.h_eps;
    auto to_p = [&b, der](const TwistedDerivation& t) {
        const auto c = der.coordinates(pack(b, t));
        if (!c)
            throw std::logic_error("crossed_module: result left Der_tw");
        return *c;
    };
    auto from_p = [&b, der](const Vec<Q>& u) { return unpack(b, der.combine(u)); };
    auto to_n = [h_eps](const Vec<Q>& v) {
        const auto c = h_eps.coordinates(v);
        if (!c)
            throw std::logic_error("crossed_module: result left H_ε");
        return *c;
    };

    LieCrossedModuleData& data = cm.data;
    data.p_dim = der.dim();
    data.n_dim = h_eps.dim();
    data.p_bracket = [&b, to_p, from_p](const Vec<Q>& u, const Vec<Q>& v) {
        return to_p(bracket(b, from_p(u), from_p(v)));
    };
    data.n_bracket = [&b, h_eps, to_n](const Vec<Q>& u, const Vec<Q>& v) {
        return to_n(commutator(b, element(b, h_eps.combine(u)), element(b, h_eps.combine(v))).to_dense());
    };
    data.boundary = from_columns<Q>(data.p_dim, data.n_dim,
        [&](Index j) { return sparse_of(to_p(boundary(b, h_eps.vector(j)))); });
    data.action = [h_eps, from_p, to_n](const Vec<Q>& p, const Vec<Q>& n) {
        return to_n(from_p(p).d * h_eps.combine(n));
    };
    cm.inv = analyze_crossed_module(data);
    return cm;
}

Subspace<Q> invariant_twists(const Bialgebra& b)
{
    const Index n2 = Index(b.dim()) * b.dim();
    return kernel_basis(constraint_matrix(b, n2, n2));
}

Subspace<Q> bialgebra_derivations(const Bialgebra& b)
{
    const Index n2 = Index(b.dim()) * b.dim();
    return kernel_basis(constraint_matrix(b, 0, n2));
}

std::optional<Separation> separate(const Bialgebra& b, const TwistedDerivation& t)
{
    const Subspace<Q> h_eps = augmentation_ideal(b);
    const Index rows = static_cast<Index>(power(b.dim(), 3));
    const Matrix<Q> m = from_columns<Q>(rows, h_eps.dim(),
        [&](Index j) { return coderivation_defect(b, ad_matrix(b, h_eps.vector(j))).to_sparse(); });
    const auto c = solve(m, coderivation_defect(b, t.d).to_dense());
    if (!c)
        return std::nullopt;
    Separation s;
    s.a = h_eps.combine(*c);
    s.separated = t - boundary(b, s.a);
    return s;
}

namespace {

// Quotient of `space` by `inner` in space coordinates, with the bracket
// induced from `br` on ambient vectors.
template <typename Bracket>
void induced_quotient(const Subspace<Q>& space, const Subspace<Q>& inner, Bracket br, Quotient<Q>& q,
    BilinearTable& table)
{
    std::vector<Vec<Q>> coords;
    for (const auto& v : inner.vectors())
        coords.push_back(*space.coordinates(v));
    q = quotient(space.dim(), Subspace<Q>::span(space.dim(), coords));
    const Index qd = q.dim();
    table.assign(sz(qd * qd), zero_vec<Q>(qd));
    for (Index u = 0; u < qd; ++u)
        for (Index v = 0; v < qd; ++v) {
            const Vec<Q> x = space.combine(q.complement_basis[sz(u)]);
            const Vec<Q> y = space.combine(q.complement_basis[sz(v)]);
            table[sz(u * qd + v)] = q.to_quotient(*space.coordinates(br(x, y)));
        }
}

} // namespace

OuterQuotients outer_quotients(const Bialgebra& b)
{
    const int n = b.dim();
    const Index n2 = Index(n) * n;
    OuterQuotients out;
    out.der0 = invariant_twists(b);
    out.bialg = bialgebra_derivations(b);
    const Subspace<Q> h_eps = augmentation_ideal(b);

    std::vector<Vec<Q>> inner0;
    for (const auto& z : intersect(centre(b), h_eps).vectors())
        inner0.push_back(boundary(b, z).phi.to_dense());
    out.der0_inner = Subspace<Q>::span(n2, inner0);
    std::vector<Vec<Q>> inner_b;
    for (const auto& p : primitives(b).vectors())
        inner_b.push_back(pack(b, boundary(b, p)).head(n2));
    out.bialg_inner = Subspace<Q>::span(n2, inner_b);

    auto phi_bracket = [&](const Vec<Q>& x, const Vec<Q>& y) {
        const Tensor px = Tensor::from_dense(n, 2, x);
        const Tensor py = Tensor::from_dense(n, 2, y);
        return (-commutator(b, px, py)).to_dense();
    };
    auto d_bracket = [&](const Vec<Q>& x, const Vec<Q>& y) {
        Vec<Q> px = zero_vec<Q>(2 * n2);
        Vec<Q> py = zero_vec<Q>(2 * n2);
        px.head(n2) = x;
        py.head(n2) = y;
        const TwistedDerivation c = bracket(b, unpack(b, px), unpack(b, py));
        return Vec<Q>(pack(b, c).head(n2));
    };
    induced_quotient(out.der0, out.der0_inner, phi_bracket, out.out_der0, out.out_der0_bracket);
    induced_quotient(out.bialg, out.bialg_inner, d_bracket, out.out_bialg, out.out_bialg_bracket);

    const TwistedCrossedModule cm = crossed_module(b);
    out.separated = true;
    for (Index i = 0; i < cm.der.dim() && out.separated; ++i)
        out.separated = separate(b, unpack(b, cm.der.vector(i))).has_value();
    if (!out.separated)
        return out;

    auto class_of = [&](const Vec<Q>& packed) { return cm.inv.pi0.to_quotient(*cm.der.coordinates(packed)); };
    auto lift_phi = [&](const Vec<Q>& phi) {
        Vec<Q> v = zero_vec<Q>(2 * n2);
        v.tail(n2) = phi;
        return v;
    };
    auto lift_d = [&](const Vec<Q>& d) {
        Vec<Q> v = zero_vec<Q>(2 * n2);
        v.head(n2) = d;
        return v;
    };
    std::vector<Vec<Q>> bialg_classes;
    std::vector<Vec<Q>> der0_classes;
    for (const auto& c : out.out_bialg.complement_basis)
        bialg_classes.push_back(class_of(lift_d(out.bialg.combine(c))));
    for (const auto& c : out.out_der0.complement_basis)
        der0_classes.push_back(class_of(lift_phi(out.der0.combine(c))));
    const Index q = cm.inv.pi0_dim();
    const Index qb = out.out_bialg.dim();
    const Index q0 = out.out_der0.dim();
    out.semidirect.add("dimensions add", q == qb + q0,
        std::to_string(q) + " != " + std::to_string(qb) + " + " + std::to_string(q0));
    std::vector<Vec<Q>> all = bialg_classes;
    all.insert(all.end(), der0_classes.begin(), der0_classes.end());
    out.semidirect.add("induced map is an isomorphism", q == qb + q0 && Subspace<Q>::span(q, all).dim() == q);

    const Subspace<Q> der0_span = Subspace<Q>::span(q, der0_classes);
    const Subspace<Q> bialg_span = Subspace<Q>::span(q, bialg_classes);
    std::string w;
    for (Index i = 0; i < cm.der.dim() && w.empty(); ++i)
        for (Index j = 0; j < out.der0.dim() && w.empty(); ++j) {
            const TwistedDerivation br
                = bracket(b, unpack(b, cm.der.vector(i)), unpack(b, lift_phi(out.der0.vector(j))));
            if (!der0_span.contains(class_of(pack(b, br))))
                w = pair_witness(i, j);
        }
    out.semidirect.add("OutDer⁰ is an ideal", w.empty(), w);
    w.clear();
    for (Index i = 0; i < out.bialg.dim() && w.empty(); ++i)
        for (Index j = 0; j < out.bialg.dim() && w.empty(); ++j) {
            const TwistedDerivation br = bracket(b, unpack(b, lift_d(out.bialg.vector(i))),
                unpack(b, lift_d(out.bialg.vector(j))));
            if (!bialg_span.contains(class_of(pack(b, br))))
                w = pair_witness(i, j);
        }
    out.semidirect.add("OutDer_bialg is a subalgebra", w.empty(), w);
    return out;
}

TwistedAutomorphism identity_automorphism(const Bialgebra& b)
{
    DenseMat<Q> f = DenseMat<Q>::Constant(b.dim(), b.dim(), Q(0));
    for (int i = 0; i < b.dim(); ++i)
        f(i, i) = 1;
    return {f, unit_tensor(b, 2)};
}

std::optional<Tensor> tensor_inverse(const Bialgebra& b, const Tensor& t)
{
    const int n = t.degree();
    const Matrix<Q> m = matrix_of(b, n, n, [&](const Tensor& x) { return tensor_mult(b, t, x); });
    const auto x = solve(m, unit_tensor(b, n).to_dense());
    if (!x)
        return std::nullopt;
    Tensor inv = Tensor::from_dense(b.dim(), n, *x);
    if (tensor_mult(b, inv, t) != unit_tensor(b, n))
        return std::nullopt;
    return inv;
}

VerificationReport verify_twisted_automorphism(const Bialgebra& b, const TwistedAutomorphism& ta)
{
    const int n = b.dim();
    if (rank(from_dense(ta.f)) != n)
        throw PreconditionError("twisted automorphism: f is not invertible");
    if (!tensor_inverse(b, ta.F))
        throw PreconditionError("twisted automorphism: F is not invertible");
    VerificationReport rep;
    std::string w;
    for (int i = 0; i < n && w.empty(); ++i)
        for (int j = 0; j < n && w.empty(); ++j) {
            const Tensor ei = basis_element(b, i);
            const Tensor ej = basis_element(b, j);
            if (apply_map(ta.f, tensor_mult(b, ei, ej)) != tensor_mult(b, apply_map(ta.f, ei), apply_map(ta.f, ej)))
                w = "(" + b.basis_names()[sz(i)] + "," + b.basis_names()[sz(j)] + ")";
        }
    rep.add("f multiplicative", w.empty(), w);
    rep.add("f unital", apply_map(ta.f, unit_tensor(b, 1)) == unit_tensor(b, 1));
    w.clear();
    for (int i = 0; i < n && w.empty(); ++i) {
        const Tensor x = basis_element(b, i);
        const Tensor lhs = tensor_mult(b, ta.F, apply_delta_at(b, apply_map(ta.f, x), 0));
        const Tensor rhs = tensor_mult(b, apply_endo_all(apply_delta_at(b, x, 0), ta.f), ta.F);
        if (lhs != rhs)
            w = b.basis_names()[sz(i)];
    }
    rep.add("conj", w.empty(), w);
    const Tensor one = unit_tensor(b, 1);
    const Tensor coc = tensor_mult(b, concat(ta.F, one), apply_delta_at(b, ta.F, 0))
        - tensor_mult(b, concat(one, ta.F), apply_delta_at(b, ta.F, 1));
    rep.add("coc", coc.is_zero(), index_witness(b, coc));
    bool norm = apply_counit_at(b, ta.F, 0) == one && apply_counit_at(b, ta.F, 1) == one;
    w.clear();
    for (int i = 0; i < n && w.empty(); ++i)
        if (counit_of(b, ta.f.col(i)) != b.counit()(i))
            w = b.basis_names()[sz(i)];
    rep.add("norm", norm && w.empty(), w.empty() ? "F not normalised" : "εf(" + w + ") != ε(" + w + ")");
    return rep;
}

TwistedAutomorphism compose(const Bialgebra& b, const TwistedAutomorphism& t1, const TwistedAutomorphism& t2)
{
    return {t1.f * t2.f, tensor_mult(b, apply_endo_all(t2.F, t1.f), t1.F)};
}

VerificationReport gauge_auto(const Bialgebra& b, const TwistedAutomorphism& t1, const TwistedAutomorphism& t2,
    const Vec<Q>& a)
{
    const Tensor at = element(b, a);
    if (!tensor_inverse(b, at))
        throw PreconditionError("gauge transformation: a is not invertible");
    VerificationReport rep;
    std::string w;
    for (int i = 0; i < b.dim() && w.empty(); ++i) {
        const Tensor x = basis_element(b, i);
        if (tensor_mult(b, at, apply_map(t1.f, x)) != tensor_mult(b, apply_map(t2.f, x), at))
            w = b.basis_names()[sz(i)];
    }
    rep.add("comgt", w.empty(), w);
    const Tensor lhs = tensor_mult(b, t2.F, apply_delta_at(b, at, 0));
    const Tensor rhs = tensor_mult(b, concat(at, at), t1.F);
    rep.add("mongt", lhs == rhs, index_witness(b, lhs - rhs));
    return rep;
}

Tensor leg12(const Bialgebra& b, const Tensor& r) { return concat(r, unit_tensor(b, 1)); }
Tensor leg23(const Bialgebra& b, const Tensor& r) { return concat(unit_tensor(b, 1), r); }
Tensor leg13(const Bialgebra& b, const Tensor& r)
{
    const std::array<int, 3> perm = {0, 2, 1};
    return permute(leg12(b, r), perm);
}

namespace {

// Residual of Δ(x)r - r·tΔ(x) over basis x, indexed (x, a, b).
Tensor conj_flip_residual(const Bialgebra& b, const Tensor& r)
{
    const int n = b.dim();
    Tensor out(n, 3);
    for (int i = 0; i < n; ++i) {
        const Tensor dx = apply_delta_at(b, basis_element(b, i), 0);
        const Tensor res = tensor_mult(b, dx, r) - tensor_mult(b, r, flip(dx));
        for (const auto& [k, c] : res.terms())
            out.add(static_cast<TensorIndex>(i) * power(n, 2) + k, c);
    }
    return out;
}

// Linearised triangle equations at R, evaluated on r.
std::array<Tensor, 2> tangent_triangle(const Bialgebra& b, const Tensor& R, const Tensor& r, TriangleForm form)
{
    const Tensor r12 = leg12(b, r), r13 = leg13(b, r), r23 = leg23(b, r);
    const Tensor R12 = leg12(b, R), R13 = leg13(b, R), R23 = leg23(b, R);
    const Tensor a = tensor_mult(b, r12, R13) + tensor_mult(b, R12, r13);
    const Tensor c = tensor_mult(b, r23, R13) + tensor_mult(b, R23, r13);
    const Tensor left = apply_delta_at(b, r, 1);  // (I⊗Δ)r
    const Tensor right = apply_delta_at(b, r, 0); // (Δ⊗I)r
    if (form == TriangleForm::Consistent)
        return {left - a, right - c};
    return {left - c, right - a};
}

Tensor stabilizer_residual(const Bialgebra& b, const Tensor& R, const TwistedDerivation& t, StabilizerForm form)
{
    if (form == StabilizerForm::FromAction)
        return inf_twist_action(b, t, R);
    return apply_derivation(R, t.d) - tensor_mult(b, flip(t.phi), R) + tensor_mult(b, R, t.phi);
}

void require_invertible(const Bialgebra& b, const Tensor& R)
{
    if (R.degree() != 2)
        throw PreconditionError("R-matrix must have degree 2");
    if (!tensor_inverse(b, R))
        throw PreconditionError("R-matrix is not invertible");
}

} // namespace

VerificationReport r_matrix_verify(const Bialgebra& b, const Tensor& R, TriangleForm form)
{
    require_invertible(b, R);
    VerificationReport rep;
    std::string w;
    for (int i = 0; i < b.dim() && w.empty(); ++i) {
        const Tensor dx = apply_delta_at(b, basis_element(b, i), 0);
        if (tensor_mult(b, R, flip(dx)) != tensor_mult(b, dx, R))
            w = b.basis_names()[sz(i)];
    }
    rep.add("conjr", w.empty(), w);
    const Tensor R12 = leg12(b, R), R13 = leg13(b, R), R23 = leg23(b, R);
    const Tensor left_target = form == TriangleForm::Consistent ? tensor_mult(b, R12, R13) : tensor_mult(b, R23, R13);
    const Tensor right_target = form == TriangleForm::Consistent ? tensor_mult(b, R23, R13) : tensor_mult(b, R12, R13);
    const Tensor lres = apply_delta_at(b, R, 1) - left_target;
    const Tensor rres = apply_delta_at(b, R, 0) - right_target;
    rep.add("treq (I⊗Δ)", lres.is_zero(), index_witness(b, lres));
    rep.add("treq (Δ⊗I)", rres.is_zero(), index_witness(b, rres));
    return rep;
}

Subspace<Q> tangent_r_space(const Bialgebra& b, const Tensor& R, TriangleForm form)
{
    const int n = b.dim();
    const Index n2 = Index(n) * n;
    const Index n3 = n2 * n;
    const Matrix<Q> m = from_columns<Q>(3 * n3, n2, [&](Index j) {
        const Tensor r = Tensor::from_dense(n, 2, unit_vec<Q>(n2, j));
        SparseRow<Q> row;
        Index offset = 0;
        for (const auto& t : tangent_triangle(b, R, r, form))
            append_tensor(row, offset, t);
        append_tensor(row, offset, conj_flip_residual(b, r));
        return row;
    });
    return kernel_basis(m);
}

Tensor inf_twist_action(const Bialgebra& b, const TwistedDerivation& t, const Tensor& r)
{
    return apply_derivation(r, t.d) - tensor_mult(b, t.phi, r) + tensor_mult(b, r, flip(t.phi));
}

Subspace<Q> stabilizer_der(const Bialgebra& b, const Tensor& R, StabilizerForm form)
{
    const Subspace<Q> der = twisted_derivation_space(b);
    const Matrix<Q> m = from_columns<Q>(static_cast<Index>(power(b.dim(), 2)), der.dim(),
        [&](Index j) { return stabilizer_residual(b, R, unpack(b, der.vector(j)), form).to_sparse(); });
    std::vector<Vec<Q>> out;
    for (const auto& c : kernel_basis(m).vectors())
        out.push_back(der.combine(c));
    return Subspace<Q>::span(packed_size(b), out);
}

VerificationReport r_module_check(const Bialgebra& b, const Tensor& R, TriangleForm form, StabilizerForm stab)
{
    const int n = b.dim();
    const Subspace<Q> st = stabilizer_der(b, R, stab);
    const Subspace<Q> tan = tangent_r_space(b, R, form);
    const Subspace<Q> h_eps = augmentation_ideal(b);
    auto tangent = [&](Index i) { return Tensor::from_dense(n, 2, tan.vector(i)); };
    auto stab_el = [&](Index i) { return unpack(b, st.vector(i)); };
    VerificationReport rep;

    std::string w;
    for (Index i = 0; i < st.dim() && w.empty(); ++i)
        for (Index j = 0; j < tan.dim() && w.empty(); ++j)
            if (!tan.contains(inf_twist_action(b, stab_el(i), tangent(j)).to_dense()))
                w = pair_witness(i, j);
    rep.add("stabilizer preserves tangent space", w.empty(), w);

    w.clear();
    for (Index i = 0; i < st.dim() && w.empty(); ++i)
        for (Index k = 0; k < st.dim() && w.empty(); ++k)
            for (Index j = 0; j < tan.dim() && w.empty(); ++j) {
                const TwistedDerivation t1 = stab_el(i);
                const TwistedDerivation t2 = stab_el(k);
                const Tensor r = tangent(j);
                const Tensor lhs = inf_twist_action(b, bracket(b, t1, t2), r);
                const Tensor rhs = inf_twist_action(b, t1, inf_twist_action(b, t2, r))
                    - inf_twist_action(b, t2, inf_twist_action(b, t1, r));
                if (lhs != rhs)
                    w = "(" + std::to_string(i) + "," + std::to_string(k) + "," + std::to_string(j) + ")";
            }
    rep.add("module axiom", w.empty(), w);

    w.clear();
    for (Index i = 0; i < h_eps.dim() && w.empty(); ++i)
        for (Index j = 0; j < tan.dim() && w.empty(); ++j)
            if (!inf_twist_action(b, boundary(b, h_eps.vector(i)), tangent(j)).is_zero())
                w = pair_witness(i, j);
    rep.add("inner derivations act trivially", w.empty(), w);

    w.clear();
    for (Index i = 0; i < h_eps.dim() && w.empty(); ++i)
        if (!st.contains(pack(b, boundary(b, h_eps.vector(i)))))
            w = std::to_string(i);
    rep.add("inner derivations stabilize R", w.empty(), w);
    return rep;
}

} // namespace twd
