#include "twd/crossed_module.hpp"

#include <string>

namespace twd {

namespace {

std::string pair_witness(Index i, Index j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::string triple_witness(Index i, Index j, Index k)
{
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

} // namespace

Vec<Q> eval_bilinear(const BilinearTable& t, Index dim, const Vec<Q>& u, const Vec<Q>& v, Index out_dim)
{
    Vec<Q> out = zero_vec<Q>(out_dim);
    for (Index i = 0; i < dim; ++i) {
        if (u(i) == 0)
            continue;
        for (Index j = 0; j < dim; ++j)
            if (v(j) != 0)
                out += (u(i) * v(j)) * t[static_cast<std::size_t>(i * dim + j)];
    }
    return out;
}

Vec<Q> eval_trilinear(const TrilinearTable& t, Index dim, const Vec<Q>& u, const Vec<Q>& v, const Vec<Q>& w,
    Index out_dim)
{
    Vec<Q> out = zero_vec<Q>(out_dim);
    for (Index i = 0; i < dim; ++i) {
        if (u(i) == 0)
            continue;
        for (Index j = 0; j < dim; ++j) {
            if (v(j) == 0)
                continue;
            for (Index k = 0; k < dim; ++k)
                if (w(k) != 0)
                    out += (u(i) * v(j) * w(k)) * t[static_cast<std::size_t>((i * dim + j) * dim + k)];
        }
    }
    return out;
}

CrossedModuleInvariants analyze_crossed_module(const LieCrossedModuleData& cm)
{
    const Index pd = cm.p_dim;
    const Index nd = cm.n_dim;
    CrossedModuleInvariants out;
    VerificationReport& rep = out.report;
    auto p_unit = [&](Index i) { return unit_vec<Q>(pd, i); };
    auto n_unit = [&](Index i) { return unit_vec<Q>(nd, i); };
    auto bd = [&](const Vec<Q>& n) { return apply(cm.boundary, n); };

    {
        std::string w;
        for (Index i = 0; i < nd && w.empty(); ++i)
            for (Index j = 0; j < nd && w.empty(); ++j)
                if (bd(cm.n_bracket(n_unit(i), n_unit(j))) != cm.p_bracket(bd(n_unit(i)), bd(n_unit(j))))
                    w = pair_witness(i, j);
        rep.add("∂ Lie homomorphism", w.empty(), w);
    }
    {
        std::string w;
        for (Index p = 0; p < pd && w.empty(); ++p)
            for (Index n = 0; n < nd && w.empty(); ++n)
                if (bd(cm.action(p_unit(p), n_unit(n))) != cm.p_bracket(p_unit(p), bd(n_unit(n))))
                    w = pair_witness(p, n);
        rep.add("∂(p·n) = [p,∂n]", w.empty(), w);
    }
    {
        std::string w;
        for (Index n = 0; n < nd && w.empty(); ++n)
            for (Index m = 0; m < nd && w.empty(); ++m)
                if (cm.action(bd(n_unit(n)), n_unit(m)) != cm.n_bracket(n_unit(n), n_unit(m)))
                    w = pair_witness(n, m);
        rep.add("∂(n)·m = [n,m]", w.empty(), w);
    }
    {
        std::string w;
        for (Index p = 0; p < pd && w.empty(); ++p)
            for (Index q = 0; q < pd && w.empty(); ++q)
                for (Index n = 0; n < nd && w.empty(); ++n) {
                    const Vec<Q> lhs = cm.action(cm.p_bracket(p_unit(p), p_unit(q)), n_unit(n));
                    const Vec<Q> rhs = cm.action(p_unit(p), cm.action(p_unit(q), n_unit(n)))
                        - cm.action(p_unit(q), cm.action(p_unit(p), n_unit(n)));
                    if (lhs != rhs)
                        w = triple_witness(p, q, n);
                }
        rep.add("action is a Lie action", w.empty(), w);
    }
    {
        std::string w;
        for (Index p = 0; p < pd && w.empty(); ++p)
            for (Index n = 0; n < nd && w.empty(); ++n)
                for (Index m = 0; m < nd && w.empty(); ++m) {
                    const Vec<Q> lhs = cm.action(p_unit(p), cm.n_bracket(n_unit(n), n_unit(m)));
                    const Vec<Q> rhs = cm.n_bracket(cm.action(p_unit(p), n_unit(n)), n_unit(m))
                        + cm.n_bracket(n_unit(n), cm.action(p_unit(p), n_unit(m)));
                    if (lhs != rhs)
                        w = triple_witness(p, n, m);
                }
        rep.add("action by derivations", w.empty(), w);
    }

    out.boundary_image = image(cm.boundary);
    out.pi0 = quotient(pd, out.boundary_image);
    out.pi1 = kernel_basis(cm.boundary);
    {
        std::string w;
        for (Index p = 0; p < pd && w.empty(); ++p)
            for (Index i = 0; i < out.boundary_image.dim() && w.empty(); ++i)
                if (!out.boundary_image.contains(cm.p_bracket(p_unit(p), out.boundary_image.vector(i))))
                    w = pair_witness(p, i);
        rep.add("image of ∂ is an ideal", w.empty(), w);
    }

    const Index q = out.pi0.dim();
    out.section = DenseMat<Q>::Constant(pd, q, Q(0));
    for (Index u = 0; u < q; ++u)
        out.section.col(u) = out.pi0.complement_basis[static_cast<std::size_t>(u)];
    auto sigma = [&](const Vec<Q>& u) -> Vec<Q> { return out.section * u; };
    auto q_unit = [&](Index i) { return unit_vec<Q>(q, i); };

    out.pi0_bracket.assign(static_cast<std::size_t>(q * q), zero_vec<Q>(q));
    for (Index u = 0; u < q; ++u)
        for (Index v = 0; v < q; ++v)
            out.pi0_bracket[static_cast<std::size_t>(u * q + v)]
                = out.pi0.to_quotient(cm.p_bracket(sigma(q_unit(u)), sigma(q_unit(v))));
    auto qbr = [&](const Vec<Q>& u, const Vec<Q>& v) { return eval_bilinear(out.pi0_bracket, q, u, v, q); };

    {
        std::string w;
        for (Index u = 0; u < q && w.empty(); ++u)
            for (Index v = 0; v < q && w.empty(); ++v)
                for (Index i = 0; i < out.boundary_image.dim() && w.empty(); ++i) {
                    const Vec<Q> shifted = sigma(q_unit(u)) + out.boundary_image.vector(i);
                    const Vec<Q> other = out.pi0.to_quotient(cm.p_bracket(shifted, sigma(q_unit(v))));
                    if (other != out.pi0_bracket[static_cast<std::size_t>(u * q + v)])
                        w = triple_witness(u, v, i);
                }
        rep.add("π0 bracket well-defined", w.empty(), w);
    }

    out.correction.assign(static_cast<std::size_t>(q * q), zero_vec<Q>(nd));
    {
        std::string w;
        for (Index u = 0; u < q; ++u)
            for (Index v = u + 1; v < q; ++v) {
                const Vec<Q> target = cm.p_bracket(sigma(q_unit(u)), sigma(q_unit(v)))
                    - sigma(out.pi0_bracket[static_cast<std::size_t>(u * q + v)]);
                const auto a = solve(cm.boundary, target);
                if (!a) {
                    if (w.empty())
                        w = pair_witness(u, v);
                    continue;
                }
                out.correction[static_cast<std::size_t>(u * q + v)] = *a;
                out.correction[static_cast<std::size_t>(v * q + u)] = -*a;
            }
        rep.add("correction solvable", w.empty(), w);
    }
    auto corr = [&](const Vec<Q>& u, const Vec<Q>& v) { return eval_bilinear(out.correction, q, u, v, nd); };

    out.jacobiator.assign(static_cast<std::size_t>(q * q * q), zero_vec<Q>(nd));
    for (Index i = 0; i < q; ++i)
        for (Index j = 0; j < q; ++j)
            for (Index k = 0; k < q; ++k) {
                const Vec<Q> u = q_unit(i);
                const Vec<Q> v = q_unit(j);
                const Vec<Q> x = q_unit(k);
                const Vec<Q> val = cm.action(sigma(u), corr(v, x)) - cm.action(sigma(v), corr(u, x))
                    + cm.action(sigma(x), corr(u, v)) - corr(qbr(u, v), x) + corr(qbr(u, x), v) - corr(qbr(v, x), u);
                out.jacobiator[static_cast<std::size_t>((i * q + j) * q + k)] = val;
            }
    auto jac = [&](const Vec<Q>& u, const Vec<Q>& v, const Vec<Q>& x) {
        return eval_trilinear(out.jacobiator, q, u, v, x, nd);
    };

    {
        std::string w;
        for (Index i = 0; i < q && w.empty(); ++i)
            for (Index j = 0; j < q && w.empty(); ++j)
                for (Index k = 0; k < q && w.empty(); ++k)
                    if (!out.pi1.contains(out.jacobiator[static_cast<std::size_t>((i * q + j) * q + k)]))
                        w = triple_witness(i, j, k);
        rep.add("Jacobiator in π1", w.empty(), w);
    }
    {
        std::string w;
        for (Index a = 0; a < q && w.empty(); ++a)
            for (Index b = a + 1; b < q && w.empty(); ++b)
                for (Index c = b + 1; c < q && w.empty(); ++c)
                    for (Index d = c + 1; d < q && w.empty(); ++d) {
                        const std::vector<Vec<Q>> us = {q_unit(a), q_unit(b), q_unit(c), q_unit(d)};
                        Vec<Q> total = zero_vec<Q>(nd);
                        for (int r = 0; r < 4; ++r) {
                            std::vector<Vec<Q>> rest;
                            for (int s = 0; s < 4; ++s)
                                if (s != r)
                                    rest.push_back(us[static_cast<std::size_t>(s)]);
                            const Vec<Q> term = cm.action(sigma(us[static_cast<std::size_t>(r)]), jac(rest[0], rest[1], rest[2]));
                            total += (r % 2 == 0 ? Q(1) : Q(-1)) * term;
                        }
                        for (int r = 0; r < 4; ++r)
                            for (int s = r + 1; s < 4; ++s) {
                                std::vector<Vec<Q>> rest;
                                for (int t = 0; t < 4; ++t)
                                    if (t != r && t != s)
                                        rest.push_back(us[static_cast<std::size_t>(t)]);
                                const Vec<Q> br = qbr(us[static_cast<std::size_t>(r)], us[static_cast<std::size_t>(s)]);
                                total += ((r + s) % 2 == 0 ? Q(1) : Q(-1)) * jac(br, rest[0], rest[1]);
                            }
                        if (!is_zero(total))
                            w = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ","
                                + std::to_string(d) + ")";
                    }
        rep.add("Jacobiator 3-cocycle", w.empty(), w);
    }
    return out;
}

} // namespace twd
