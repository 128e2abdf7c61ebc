#include "twd/catalog.hpp"

#include <array>
#include <map>

namespace twd::catalog {

Bialgebra h4_sweedler()
{
    // 0 = 1, 1 = g, 2 = x, 3 = gx.
    const std::vector<StructureConstant> mult = {
        {0, 0, 0, Q(1)}, {0, 1, 1, Q(1)}, {0, 2, 2, Q(1)}, {0, 3, 3, Q(1)},
        {1, 0, 1, Q(1)}, {1, 1, 0, Q(1)}, {1, 2, 3, Q(1)}, {1, 3, 2, Q(1)},
        {2, 0, 2, Q(1)}, {2, 1, 3, Q(-1)},
        {3, 0, 3, Q(1)}, {3, 1, 2, Q(-1)},
    };
    const std::vector<StructureConstant> comult = {
        {0, 0, 0, Q(1)},
        {1, 1, 1, Q(1)},
        {2, 0, 2, Q(1)}, {2, 2, 1, Q(1)},
        {3, 1, 3, Q(1)}, {3, 3, 0, Q(1)},
    };
    Vec<Q> unit = unit_vec<Q>(4, 0);
    Vec<Q> counit = zero_vec<Q>(4);
    counit(0) = 1;
    counit(1) = 1;
    DenseMat<Q> s = DenseMat<Q>::Constant(4, 4, Q(0));
    s(0, 0) = 1;
    s(1, 1) = 1;
    s(3, 2) = 1;  // S(x) = gx
    s(2, 3) = -1; // S(gx) = -x
    Bialgebra b("h4_sweedler", {"1", "g", "x", "gx"}, mult, unit, comult, counit, s);
    b.set_description("Sweedler's Hopf algebra: g^2 = 1, x^2 = 0, gx + xg = 0, Δg = g⊗g, Δx = 1⊗x + x⊗g");
    return b;
}

Tensor h4_twist(const Q& a)
{
    Tensor t = Tensor::basis(4, {0, 0});
    t.add(MultiIndex{2, 3}, a);
    return t;
}

DenseMat<Q> h4_scaling(const Q& c)
{
    DenseMat<Q> f = DenseMat<Q>::Constant(4, 4, Q(0));
    f(0, 0) = 1;
    f(1, 1) = 1;
    f(2, 2) = c;
    f(3, 3) = c;
    return f;
}

namespace {

Tensor sign_bicharacter(int dim)
{
    const Q h = Q(1) / Q(2);
    Tensor t(dim, 2);
    t.add(MultiIndex{0, 0}, h);
    t.add(MultiIndex{0, 1}, h);
    t.add(MultiIndex{1, 0}, h);
    t.add(MultiIndex{1, 1}, -h);
    return t;
}

} // namespace

Tensor h4_r_matrix(const Q& alpha)
{
    Tensor r = sign_bicharacter(4);
    const Q h = alpha / Q(2);
    r.add(MultiIndex{2, 2}, h);
    r.add(MultiIndex{3, 2}, h);
    r.add(MultiIndex{3, 3}, h);
    r.add(MultiIndex{2, 3}, -h);
    return r;
}

Tensor z2_r_matrix() { return sign_bicharacter(2); }

Bialgebra group_algebra(std::string name, std::vector<std::string> names, const std::vector<std::vector<int>>& table)
{
    const int n = static_cast<int>(names.size());
    if (static_cast<int>(table.size()) != n)
        throw FormatError("group table has wrong size");
    std::vector<StructureConstant> mult;
    std::vector<StructureConstant> comult;
    DenseMat<Q> s = DenseMat<Q>::Constant(n, n, Q(0));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[static_cast<std::size_t>(i)].size()) != n)
            throw FormatError("group table row has wrong size");
        for (int j = 0; j < n; ++j) {
            const int k = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            mult.push_back({i, j, k, Q(1)});
            if (k == 0)
                s(j, i) = 1;
        }
        comult.push_back({i, i, i, Q(1)});
    }
    Bialgebra b(std::move(name), std::move(names), mult, unit_vec<Q>(n, 0), comult, Vec<Q>::Constant(n, Q(1)), s);
    return b;
}

Bialgebra cyclic_group(int n)
{
    std::vector<std::string> names;
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        names.push_back(i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i));
        for (int j = 0; j < n; ++j)
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
    }
    Bialgebra b = group_algebra("group_Z" + std::to_string(n), names, table);
    b.set_description("group algebra of the cyclic group of order " + std::to_string(n));
    return b;
}

Bialgebra symmetric_group_3()
{
    using Perm = std::array<int, 3>;
    const std::vector<Perm> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    const std::vector<std::string> names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
    std::map<Perm, int> index;
    for (std::size_t i = 0; i < perms.size(); ++i)
        index[perms[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            Perm c{};
            for (std::size_t p = 0; p < 3; ++p)
                c[p] = perms[i][static_cast<std::size_t>(perms[j][p])];
            table[i][j] = index.at(c);
        }
    Bialgebra b = group_algebra("group_S3", names, table);
    b.set_description("group algebra of the symmetric group on three letters");
    return b;
}

const std::vector<std::string>& bialgebra_names()
{
    static const std::vector<std::string> names = {"h4_sweedler", "group_Z2", "group_Z3", "group_S3"};
    return names;
}

Bialgebra bialgebra(const std::string& name)
{
    if (name == "h4_sweedler")
        return h4_sweedler();
    if (name == "group_Z2")
        return cyclic_group(2);
    if (name == "group_Z3")
        return cyclic_group(3);
    if (name == "group_S3")
        return symmetric_group_3();
    throw FormatError("unknown catalog bialgebra '" + name + "'");
}

namespace {

// Adds [e_i,e_j] = c e_k together with [e_j,e_i] = -c e_k.
void antisym(std::vector<StructureConstant>& sc, int i, int j, int k, long c)
{
    sc.push_back({i, j, k, Q(c)});
    sc.push_back({j, i, k, Q(-c)});
}

} // namespace

LieAlgebra lie_ab2()
{
    LieAlgebra g("lie_ab2", {"x", "y"}, {});
    g.set_description("abelian 2-dimensional Lie algebra");
    return g;
}

LieAlgebra lie_heis3()
{
    std::vector<StructureConstant> sc;
    antisym(sc, 0, 1, 2, 1);
    LieAlgebra g("lie_heis3", {"x", "y", "z"}, sc);
    g.set_description("Heisenberg algebra, [x,y] = z");
    return g;
}

LieAlgebra lie_sl2()
{
    std::vector<StructureConstant> sc;
    antisym(sc, 0, 2, 1, 1);
    antisym(sc, 1, 0, 0, 2);
    antisym(sc, 1, 2, 2, -2);
    LieAlgebra g("lie_sl2", {"e", "h", "f"}, sc);
    g.set_description("sl2, [e,f] = h, [h,e] = 2e, [h,f] = -2f");
    return g;
}

LieAlgebra lie_nonab2()
{
    std::vector<StructureConstant> sc;
    antisym(sc, 0, 1, 1, 1);
    LieAlgebra g("lie_nonab2", {"a", "b"}, sc);
    g.set_description("non-abelian 2-dimensional Lie algebra, [a,b] = b");
    return g;
}

const std::vector<std::string>& lie_names()
{
    static const std::vector<std::string> names = {"lie_ab2", "lie_heis3", "lie_sl2", "lie_nonab2"};
    return names;
}

LieAlgebra lie_algebra(const std::string& name)
{
    if (name == "lie_ab2")
        return lie_ab2();
    if (name == "lie_heis3")
        return lie_heis3();
    if (name == "lie_sl2")
        return lie_sl2();
    if (name == "lie_nonab2")
        return lie_nonab2();
    throw FormatError("unknown catalog Lie algebra '" + name + "'");
}

} // namespace twd::catalog
