#include "twd/ug.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace twd {

namespace {

using Key = std::vector<Word>;
using WordCombination = std::map<Word, Q>;

void add_to(WordCombination& acc, const Word& w, const Q& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = acc.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            acc.erase(it);
    }
}

int total_length(const Key& k)
{
    int s = 0;
    for (const auto& w : k)
        s += static_cast<int>(w.size());
    return s;
}

// Expands the product over slots of the given word combinations into out.
void expand_slots(const std::vector<WordCombination>& slots, const Q& c, UTensor& out)
{
    Key key(slots.size());
    std::function<void(std::size_t, const Q&)> rec = [&](std::size_t s, const Q& acc) {
        if (s == slots.size()) {
            out.add(key, acc);
            return;
        }
        for (const auto& [w, a] : slots[s]) {
            key[s] = w;
            rec(s + 1, acc * a);
        }
    };
    rec(0, c);
}

class Normalizer {
public:
    explicit Normalizer(const LieAlgebra& g)
        : g_(g)
    {
    }

    const WordCombination& normal(const Word& w)
    {
        if (auto it = memo_.find(w); it != memo_.end())
            return it->second;
        WordCombination result;
        std::size_t i = 0;
        while (i + 1 < w.size() && w[i] <= w[i + 1])
            ++i;
        if (i + 1 >= w.size()) {
            result[w] = Q(1);
        } else {
            Word swapped = w;
            std::swap(swapped[i], swapped[i + 1]);
            for (const auto& [u, c] : normal(swapped))
                add_to(result, u, c);
            for (const auto& t : g_.bracket(w[i], w[i + 1])) {
                Word shorter(w.begin(), w.begin() + static_cast<long>(i));
                shorter.push_back(t.k);
                shorter.insert(shorter.end(), w.begin() + static_cast<long>(i) + 2, w.end());
                for (const auto& [u, c] : normal(shorter))
                    add_to(result, u, c * t.c);
            }
        }
        return memo_.emplace(w, std::move(result)).first->second;
    }

private:
    const LieAlgebra& g_;
    std::map<Word, WordCombination> memo_;
};

std::string index_witness(const UTensor& t, const std::vector<std::string>& names)
{
    if (t.is_zero())
        return {};
    const auto& [k, c] = *t.terms.begin();
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i)
        s += (i ? "," : "") + format_word(k[i], names);
    return s + ")";
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

std::vector<Word> monomials(int dim, int m)
{
    std::vector<Word> out;
    Word cur;
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(cur);
            return;
        }
        for (int i = lo; i < dim; ++i) {
            cur.push_back(i);
            rec(i);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

// Basis of the total-degree-m piece of S(g)^{⊗n}.
struct Piece {
    std::vector<Key> keys;
    std::map<Key, Index> index;

    Index size() const { return static_cast<Index>(keys.size()); }

    Vec<Q> coords(const UTensor& t, int m) const
    {
        Vec<Q> v = zero_vec<Q>(size());
        for (const auto& [k, c] : t.terms)
            if (total_length(k) == m)
                v(index.at(k)) = c;
        return v;
    }

    UTensor element(int n, const Vec<Q>& v) const
    {
        UTensor t(n);
        for (Index i = 0; i < v.size(); ++i)
            if (v(i) != 0)
                t.add(keys[static_cast<std::size_t>(i)], v(i));
        return t;
    }
};

Piece make_piece(const std::vector<std::vector<Word>>& comps, int n, int m)
{
    Piece p;
    Key key(static_cast<std::size_t>(n));
    std::function<void(int, int)> rec = [&](int slot, int left) {
        if (slot == n) {
            if (left == 0) {
                p.index.emplace(key, p.size());
                p.keys.push_back(key);
            }
            return;
        }
        for (int part = 0; part <= left; ++part)
            for (const auto& w : comps[static_cast<std::size_t>(part)]) {
                key[static_cast<std::size_t>(slot)] = w;
                rec(slot + 1, left - part);
            }
    };
    rec(0, m);
    return p;
}

Matrix<Q> piece_differential(const Piece& src, const Piece& dst, int n, int m)
{
    const SymOps ops;
    return from_columns<Q>(dst.size(), src.size(), [&](Index j) {
        UTensor x(n);
        x.add(src.keys[static_cast<std::size_t>(j)], Q(1));
        return sparse_of(dst.coords(coboundary_of(ops, x), m));
    });
}

// Adjoint action of e_x on S(g)^{⊗n}, as a derivation in every letter.
UTensor s_ad(const LieAlgebra& g, int x, const UTensor& t)
{
    UTensor out(t.degree);
    for (const auto& [key, c] : t.terms)
        for (std::size_t s = 0; s < key.size(); ++s)
            for (std::size_t p = 0; p < key[s].size(); ++p)
                for (const auto& b : g.bracket(x, key[s][p])) {
                    Key k = key;
                    k[s][p] = b.k;
                    std::sort(k[s].begin(), k[s].end());
                    out.add(k, c * b.c);
                }
    return out;
}

Subspace<Q> invariant_piece(const LieAlgebra& g, const Piece& p, int n, int m)
{
    std::vector<Matrix<Q>> blocks;
    for (int x = 0; x < g.dim(); ++x)
        blocks.push_back(from_columns<Q>(p.size(), p.size(), [&](Index j) {
            UTensor e(n);
            e.add(p.keys[static_cast<std::size_t>(j)], Q(1));
            return sparse_of(p.coords(s_ad(g, x, e), m));
        }));
    if (blocks.empty() || p.size() == 0)
        return Subspace<Q>::whole(p.size());
    return kernel_basis(vstack(blocks));
}

// Differential restricted to subspaces (coordinates in their echelon bases).
Matrix<Q> restrict_differential(const Matrix<Q>& d, const Subspace<Q>& src, const Subspace<Q>& dst)
{
    return from_columns<Q>(dst.dim(), src.dim(), [&](Index j) {
        const auto c = dst.coordinates(apply(d, src.vector(j)));
        if (!c)
            throw std::logic_error("differential leaves the invariant subcomplex");
        return sparse_of(*c);
    });
}

GradedCohomology graded_impl(const LieAlgebra& g, int N, int n, bool invariant)
{
    if (n < 0)
        throw PreconditionError("graded cohomology: negative degree");
    if (n > N)
        throw PreconditionError("graded cohomology: degree " + std::to_string(n) + " exceeds truncation " + std::to_string(N));
    const GradedCoalgebra s = sym_coalgebra(g, N);
    const int dim = g.dim();
    GradedCohomology out;
    out.n = n;
    out.N = N;
    out.invariant = invariant;
    const Subspace<Q> target = invariant ? exterior_invariants(g, n) : Subspace<Q>::whole(binom(dim, n));
    out.expected = target.dim();

    bool concentrated = true;
    std::string conc_w;
    bool represents = true;
    std::string rep_w;
    for (int m = 0; m <= N; ++m) {
        const Piece cur = make_piece(s.components, n, m);
        const Piece next = make_piece(s.components, n + 1, m);
        const Matrix<Q> d_out = piece_differential(cur, next, n, m);
        Matrix<Q> d_in(cur.size(), 0);
        if (n > 0)
            d_in = piece_differential(make_piece(s.components, n - 1, m), cur, n - 1, m);

        GradedPiece gp;
        gp.m = m;
        gp.cochain_dim = cur.size();
        LinearCohomology lc;
        std::vector<Vec<Q>> reps;
        std::optional<Subspace<Q>> kcur;
        if (invariant) {
            kcur = invariant_piece(g, cur, n, m);
            const Subspace<Q> knext = invariant_piece(g, next, n + 1, m);
            Matrix<Q> kin(kcur->dim(), 0);
            if (n > 0) {
                const Piece prev = make_piece(s.components, n - 1, m);
                kin = restrict_differential(d_in, invariant_piece(g, prev, n - 1, m), *kcur);
            }
            lc = linear_cohomology(kin, restrict_differential(d_out, *kcur, knext));
            for (const auto& r : lc.representatives)
                reps.push_back(kcur->combine(r));
            gp.cochain_dim = kcur->dim();
        } else {
            lc = linear_cohomology(d_in, d_out);
            reps = lc.representatives;
        }
        gp.dim = lc.dim;
        gp.cocycle_dim = lc.cocycle_dim;
        gp.coboundary_dim = lc.coboundary_dim;
        out.dim += gp.dim;
        out.pieces.push_back(gp);

        const bool expected_here = (m == n);
        if (!expected_here && gp.dim != 0 && concentrated) {
            concentrated = false;
            conc_w = "m=" + std::to_string(m) + " dim " + std::to_string(gp.dim);
        }
        for (const auto& r : reps)
            out.representatives.push_back(cur.element(n, r));

        if (expected_here) {
            // ι(Λⁿg) together with the coboundaries must fill the cocycles.
            std::vector<Vec<Q>> iota;
            for (const auto& w : target.vectors()) {
                Vec<Q> v = cur.coords(wedge_to_u(dim, n, w), m);
                if (invariant)
                    v = *kcur->coordinates(v);
                iota.push_back(std::move(v));
            }
            const Index amb = invariant ? kcur->dim() : cur.size();
            bool in_cocycles = true;
            for (const auto& v : iota)
                in_cocycles = in_cocycles && lc.cocycles.contains(v);
            const Subspace<Q> spanned = sum(lc.coboundaries, Subspace<Q>::span(amb, iota));
            if (!in_cocycles || spanned.dim() != lc.cocycle_dim
                || spanned.dim() - lc.coboundary_dim != static_cast<Index>(iota.size())) {
                represents = false;
                rep_w = in_cocycles ? "span " + std::to_string(spanned.dim() - lc.coboundary_dim) + " of "
                        + std::to_string(lc.dim)
                                    : "ι(ω) not a cocycle";
            }
        }
    }
    const auto basis = exterior_basis(dim, n);
    for (const auto& r : out.representatives) {
        const UTensor alt = u_alternate(r);
        Vec<Q> w = zero_vec<Q>(static_cast<Index>(basis.size()));
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Key k;
            for (int a : basis[i])
                k.push_back(Word{a});
            w(static_cast<Index>(i)) = alt.coeff(k);
        }
        out.alt_images.push_back(std::move(w));
    }
    const Subspace<Q> alt_span = Subspace<Q>::span(static_cast<Index>(basis.size()), out.alt_images);

    out.report.add("dimension matches", out.dim == out.expected,
        std::to_string(out.dim) + " vs " + std::to_string(out.expected));
    out.report.add("Λⁿg represents every class", represents, rep_w);
    out.report.add("Alt_n onto", alt_span == target,
        "rank " + std::to_string(alt_span.dim()) + " vs " + std::to_string(target.dim()));
    out.report.add("concentrated in total degree n", concentrated, conc_w);
    return out;
}

} // namespace

void UTensor::add(const std::vector<Word>& key, const Q& c)
{
    if (c == 0)
        return;
    if (static_cast<int>(key.size()) != degree)
        throw std::logic_error("UTensor: key length does not match degree");
    auto [it, inserted] = terms.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

Q UTensor::coeff(const std::vector<Word>& key) const
{
    auto it = terms.find(key);
    return it == terms.end() ? Q(0) : it->second;
}

UTensor& UTensor::operator+=(const UTensor& o)
{
    if (o.degree != degree && !o.is_zero())
        throw std::logic_error("UTensor: degree mismatch");
    for (const auto& [k, c] : o.terms)
        add(k, c);
    return *this;
}

UTensor& UTensor::operator-=(const UTensor& o)
{
    if (o.degree != degree && !o.is_zero())
        throw std::logic_error("UTensor: degree mismatch");
    for (const auto& [k, c] : o.terms)
        add(k, -c);
    return *this;
}

UTensor& UTensor::operator*=(const Q& c)
{
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [k, v] : terms)
        v *= c;
    return *this;
}

int filtration_degree(const UTensor& t)
{
    int d = 0;
    for (const auto& [k, c] : t.terms)
        d = std::max(d, total_length(k));
    return d;
}

UTensor u_generator(const Vec<Q>& x)
{
    UTensor t(1);
    for (Index i = 0; i < x.size(); ++i)
        t.add({Word{static_cast<int>(i)}}, x(i));
    return t;
}

UTensor u_unit(int k)
{
    UTensor t(k);
    t.add(Key(static_cast<std::size_t>(k)), Q(1));
    return t;
}

UTensor u_embed(const Tensor& t)
{
    UTensor out(t.degree());
    for (const auto& [i, c] : t.terms()) {
        Key k;
        for (int a : t.multi_index(i))
            k.push_back(Word{a});
        out.add(k, c);
    }
    return out;
}

UTensor u_concat(const UTensor& a, const UTensor& b)
{
    UTensor out(a.degree + b.degree);
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            Key k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            out.add(k, ca * cb);
        }
    return out;
}

UTensor u_delta_at(const UTensor& t, int slot)
{
    if (slot < 0 || slot >= t.degree)
        throw std::out_of_range("u_delta_at: slot out of range");
    UTensor out(t.degree + 1);
    const auto s = static_cast<std::size_t>(slot);
    for (const auto& [key, c] : t.terms) {
        const Word& w = key[s];
        const std::size_t len = w.size();
        for (std::size_t mask = 0; mask < (std::size_t(1) << len); ++mask) {
            Word left;
            Word right;
            for (std::size_t p = 0; p < len; ++p)
                ((mask >> p) & 1 ? left : right).push_back(w[p]);
            Key k(key.begin(), key.begin() + static_cast<long>(s));
            k.push_back(std::move(left));
            k.push_back(std::move(right));
            k.insert(k.end(), key.begin() + static_cast<long>(s) + 1, key.end());
            out.add(k, c);
        }
    }
    return out;
}

UTensor u_counit_at(const UTensor& t, int slot)
{
    if (slot < 0 || slot >= t.degree)
        throw std::out_of_range("u_counit_at: slot out of range");
    UTensor out(t.degree - 1);
    const auto s = static_cast<std::size_t>(slot);
    for (const auto& [key, c] : t.terms)
        if (key[s].empty()) {
            Key k = key;
            k.erase(k.begin() + static_cast<long>(s));
            out.add(k, c);
        }
    return out;
}

UTensor u_permute(const UTensor& t, const std::vector<int>& perm)
{
    UTensor out(t.degree);
    for (const auto& [key, c] : t.terms) {
        Key k(key.size());
        for (std::size_t i = 0; i < perm.size(); ++i)
            k[i] = key[static_cast<std::size_t>(perm[i])];
        out.add(k, c);
    }
    return out;
}

UTensor u_alternate(const UTensor& t)
{
    const int n = t.degree;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    UTensor out(n);
    long count = 0;
    do {
        int inversions = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)])
                    ++inversions;
        out += Q(parity_sign(inversions)) * u_permute(t, perm);
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return (Q(1) / Q(count)) * std::move(out);
}

UTensor u_flip(const UTensor& t)
{
    if (t.degree != 2)
        throw std::invalid_argument("u_flip: degree must be 2");
    return u_permute(t, {1, 0});
}

std::string format_word(const Word& w, const std::vector<std::string>& names)
{
    if (w.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        if (!s.empty())
            s += "*";
        s += names[static_cast<std::size_t>(w[i])];
        if (j - i > 1)
            s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

std::string format_u(const UTensor& t, const std::vector<std::string>& names)
{
    if (t.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : t.terms) {
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        const Q a = abs(c);
        if (a != 1 || key.empty())
            os << a.str() << (key.empty() ? "" : "*");
        for (std::size_t k = 0; k < key.size(); ++k)
            os << (k ? "⊗" : "") << format_word(key[k], names);
    }
    return os.str();
}

PBWElement pbw_normal_form(const LieAlgebra& g, const Word& word)
{
    for (int a : word)
        if (a < 0 || a >= g.dim())
            throw FormatError("word letter " + std::to_string(a) + " out of range");
    Normalizer norm(g);
    UTensor out(1);
    for (const auto& [w, c] : norm.normal(word))
        out.add({w}, c);
    return out;
}

UTensor u_mult(const LieAlgebra& g, const UTensor& u, const UTensor& v)
{
    if (u.degree != v.degree)
        throw std::invalid_argument("u_mult: degree mismatch");
    Normalizer norm(g);
    UTensor out(u.degree);
    const auto n = static_cast<std::size_t>(u.degree);
    std::vector<WordCombination> slots(n);
    for (const auto& [ku, cu] : u.terms)
        for (const auto& [kv, cv] : v.terms) {
            for (std::size_t s = 0; s < n; ++s) {
                Word w = ku[s];
                w.insert(w.end(), kv[s].begin(), kv[s].end());
                slots[s] = norm.normal(w);
            }
            expand_slots(slots, cu * cv, out);
        }
    return out;
}

UTensor u_commutator(const LieAlgebra& g, const UTensor& u, const UTensor& v)
{
    return u_mult(g, u, v) - u_mult(g, v, u);
}

UTensor u_apply_derivation(const LieAlgebra& g, const DenseMat<Q>& d, const UTensor& t)
{
    Normalizer norm(g);
    UTensor out(t.degree);
    for (const auto& [key, c] : t.terms)
        for (std::size_t s = 0; s < key.size(); ++s)
            for (std::size_t p = 0; p < key[s].size(); ++p)
                for (int l = 0; l < g.dim(); ++l) {
                    const Q& f = d(l, key[s][p]);
                    if (f == 0)
                        continue;
                    Word w = key[s];
                    w[p] = l;
                    for (const auto& [nw, nc] : norm.normal(w)) {
                        Key k = key;
                        k[s] = nw;
                        out.add(k, c * f * nc);
                    }
                }
    return out;
}

UTensor s_mult(const UTensor& u, const UTensor& v)
{
    if (u.degree != v.degree)
        throw std::invalid_argument("s_mult: degree mismatch");
    UTensor out(u.degree);
    for (const auto& [ku, cu] : u.terms)
        for (const auto& [kv, cv] : v.terms) {
            Key k(ku.size());
            for (std::size_t s = 0; s < k.size(); ++s)
                std::merge(ku[s].begin(), ku[s].end(), kv[s].begin(), kv[s].end(), std::back_inserter(k[s]));
            out.add(k, cu * cv);
        }
    return out;
}

VerificationReport ug_invariant_twist_check(const LieAlgebra& g, const Tensor& phi)
{
    if (phi.degree() != 2 || phi.dim() != g.dim())
        throw std::invalid_argument("ug_invariant_twist_check: φ must lie in g⊗g");
    const UTensor p = u_embed(phi);
    VerificationReport rep;
    std::string w;
    for (int x = 0; x < g.dim() && w.empty(); ++x) {
        const UTensor dx = u_delta_at(u_generator(unit_vec<Q>(g.dim(), x)), 0);
        const UTensor c = u_commutator(g, p, dx);
        if (!c.is_zero())
            w = g.basis_names()[static_cast<std::size_t>(x)] + ": " + format_u(c, g.basis_names());
    }
    rep.add("invariance", w.empty(), w);
    const UTensor co = coboundary_of(UgOps{g}, p);
    rep.add("cocd", co.is_zero(), index_witness(co, g.basis_names()));
    const UTensor l = u_counit_at(p, 0);
    const UTensor r = u_counit_at(p, 1);
    rep.add("normd", l.is_zero() && r.is_zero(), l.is_zero() ? index_witness(r, g.basis_names()) : index_witness(l, g.basis_names()));
    return rep;
}

namespace {

// Some a with ∂a = target (degree-2 target), piece by piece up to its filtration degree.
std::optional<UTensor> coboundary_solve(const LieAlgebra& g, const UTensor& target)
{
    const int top = filtration_degree(target);
    std::vector<std::vector<Word>> comps;
    for (int m = 0; m <= top; ++m)
        comps.push_back(monomials(g.dim(), m));
    UTensor a(1);
    for (int m = 0; m <= top; ++m) {
        const Piece c1 = make_piece(comps, 1, m);
        const Piece c2 = make_piece(comps, 2, m);
        const auto x = solve(piece_differential(c1, c2, 1, m), c2.coords(target, m));
        if (!x)
            return std::nullopt;
        a += c1.element(1, *x);
    }
    return a;
}

} // namespace

VerificationReport semidirect_ug_compare(const LieAlgebra& g, const Semidirect& s)
{
    const int dim = g.dim();
    const int q = static_cast<int>(s.outer_dim());
    const int t = static_cast<int>(s.twist_dim());
    const int total = q + t;
    struct Tw {
        DenseMat<Q> d;
        UTensor phi;
    };
    auto basis = [&](int p) {
        Tw out{DenseMat<Q>::Constant(dim, dim, Q(0)), UTensor(2)};
        if (p < q)
            out.d = s.out.lift(dim, p);
        else
            out.phi = wedge_to_u(dim, 2, s.twists.vector(p - q));
        return out;
    };

    VerificationReport rep;
    std::string w;
    for (int p = q; p < total && w.empty(); ++p) {
        Tensor phi(dim, 2);
        for (const auto& [key, c] : basis(p).phi.terms)
            phi.add(MultiIndex{key[0][0], key[1][0]}, c);
        const VerificationReport r = ug_invariant_twist_check(g, phi);
        if (!r.passed())
            w = s.algebra.basis_names()[static_cast<std::size_t>(p)];
    }
    rep.add("basis elements are twisted derivations of U(g)", w.empty(), w);

    w.clear();
    for (int p = 0; p < total && w.empty(); ++p)
        for (int r = 0; r < total && w.empty(); ++r) {
            const Tw a = basis(p);
            const Tw b = basis(r);
            const DenseMat<Q> d = a.d * b.d - b.d * a.d;
            const UTensor phi = u_apply_derivation(g, a.d, b.phi) - u_apply_derivation(g, b.d, a.phi)
                - u_commutator(g, a.phi, b.phi);
            Tw expect{DenseMat<Q>::Constant(dim, dim, Q(0)), UTensor(2)};
            for (const auto& tm : s.algebra.bracket(p, r)) {
                const Tw e = basis(tm.k);
                expect.d += tm.c * e.d;
                expect.phi += tm.c * e.phi;
            }
            // The difference must be ∂(a) = (ad_a, a⊗1 + 1⊗a - Δa) for some a ∈ U(g)_ε.
            const std::string pair = "(" + s.algebra.basis_names()[static_cast<std::size_t>(p)] + ","
                + s.algebra.basis_names()[static_cast<std::size_t>(r)] + ")";
            const auto a0 = coboundary_solve(g, phi - expect.phi);
            if (!a0 || a0->coeff({Word{}}) != 0) {
                w = pair;
                break;
            }
            // ad_{a0 + x} must equal d - expect.d on generators for some x ∈ g.
            std::vector<UTensor> residuals;
            for (int i = 0; i < dim; ++i) {
                const UTensor ei = u_generator(unit_vec<Q>(dim, i));
                residuals.push_back(u_generator(Vec<Q>((d - expect.d).col(i))) - u_commutator(g, *a0, ei));
            }
            // Solve Σ_j x_j [e_j, e_i] = residual_i; residuals must lie in g.
            bool ok = true;
            Vec<Q> rhs = zero_vec<Q>(Index(dim) * dim);
            for (int i = 0; i < dim && ok; ++i)
                for (const auto& [key, c] : residuals[static_cast<std::size_t>(i)].terms) {
                    if (key[0].size() != 1) {
                        ok = false;
                        break;
                    }
                    rhs(i * dim + key[0][0]) = c;
                }
            if (ok) {
                const Matrix<Q> m = from_columns<Q>(Index(dim) * dim, dim, [&](Index j) {
                    return sparse_of(flatten_endo(lie_ad(g, unit_vec<Q>(dim, j))));
                });
                ok = solve(m, rhs).has_value();
            }
            if (!ok)
                w = pair;
        }
    rep.add("U(g) brackets match up to ∂(U(g)_ε)", w.empty(), w);
    return rep;
}

GradedCoalgebra sym_coalgebra(const LieAlgebra& g, int N)
{
    if (g.dim() > kMaxGradedLieDim)
        throw PreconditionError("sym_coalgebra: dim g = " + std::to_string(g.dim()) + " exceeds the cap "
            + std::to_string(kMaxGradedLieDim));
    if (N < 0)
        throw PreconditionError("sym_coalgebra: negative truncation degree");
    GradedCoalgebra s;
    s.dim = g.dim();
    s.N = N;
    for (int m = 0; m <= N; ++m)
        s.components.push_back(monomials(g.dim(), m));

    std::string deg_w;
    std::string cou_w;
    std::string coa_w;
    for (int m = 0; m <= N; ++m)
        for (const auto& w : s.components[static_cast<std::size_t>(m)]) {
            UTensor x(1);
            x.add({w}, Q(1));
            const UTensor d = u_delta_at(x, 0);
            for (const auto& [k, c] : d.terms)
                if (total_length(k) != m && deg_w.empty())
                    deg_w = format_word(w, g.basis_names());
            if ((u_counit_at(d, 0) != x || u_counit_at(d, 1) != x) && cou_w.empty())
                cou_w = format_word(w, g.basis_names());
            if (u_delta_at(d, 0) != u_delta_at(d, 1) && coa_w.empty())
                coa_w = format_word(w, g.basis_names());
        }
    s.report.add("Δ preserves degree", deg_w.empty(), deg_w);
    s.report.add("counit", cou_w.empty(), cou_w);
    s.report.add("coassociativity", coa_w.empty(), coa_w);
    return s;
}

GradedCohomology graded_cohomology(const LieAlgebra& g, int N, int n) { return graded_impl(g, N, n, false); }

GradedCohomology invariant_graded_cohomology(const LieAlgebra& g, int N, int n) { return graded_impl(g, N, n, true); }

UTensor wedge_to_u(int dim, int n, const Vec<Q>& omega)
{
    const auto basis = exterior_basis(dim, n);
    UTensor out(n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (std::size_t b = 0; b < basis.size(); ++b) {
        const Q& c = omega(static_cast<Index>(b));
        if (c == 0)
            continue;
        std::iota(perm.begin(), perm.end(), 0);
        do {
            int inversions = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
                        ++inversions;
            Key k;
            for (int i : perm)
                k.push_back(Word{basis[b][static_cast<std::size_t>(i)]});
            out.add(k, parity_sign(inversions) * c);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

std::optional<UTensor> cob_correction(const LieAlgebra& g, int N, const UTensor& phi)
{
    if (phi.degree != 2)
        throw std::invalid_argument("cob_correction: φ must have degree 2");
    if (filtration_degree(phi) > N)
        throw PreconditionError("cob_correction: φ exceeds the truncation degree");
    if (!coboundary_of(SymOps{}, phi).is_zero())
        throw PreconditionError("cob_correction: φ is not a cocycle");
    return coboundary_solve(g, phi - u_alternate(phi));
}

} // namespace twd
