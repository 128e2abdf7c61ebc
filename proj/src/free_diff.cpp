#include "twd/free_diff.hpp"

#include <algorithm>
#include <functional>

namespace twd {

namespace {

using Key = std::vector<Word>;

struct EOps {
    const FreeDiffAlgebra& e;
    using Element = UTensor;

    int degree(const UTensor& t) const { return t.degree; }
    UTensor unit_power(int k) const { return u_unit(k); }
    UTensor concat(const UTensor& x, const UTensor& y) const { return u_concat(x, y); }
    UTensor mult(const UTensor& x, const UTensor& y) const { return e.reduce(free_mult(x, y)); }
    UTensor delta_at(const UTensor& t, int slot) const { return e.reduce(e_delta_at(e, t, slot)); }
    UTensor counit_at(const UTensor& t, int slot) const { return u_counit_at(t, slot); }
    UTensor scale(const Q& c, UTensor t) const { return c * std::move(t); }
    UTensor add(UTensor x, const UTensor& y) const { return x += y; }
};

UTensor single(const Word& w)
{
    UTensor t(1);
    t.add(Key{w}, Q(1));
    return t;
}

UTensor free_commutator(const UTensor& a, const UTensor& b) { return free_mult(a, b) - free_mult(b, a); }

Index binom(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    Index r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

void order_zero_words(int gens, int len, Word& cur, std::vector<Word>& out)
{
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    for (int g = 0; g < gens; ++g) {
        cur.push_back(g);
        order_zero_words(gens, len, cur, out);
        cur.pop_back();
    }
}

} // namespace

FreeDiffAlgebra::FreeDiffAlgebra(const LieAlgebra& base, const UTensor& phi, int weight_cap)
    : gens_(base.dim())
    , W_(weight_cap)
    , slot_cap_(weight_cap)
    , phi_(2)
    , names_(base.basis_names())
{
    if (gens_ < 1)
        throw PreconditionError("unsupported base: no generators");
    if (W_ < 1)
        throw PreconditionError("weight cap must be at least 1");
    for (int i = 0; i < gens_; ++i)
        for (int j = 0; j < gens_; ++j)
            if (!base.bracket(i, j).empty())
                throw PreconditionError("unsupported base: [" + names_[static_cast<std::size_t>(i)] + ", "
                    + names_[static_cast<std::size_t>(j)] + "] != 0, only polynomial bases are supported");
    if (phi.degree != 2)
        throw PreconditionError("phi must lie in H⊗H");
    std::size_t p = 1;
    for (const auto& [key, c] : phi.terms) {
        Key k = key;
        for (auto& w : k) {
            for (int a : w)
                if (a < 0 || a >= gens_)
                    throw FormatError("phi letter " + std::to_string(a) + " out of range");
            std::sort(w.begin(), w.end());
            p = std::max(p, w.size());
        }
        phi_.add(k, c);
    }
    const auto pi = static_cast<int>(p);
    slot_cap_ = 1 + (W_ - 1) * pi * pi;

    const UTensor cob = coboundary_of(SymOps{}, phi_);
    if (!cob.is_zero())
        throw PreconditionError("phi is not a cocycle: ∂phi = " + format_u(cob, names_));
    const UTensor left = u_counit_at(phi_, 0);
    const UTensor right = u_counit_at(phi_, 1);
    if (!left.is_zero() || !right.is_zero())
        throw PreconditionError("phi is not normalized: (ε⊗I)phi = " + format_u(left, names_)
            + ", (I⊗ε)phi = " + format_u(right, names_));
}

int FreeDiffAlgebra::word_weight(const Word& w) const
{
    int s = 0;
    for (int id : w)
        s += letter_weight(id);
    return s;
}

std::string FreeDiffAlgebra::letter_name(int id) const
{
    const int n = letter_order(id);
    const std::string& x = names_[static_cast<std::size_t>(letter_gen(id))];
    if (n == 0)
        return x;
    if (n == 1)
        return "d(" + x + ")";
    return "d^" + std::to_string(n) + "(" + x + ")";
}

std::vector<std::string> FreeDiffAlgebra::letter_names() const
{
    std::vector<std::string> out;
    for (int id = 0; id < slot_cap_ * gens_; ++id)
        out.push_back(letter_name(id));
    return out;
}

std::vector<UTensor> FreeDiffAlgebra::relations(int w) const
{
    std::vector<UTensor> out;
    if (w < 2)
        return out;
    for (int a = 0; a < gens_; ++a)
        for (int b = a + 1; b < gens_; ++b) {
            UTensor r(1);
            r.add(Key{Word{a, b}}, Q(1));
            r.add(Key{Word{b, a}}, Q(-1));
            for (int n = 2; n < w; ++n)
                r = e_derivation(*this, r);
            out.push_back(std::move(r));
        }
    return out;
}

const FreeDiffAlgebra::Piece& FreeDiffAlgebra::piece(int w) const
{
    if (auto it = pieces_.find(w); it != pieces_.end())
        return it->second;
    if (w < 0 || w > slot_cap_)
        throw CapExceeded("weight " + std::to_string(w) + " exceeds the slot cap " + std::to_string(slot_cap_));

    // Free words of weight s number c_s = Σ_{l=1}^{s} gens·c_{s-l}.
    std::vector<Index> count(static_cast<std::size_t>(w) + 1, 0);
    count[0] = 1;
    for (int s = 1; s <= w; ++s)
        for (int l = 1; l <= s; ++l)
            count[static_cast<std::size_t>(s)] += gens_ * count[static_cast<std::size_t>(s - l)];
    if (count[static_cast<std::size_t>(w)] > static_cast<Index>(tensor_cap()))
        throw CapExceeded("weight " + std::to_string(w) + " piece has " + std::to_string(count[static_cast<std::size_t>(w)])
            + " free words, above the cap " + std::to_string(tensor_cap()));

    Piece pc;
    Word cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            pc.words.push_back(cur);
            return;
        }
        for (int id = 0; id < left * gens_; ++id) {
            cur.push_back(id);
            rec(left - letter_weight(id));
            cur.pop_back();
        }
    };
    rec(w);
    std::reverse(pc.words.begin(), pc.words.end());
    for (std::size_t i = 0; i < pc.words.size(); ++i)
        pc.index[pc.words[i]] = static_cast<Index>(i);

    const auto dim = static_cast<Index>(pc.words.size());
    auto to_vec = [&](const UTensor& t) {
        Vec<Q> v = zero_vec<Q>(dim);
        for (const auto& [key, c] : t.terms)
            v(pc.index.at(key[0])) += c;
        return v;
    };
    std::vector<Vec<Q>> gens;
    for (const auto& r : relations(w))
        gens.push_back(to_vec(r));
    for (int id = 0; id < w * gens_; ++id) {
        const int l = letter_weight(id);
        if (l >= w)
            continue;
        const Piece& sub = piece(w - l);
        for (Index i = 0; i < sub.ideal.dim(); ++i) {
            const Vec<Q> v = sub.ideal.vector(i);
            Vec<Q> lv = zero_vec<Q>(dim);
            Vec<Q> vl = zero_vec<Q>(dim);
            for (Index j = 0; j < v.size(); ++j) {
                if (v(j) == 0)
                    continue;
                const Word& u = sub.words[static_cast<std::size_t>(j)];
                Word a{id};
                a.insert(a.end(), u.begin(), u.end());
                Word b = u;
                b.push_back(id);
                lv(pc.index.at(a)) += v(j);
                vl(pc.index.at(b)) += v(j);
            }
            gens.push_back(std::move(lv));
            gens.push_back(std::move(vl));
        }
    }
    pc.ideal = Subspace<Q>::span(dim, gens);
    pc.quotient = quotient(dim, pc.ideal);
    return pieces_.emplace(w, std::move(pc)).first->second;
}

const std::vector<std::pair<Word, Q>>& FreeDiffAlgebra::reduce_word(const Word& w) const
{
    if (auto it = reduced_.find(w); it != reduced_.end())
        return it->second;
    for (int id : w)
        if (id < 0)
            throw FormatError("negative letter id");
    const Piece& pc = piece(word_weight(w));
    std::vector<std::pair<Word, Q>> out;
    const Index col = pc.index.at(w);
    const Vec<Q> q = pc.quotient.to_quotient(unit_vec<Q>(static_cast<Index>(pc.words.size()), col));
    for (Index i = 0; i < q.size(); ++i)
        if (q(i) != 0)
            out.emplace_back(pc.words[static_cast<std::size_t>(pc.quotient.complement_indices[static_cast<std::size_t>(i)])], q(i));
    return reduced_.emplace(w, std::move(out)).first->second;
}

UTensor FreeDiffAlgebra::reduce(const UTensor& t) const
{
    UTensor out(t.degree);
    for (const auto& [key, c] : t.terms) {
        std::vector<std::pair<Key, Q>> partial{{Key{}, c}};
        for (const Word& w : key) {
            const auto& r = reduce_word(w);
            std::vector<std::pair<Key, Q>> next;
            for (const auto& [k, a] : partial)
                for (const auto& [nw, b] : r) {
                    Key nk = k;
                    nk.push_back(nw);
                    next.emplace_back(std::move(nk), a * b);
                }
            partial = std::move(next);
        }
        for (const auto& [k, a] : partial)
            out.add(k, a);
    }
    return out;
}

std::vector<Word> FreeDiffAlgebra::basis(int w) const
{
    const Piece& pc = piece(w);
    std::vector<Word> out;
    for (Index i : pc.quotient.complement_indices)
        out.push_back(pc.words[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<Word> FreeDiffAlgebra::basis() const
{
    std::vector<Word> out;
    for (int w = 1; w <= W_; ++w)
        for (auto& b : basis(w))
            out.push_back(std::move(b));
    return out;
}

Index FreeDiffAlgebra::piece_dim(int w) const { return piece(w).quotient.dim(); }

Index FreeDiffAlgebra::ideal_dim(int w) const { return piece(w).ideal.dim(); }

Index FreeDiffAlgebra::dim() const
{
    Index s = 0;
    for (int w = 0; w <= W_; ++w)
        s += piece_dim(w);
    return s;
}

const UTensor& FreeDiffAlgebra::letter_coproduct(int id) const
{
    if (auto it = coproducts_.find(id); it != coproducts_.end())
        return it->second;
    if (id < 0)
        throw FormatError("negative letter id");
    UTensor out(2);
    if (letter_order(id) == 0) {
        out.add(Key{Word{id}, Word{}}, Q(1));
        out.add(Key{Word{}, Word{id}}, Q(1));
    } else {
        const UTensor prev = letter_coproduct(id - gens_);
        out = e_derivation(*this, prev) - free_commutator(phi_, prev);
        out = reduce(out);
    }
    return coproducts_.emplace(id, std::move(out)).first->second;
}

UTensor free_mult(const UTensor& u, const UTensor& v)
{
    if (u.degree != v.degree)
        throw std::invalid_argument("free_mult: degree mismatch");
    UTensor out(u.degree);
    for (const auto& [ka, ca] : u.terms)
        for (const auto& [kb, cb] : v.terms) {
            Key k = ka;
            for (std::size_t s = 0; s < k.size(); ++s)
                k[s].insert(k[s].end(), kb[s].begin(), kb[s].end());
            out.add(k, ca * cb);
        }
    return out;
}

UTensor e_derivation(const FreeDiffAlgebra& e, const UTensor& u)
{
    UTensor out(u.degree);
    for (const auto& [key, c] : u.terms)
        for (std::size_t s = 0; s < key.size(); ++s) {
            if (key[s].empty())
                continue;
            if (e.word_weight(key[s]) + 1 > e.slot_cap())
                throw CapExceeded("d raises a slot above weight " + std::to_string(e.slot_cap()));
            for (std::size_t p = 0; p < key[s].size(); ++p) {
                Key k = key;
                k[s][p] += e.generators();
                out.add(k, c);
            }
        }
    return out;
}

UTensor e_delta_at(const FreeDiffAlgebra& e, const UTensor& t, int slot)
{
    if (slot < 0 || slot >= t.degree)
        throw std::out_of_range("e_delta_at: slot out of range");
    const auto s = static_cast<std::size_t>(slot);
    UTensor out(t.degree + 1);
    for (const auto& [key, c] : t.terms) {
        UTensor prod = u_unit(2);
        for (int id : key[s])
            prod = free_mult(prod, e.letter_coproduct(id));
        for (const auto& [pk, pc] : prod.terms) {
            Key k(key.begin(), key.begin() + static_cast<long>(s));
            k.push_back(pk[0]);
            k.push_back(pk[1]);
            k.insert(k.end(), key.begin() + static_cast<long>(s) + 1, key.end());
            out.add(k, c * pc);
        }
    }
    return out;
}

UTensor e_coproduct(const FreeDiffAlgebra& e, const UTensor& u)
{
    if (u.degree != 1)
        throw std::invalid_argument("e_coproduct: expects a degree-1 element");
    return e.reduce(e_delta_at(e, u, 0));
}

FreeDiffReport verify_twisted_derivation_of_e(const FreeDiffAlgebra& e)
{
    FreeDiffReport out;
    VerificationReport& rep = out.report;
    const auto names = e.letter_names();
    const int W = e.weight_cap();
    const int k = e.generators();

    {
        bool ok = true;
        std::string witness;
        for (int w = 1; w <= W && ok; ++w) {
            std::vector<Word> words;
            Word cur;
            order_zero_words(k, w, cur, words);
            std::vector<Vec<Q>> images;
            const auto dim = static_cast<Index>(e.words(w).size());
            std::map<Word, Index> index;
            for (std::size_t i = 0; i < e.words(w).size(); ++i)
                index[e.words(w)[i]] = static_cast<Index>(i);
            for (const auto& u : words) {
                Vec<Q> v = zero_vec<Q>(dim);
                for (const auto& [key, c] : e.reduce(single(u)).terms)
                    v(index.at(key[0])) += c;
                images.push_back(std::move(v));
            }
            const Index got = Subspace<Q>::span(dim, images).dim();
            const Index want = binom(w + k - 1, k - 1);
            if (got != want) {
                ok = false;
                witness = "weight " + std::to_string(w) + ": image of H has dim " + std::to_string(got) + ", expected "
                    + std::to_string(want);
            }
        }
        rep.add("embedding", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (int w = 1; w < W && ok; ++w) {
            // The ideal is spanned by each free word minus its normal form.
            for (const auto& u : e.words(w)) {
                UTensor r = single(u) - e.reduce(single(u));
                if (r.is_zero())
                    continue;
                const UTensor dr = e.reduce(e_derivation(e, r));
                if (!dr.is_zero()) {
                    ok = false;
                    witness = "d(" + format_u(r, names) + ") = " + format_u(dr, names);
                    break;
                }
            }
        }
        rep.add("d preserves the ideal", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (int w = 2; w <= W && ok; ++w)
            for (const auto& r : e.relations(w)) {
                const UTensor dr = e.reduce(e_delta_at(e, r, 0));
                if (!dr.is_zero()) {
                    ok = false;
                    witness = "Δ(" + format_u(r, names) + ") = " + format_u(dr, names);
                    break;
                }
            }
        rep.add("Δ well-defined", ok, witness);
    }

    std::vector<int> letters;
    for (int id = 0; id < W * k; ++id)
        if (e.letter_weight(id) <= W)
            letters.push_back(id);

    {
        bool ok = true;
        std::string witness;
        for (int id : letters) {
            const UTensor& d = e.letter_coproduct(id);
            const UTensor l = single(Word{id});
            if (u_counit_at(d, 0) != l || u_counit_at(d, 1) != l) {
                ok = false;
                witness = e.letter_name(id);
                break;
            }
        }
        rep.add("counit", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (int id : letters) {
            const UTensor& d = e.letter_coproduct(id);
            const UTensor a = e.reduce(e_delta_at(e, d, 0));
            const UTensor b = e.reduce(e_delta_at(e, d, 1));
            if (a != b) {
                ok = false;
                witness = e.letter_name(id) + ": " + format_u(a - b, names);
                break;
            }
        }
        rep.add("coassociativity", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (int w = 1; w < W; ++w) {
            for (const auto& u : e.basis(w)) {
                const UTensor x = single(u);
                const UTensor du = e.reduce(e_derivation(e, x));
                const UTensor delta = e_coproduct(e, x);
                const UTensor lhs = e.reduce(e_derivation(e, delta)) - e_coproduct(e, du);
                const UTensor rhs = e.reduce(free_commutator(e.phi(), delta));
                if (lhs != rhs && ok) {
                    ok = false;
                    witness = format_word(u, names) + ": " + format_u(lhs - rhs, names);
                }
                if (!out.coderivation_witness && !lhs.is_zero())
                    out.coderivation_witness = u;
            }
        }
        rep.add("conjd", ok, witness);
    }

    {
        const UTensor c = e.reduce(coboundary_of(EOps{e}, e.phi()));
        rep.add("cocd", c.is_zero(), "∂phi = " + format_u(c, names));
    }
    {
        const UTensor l = u_counit_at(e.phi(), 0);
        const UTensor r = u_counit_at(e.phi(), 1);
        rep.add("normd", l.is_zero() && r.is_zero(),
            "(ε⊗I)phi = " + format_u(l, names) + ", (I⊗ε)phi = " + format_u(r, names));
    }
    return out;
}

SeparationFeasibility separation_feasibility(const FreeDiffAlgebra& e, int max_weight)
{
    SeparationFeasibility out;
    out.max_weight = max_weight;
    std::vector<Word> unknowns;
    for (int w = 1; w <= max_weight; ++w)
        for (auto& b : e.basis(w))
            unknowns.push_back(std::move(b));
    std::vector<int> letters;
    for (int id = 0; id < e.weight_cap() * e.generators(); ++id)
        if (e.letter_weight(id) + max_weight <= e.weight_cap())
            letters.push_back(id);

    const EOps ops{e};
    std::vector<UTensor> cobs;
    for (const auto& b : unknowns)
        cobs.push_back(coboundary_of(ops, single(b)));

    // Rows: one per (letter, tensor key); columns: unknowns.
    std::map<std::pair<int, Key>, Index> rows;
    std::map<std::pair<Index, Index>, Q> entries;
    std::map<Index, Q> target;
    auto row_of = [&](int id, const Key& k) {
        return rows.try_emplace({id, k}, static_cast<Index>(rows.size())).first->second;
    };
    for (int id : letters) {
        const UTensor& dl = e.letter_coproduct(id);
        for (const auto& [k, c] : e.reduce(free_commutator(e.phi(), dl)).terms)
            target[row_of(id, k)] += c;
        for (std::size_t j = 0; j < cobs.size(); ++j)
            for (const auto& [k, c] : e.reduce(free_commutator(cobs[j], dl)).terms)
                entries[{row_of(id, k), static_cast<Index>(j)}] += c;
    }
    const auto m = from_entries<Q>(static_cast<Index>(rows.size()), static_cast<Index>(unknowns.size()), entries);
    Vec<Q> b = zero_vec<Q>(static_cast<Index>(rows.size()));
    for (const auto& [r, c] : target)
        b(r) = c;
    const auto sol = solve(m, b);
    if (!sol)
        return out;
    out.feasible = true;
    UTensor a(1);
    for (std::size_t j = 0; j < unknowns.size(); ++j)
        if ((*sol)(static_cast<Index>(j)) != 0)
            a.add(Key{unknowns[j]}, (*sol)(static_cast<Index>(j)));
    out.a = std::move(a);
    return out;
}

} // namespace twd
