#include "twd/tensor.hpp"

#include <sstream>

namespace twd {

TensorIndex power(int dim, int degree)
{
    TensorIndex p = 1;
    for (int i = 0; i < degree; ++i)
        p *= static_cast<TensorIndex>(dim);
    return p;
}

Tensor::Tensor(int dim, int degree)
    : dim_(dim)
    , degree_(degree)
{
    if (dim <= 0 || degree < 0)
        throw std::invalid_argument("tensor needs dim > 0 and degree >= 0");
}

Tensor Tensor::basis(int dim, const MultiIndex& idx, const Q& c)
{
    Tensor t(dim, static_cast<int>(idx.size()));
    t.add(idx, c);
    return t;
}

Tensor Tensor::scalar(int dim, const Q& c)
{
    Tensor t(dim, 0);
    t.add(TensorIndex{0}, c);
    return t;
}

Tensor Tensor::from_vector(const Vec<Q>& v)
{
    return from_dense(static_cast<int>(v.size()), 1, v);
}

Tensor Tensor::from_dense(int dim, int degree, const Vec<Q>& v)
{
    Tensor t(dim, degree);
    if (static_cast<TensorIndex>(v.size()) != t.size())
        throw std::invalid_argument("dense vector has wrong length for tensor");
    for (Index i = 0; i < v.size(); ++i)
        if (v(i) != 0)
            t.terms_.emplace(static_cast<TensorIndex>(i), v(i));
    return t;
}

TensorIndex Tensor::size() const { return power(dim_, degree_); }

Q Tensor::coeff(TensorIndex idx) const
{
    auto it = terms_.find(idx);
    return it == terms_.end() ? Q(0) : it->second;
}

void Tensor::add(TensorIndex idx, const Q& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

TensorIndex Tensor::linear_index(std::span<const int> idx) const
{
    if (static_cast<int>(idx.size()) != degree_)
        throw std::invalid_argument("multi-index length does not match tensor degree");
    TensorIndex r = 0;
    for (int i : idx) {
        if (i < 0 || i >= dim_)
            throw std::out_of_range("basis index out of range");
        r = r * static_cast<TensorIndex>(dim_) + static_cast<TensorIndex>(i);
    }
    return r;
}

MultiIndex Tensor::multi_index(TensorIndex idx) const
{
    MultiIndex m(static_cast<std::size_t>(degree_));
    for (int k = degree_ - 1; k >= 0; --k) {
        m[static_cast<std::size_t>(k)] = static_cast<int>(idx % static_cast<TensorIndex>(dim_));
        idx /= static_cast<TensorIndex>(dim_);
    }
    return m;
}

Vec<Q> Tensor::to_dense() const
{
    Vec<Q> v = zero_vec<Q>(static_cast<Index>(size()));
    for (const auto& [i, c] : terms_)
        v(static_cast<Index>(i)) = c;
    return v;
}

SparseRow<Q> Tensor::to_sparse() const
{
    SparseRow<Q> r;
    r.reserve(terms_.size());
    for (const auto& [i, c] : terms_)
        r.emplace_back(static_cast<Index>(i), c);
    return r;
}

void Tensor::check_compatible(const Tensor& o) const
{
    if (dim_ != o.dim_ || degree_ != o.degree_)
        throw std::invalid_argument("tensor degree or dimension mismatch");
}

Tensor& Tensor::operator+=(const Tensor& o)
{
    check_compatible(o);
    for (const auto& [i, c] : o.terms_)
        add(i, c);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o)
{
    check_compatible(o);
    for (const auto& [i, c] : o.terms_)
        add(i, -c);
    return *this;
}

Tensor& Tensor::operator*=(const Q& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [i, v] : terms_)
        v *= c;
    return *this;
}

Tensor concat(const Tensor& a, const Tensor& b)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("concat: dimension mismatch");
    Tensor out(a.dim(), a.degree() + b.degree());
    const TensorIndex shift = power(a.dim(), b.degree());
    for (const auto& [i, ca] : a.terms())
        for (const auto& [j, cb] : b.terms())
            out.add(i * shift + j, ca * cb);
    return out;
}

Tensor permute(const Tensor& t, std::span<const int> perm)
{
    if (static_cast<int>(perm.size()) != t.degree())
        throw std::invalid_argument("permute: permutation length mismatch");
    Tensor out(t.dim(), t.degree());
    MultiIndex dst(perm.size());
    for (const auto& [i, c] : t.terms()) {
        const MultiIndex src = t.multi_index(i);
        for (std::size_t k = 0; k < perm.size(); ++k)
            dst[k] = src[static_cast<std::size_t>(perm[k])];
        out.add(dst, c);
    }
    return out;
}

Tensor flip(const Tensor& t)
{
    if (t.degree() != 2)
        throw std::invalid_argument("flip expects a degree-2 tensor");
    const int perm[] = {1, 0};
    return permute(t, perm);
}

Tensor unit_power(const Vec<Q>& unit, int k)
{
    const int dim = static_cast<int>(unit.size());
    Tensor out = Tensor::scalar(dim, Q(1));
    const Tensor one = Tensor::from_vector(unit);
    for (int i = 0; i < k; ++i)
        out = concat(out, one);
    return out;
}

Tensor apply_endo_at(const Tensor& t, const DenseMat<Q>& endo, int slot)
{
    if (slot < 0 || slot >= t.degree())
        throw std::out_of_range("apply_endo_at: slot out of range");
    Tensor out(t.dim(), t.degree());
    for (const auto& [i, c] : t.terms()) {
        MultiIndex m = t.multi_index(i);
        const int src = m[static_cast<std::size_t>(slot)];
        for (int k = 0; k < t.dim(); ++k) {
            const Q& v = endo(k, src);
            if (v == 0)
                continue;
            m[static_cast<std::size_t>(slot)] = k;
            out.add(m, c * v);
        }
    }
    return out;
}

Tensor apply_derivation(const Tensor& t, const DenseMat<Q>& d)
{
    Tensor out(t.dim(), t.degree());
    for (int s = 0; s < t.degree(); ++s)
        out += apply_endo_at(t, d, s);
    return out;
}

Tensor apply_endo_all(const Tensor& t, const DenseMat<Q>& f)
{
    Tensor out = t;
    for (int s = 0; s < t.degree(); ++s)
        out = apply_endo_at(out, f, s);
    return out;
}

std::string format_tensor(const Tensor& t, const std::vector<std::string>& names)
{
    if (t.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : t.terms()) {
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        const Q a = abs(c);
        const MultiIndex m = t.multi_index(i);
        if (a != 1 || m.empty())
            os << a.str() << (m.empty() ? "" : "*");
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (k)
                os << "⊗";
            os << names[static_cast<std::size_t>(m[k])];
        }
    }
    return os.str();
}

} // namespace twd
