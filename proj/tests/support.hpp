#pragma once

#include "twd/bialgebra.hpp"

#include <initializer_list>
#include <random>

namespace twd::test {

inline Vec<Q> vec(std::initializer_list<long> xs)
{
    Vec<Q> v(static_cast<Index>(xs.size()));
    Index i = 0;
    for (long x : xs)
        v(i++) = Q(x);
    return v;
}

inline Matrix<Q> mat(Index rows, Index cols, std::initializer_list<long> xs)
{
    std::map<std::pair<Index, Index>, Q> e;
    Index k = 0;
    for (long x : xs) {
        e[{k / cols, k % cols}] = Q(x);
        ++k;
    }
    return from_entries<Q>(rows, cols, e);
}

/// Small random rationals with a fixed-seed engine; about `density` of the
/// entries are nonzero.
class Gen {
public:
    explicit Gen(unsigned seed)
        : rng_(seed)
    {
    }

    Q scalar()
    {
        std::uniform_int_distribution<int> num(-4, 4);
        std::uniform_int_distribution<int> den(1, 3);
        return Q(num(rng_)) / Q(den(rng_));
    }

    bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Tensor tensor(int dim, int degree, double density = 0.3)
    {
        Tensor t(dim, degree);
        const TensorIndex n = t.size();
        for (TensorIndex i = 0; i < n; ++i)
            if (coin(density))
                t.add(i, scalar());
        if (t.is_zero())
            t.add(static_cast<TensorIndex>(uniform(0, static_cast<int>(n - 1))), Q(1));
        return t;
    }

    Matrix<Q> matrix(Index rows, Index cols, double density = 0.4)
    {
        std::map<std::pair<Index, Index>, Q> e;
        for (Index r = 0; r < rows; ++r)
            for (Index c = 0; c < cols; ++c)
                if (coin(density))
                    e[{r, c}] = scalar();
        return from_entries<Q>(rows, cols, e);
    }

    Vec<Q> vector(Index n)
    {
        Vec<Q> v(n);
        for (Index i = 0; i < n; ++i)
            v(i) = scalar();
        return v;
    }

private:
    std::mt19937 rng_;
};

} // namespace twd::test
