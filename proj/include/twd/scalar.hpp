#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace twd {

/// Exact rational scalar. GMP keeps it in lowest terms with a positive denominator.
using Q = boost::multiprecision::mpq_rational;

inline std::string to_string(const Q& q) { return q.str(); }

/// Parses "p", "-p", "+p" or "p/q" (any sign, result in lowest terms). Throws std::invalid_argument on anything else.
inline Q parse_scalar(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty scalar");
    std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
    std::size_t slash = text.find('/');
    auto digits = [&](std::size_t b, std::size_t e) {
        if (b >= e)
            return false;
        for (std::size_t i = b; i < e; ++i)
            if (text[i] < '0' || text[i] > '9')
                return false;
        return true;
    };
    bool ok = slash == std::string_view::npos ? digits(start, text.size())
                                              : digits(start, slash) && digits(slash + 1, text.size());
    if (!ok)
        throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
    using boost::multiprecision::mpz_int;
    const bool negative = text.front() == '-';
    const std::size_t num_end = slash == std::string_view::npos ? text.size() : slash;
    Q value{mpz_int(std::string(text.substr(start, num_end - start)))};
    if (slash != std::string_view::npos) {
        mpz_int den(std::string(text.substr(slash + 1)));
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        value /= Q(den);
    }
    return negative ? Q(-value) : value;
}

} // namespace twd
