#include "cellmac/linalg.hpp"

#include <boost/multiprecision/integer.hpp>

namespace cellmac {

void normalize_columns(Matrix<Rational>& m)
{
    for (Index j = 0; j < m.cols(); ++j)
    {
        BigInt lcm_den = 1, gcd_num = 0;
        Index first = -1;
        for (Index i = 0; i < m.rows(); ++i)
        {
            if (m(i, j).is_zero())
                continue;
            if (first < 0) first = i;
            const BigInt den = boost::multiprecision::denominator(m(i, j));
            lcm_den = boost::multiprecision::lcm(lcm_den, den);
        }
        if (first < 0)
            continue;
        for (Index i = 0; i < m.rows(); ++i)
        {
            if (m(i, j).is_zero())
                continue;
            const Rational scaled = m(i, j) * Rational(lcm_den);
            gcd_num = boost::multiprecision::gcd(gcd_num, boost::multiprecision::abs(boost::multiprecision::numerator(scaled)));
        }
        Rational factor = Rational(lcm_den) / Rational(gcd_num);
        if (m(first, j) < 0)
            factor = -factor;
        for (Index i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) m(i, j) *= factor;
    }
}

void normalize_columns(Matrix<Zp>& m)
{
    for (Index j = 0; j < m.cols(); ++j)
    {
        for (Index i = 0; i < m.rows(); ++i)
        {
            if (m(i, j).value() == 0)
                continue;
            const Zp inv = m(i, j).inverse();
            for (Index k = i; k < m.rows(); ++k)
                m(k, j) *= inv;
            break;
        }
    }
}

} // namespace cellmac
