/**
 * Coefficient fields for exact linear algebra.
 *
 * Two scalar types are provided: `Rational` (GMP-backed rationals, always in
 * lowest terms) and `Zp` (residues modulo a prime chosen at runtime). Every
 * templated algorithm in the library is written against `FieldTraits<Scalar>`.
 */
#ifndef CELLMAC_FIELD_HPP
#define CELLMAC_FIELD_HPP

#include <atomic>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace cellmac {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

bool is_prime(std::uint32_t p);

/**
 * Residue class modulo the process-wide characteristic.
 *
 * The characteristic is global so that `Zp` stays a plain value type usable
 * inside Eigen matrices; switch it with `ScopedCharacteristic` and never while
 * another thread is computing over `Zp`.
 */
class Zp
{
public:
    Zp() = default;
    Zp(long long value) : v_(reduce(value)) {}

    static std::uint32_t characteristic() { return modulus_.load(std::memory_order_relaxed); }
    static void set_characteristic(std::uint32_t p)
    {
        if (!is_prime(p))
            throw std::invalid_argument("characteristic must be prime, got " + std::to_string(p));
        modulus_.store(p, std::memory_order_relaxed);
    }

    std::uint32_t value() const { return v_; }

    Zp operator-() const { return from_raw(v_ == 0 ? 0 : characteristic() - v_); }
    Zp& operator+=(const Zp& o)
    {
        std::uint64_t s = std::uint64_t(v_) + o.v_;
        std::uint32_t p = characteristic();
        v_ = static_cast<std::uint32_t>(s >= p ? s - p : s);
        return *this;
    }
    Zp& operator-=(const Zp& o) { return *this += -o; }
    Zp& operator*=(const Zp& o)
    {
        v_ = static_cast<std::uint32_t>((std::uint64_t(v_) * o.v_) % characteristic());
        return *this;
    }
    Zp& operator/=(const Zp& o) { return *this *= o.inverse(); }

    Zp inverse() const
    {
        if (v_ == 0)
            throw std::domain_error("division by zero in prime field");
        // Fermat: a^(p-2)
        std::uint64_t p = characteristic(), base = v_, result = 1;
        for (std::uint64_t e = p - 2; e > 0; e >>= 1)
        {
            if (e & 1) result = result * base % p;
            base = base * base % p;
        }
        return from_raw(static_cast<std::uint32_t>(result));
    }

    friend Zp operator+(Zp a, const Zp& b) { return a += b; }
    friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
    friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
    friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
    friend bool operator==(const Zp& a, const Zp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Zp& a, const Zp& b) { return a.v_ != b.v_; }
    friend std::ostream& operator<<(std::ostream& os, const Zp& a) { return os << a.v_; }

private:
    static Zp from_raw(std::uint32_t v)
    {
        Zp z;
        z.v_ = v;
        return z;
    }
    static std::uint32_t reduce(long long value)
    {
        long long p = characteristic();
        long long r = value % p;
        return static_cast<std::uint32_t>(r < 0 ? r + p : r);
    }

    std::uint32_t v_ = 0;
    static inline std::atomic<std::uint32_t> modulus_{2};
};

/// Sets the `Zp` characteristic for the lifetime of the guard.
class ScopedCharacteristic
{
public:
    explicit ScopedCharacteristic(std::uint32_t p) : previous_(Zp::characteristic())
    {
        Zp::set_characteristic(p);
    }
    ~ScopedCharacteristic() { Zp::set_characteristic(previous_); }
    ScopedCharacteristic(const ScopedCharacteristic&) = delete;
    ScopedCharacteristic& operator=(const ScopedCharacteristic&) = delete;

private:
    std::uint32_t previous_;
};

template <typename Scalar>
struct FieldTraits;

template <>
struct FieldTraits<Rational>
{
    static std::string name() { return "QQ"; }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static Rational from_int(long long v) { return Rational(v); }
};

template <>
struct FieldTraits<Zp>
{
    static std::string name() { return "GF(" + std::to_string(Zp::characteristic()) + ")"; }
    static bool is_zero(const Zp& x) { return x.value() == 0; }
    static Zp from_int(long long v) { return Zp(v); }
};

template <typename Scalar>
bool is_zero(const Scalar& x)
{
    return FieldTraits<Scalar>::is_zero(x);
}

template <typename Scalar>
std::string field_name()
{
    return FieldTraits<Scalar>::name();
}

inline bool is_prime(std::uint32_t p)
{
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return p < (1u << 31);
}

} // namespace cellmac

namespace Eigen {
template <>
struct NumTraits<cellmac::Zp> : GenericNumTraits<cellmac::Zp>
{
    using Real = cellmac::Zp;
    using NonInteger = cellmac::Zp;
    using Nested = cellmac::Zp;
    using Literal = cellmac::Zp;
    enum
    {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 0,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};
} // namespace Eigen

#endif
