#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "derivlab/errors.hpp"

namespace derivlab {

/// Field of rational numbers with arbitrary-precision arithmetic.
/// Elements are always stored in lowest terms with positive denominator
/// (cpp_rational canonicalizes on construction).
struct RationalField {
    using Elem = boost::multiprecision::cpp_rational;

    static constexpr const char* name() { return "Q"; }
    std::uint64_t characteristic() const { return 0; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_long(long long n) const { return Elem(n); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("division by zero");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    int cmp(const Elem& a, const Elem& b) const { return a < b ? -1 : (b < a ? 1 : 0); }

    /// Value of the literal [-]num[/den] in this field.
    Elem from_fraction(bool negative, const std::string& num, const std::string& den) const {
        using boost::multiprecision::cpp_int;
        cpp_int n(num), d(den);
        if (d == 0) throw std::domain_error("zero denominator in rational literal");
        Elem v(n, d);
        return negative ? Elem(-v) : v;
    }

    std::string str(const Elem& a) const { return a.str(); }

    bool operator==(const RationalField&) const { return true; }
};

/// Prime field F_p for p < 2^32. Elements are residues in [0, p).
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2 || p > 0xFFFFFFFFULL || !is_prime(p))
            throw std::invalid_argument("PrimeField modulus must be a prime < 2^32");
    }

    static constexpr const char* name() { return "Fp"; }
    std::uint64_t characteristic() const { return p_; }
    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem from_long(long long n) const {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }

    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("division by zero");
        return pow(a, p_ - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == one(); }
    bool equal(Elem a, Elem b) const { return a == b; }
    int cmp(Elem a, Elem b) const { return a < b ? -1 : (a > b ? 1 : 0); }

    Elem from_fraction(bool negative, const std::string& num, const std::string& den) const {
        Elem n = reduce_decimal(num);
        Elem d = reduce_decimal(den);
        if (d == 0) throw std::domain_error("denominator divisible by the characteristic");
        Elem v = div(n, d);
        return negative ? neg(v) : v;
    }

    std::string str(Elem a) const { return std::to_string(a); }

    bool operator==(const PrimeField& other) const { return p_ == other.p_; }

private:
    Elem pow(Elem base, std::uint64_t e) const {
        Elem r = one(), b = base;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    Elem reduce_decimal(const std::string& digits) const {
        Elem r = 0;
        for (char c : digits) r = (r * 10 + static_cast<Elem>(c - '0')) % p_;
        return r;
    }

    static bool is_prime(std::uint64_t n) {
        if (n < 4) return n >= 2;
        if (n % 2 == 0) return false;
        for (std::uint64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

    std::uint64_t p_;
};

}  // namespace derivlab
