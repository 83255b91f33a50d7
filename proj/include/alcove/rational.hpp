#pragma once

// Exact arithmetic kernel: 64-bit integers with overflow-checked operations,
// and rationals built on top of them. Every operation either returns the
// exact result or throws std::overflow_error; nothing wraps silently.

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace alcove {

using Int = long long;
using IntVec = std::vector<Int>;

[[noreturn]] inline void arith_overflow(const char* what)
{
    throw std::overflow_error(std::string("64-bit overflow in ") + what);
}

inline Int add_i(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r)) arith_overflow("addition");
    return r;
}

inline Int sub_i(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) arith_overflow("subtraction");
    return r;
}

inline Int mul_i(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) arith_overflow("multiplication");
    return r;
}

inline Int neg_i(Int a)
{
    return sub_i(0, a);
}

inline Int abs_i(Int a)
{
    return a < 0 ? neg_i(a) : a;
}

inline Int gcd_i(Int a, Int b)
{
    a = abs_i(a);
    b = abs_i(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Floor division for possibly negative numerators (d > 0).
inline Int floor_div(Int n, Int d)
{
    Int q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
    return q;
}

inline Int mod_pos(Int n, Int d)
{
    Int r = n % d;
    if (r < 0) r += abs_i(d);
    return r;
}

class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(Int n) : num_(n), den_(1) {}
    Rat(Int n, Int d) : num_(n), den_(d) { normalize(); }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Int floor() const { return floor_div(num_, den_); }

    Rat operator-() const { return Rat(neg_i(num_), den_, NoNorm{}); }

    friend Rat operator+(const Rat& a, const Rat& b)
    {
        Int g = gcd_i(a.den_, b.den_);
        Int bd = b.den_ / g;
        Int n = add_i(mul_i(a.num_, bd), mul_i(b.num_, a.den_ / g));
        return Rat(n, mul_i(a.den_, bd));
    }

    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

    friend Rat operator*(const Rat& a, const Rat& b)
    {
        Int g1 = gcd_i(a.num_, b.den_);
        Int g2 = gcd_i(b.num_, a.den_);
        return Rat(mul_i(a.num_ / g1, b.num_ / g2),
                   mul_i(a.den_ / g2, b.den_ / g1), NoNorm{});
    }

    friend Rat operator/(const Rat& a, const Rat& b)
    {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return a * Rat(b.den_, b.num_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b)
    {
        return mul_i(a.num_, b.den_) < mul_i(b.num_, a.den_);
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    std::string str() const
    {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    double to_double() const
    {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

private:
    struct NoNorm {};
    Rat(Int n, Int d, NoNorm) : num_(n), den_(d) {}

    void normalize()
    {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = neg_i(num_);
            den_ = neg_i(den_);
        }
        Int g = gcd_i(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    Int num_;
    Int den_;
};

using RatVec = std::vector<Rat>;

inline RatVec to_rat_vec(const IntVec& v)
{
    RatVec r;
    r.reserve(v.size());
    for (Int x : v) r.emplace_back(x);
    return r;
}

}  // namespace alcove
