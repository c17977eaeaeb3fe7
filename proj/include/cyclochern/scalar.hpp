#pragma once

// Exact scalars: Gaussian rationals a + b*i with arbitrary-precision
// rational parts. Every identity checked by this library is an exact
// equality in this field; no floating point enters the pipeline.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "cyclochern/error.hpp"

namespace cyclochern {

using Rational = mpq_class;

inline Rational rational_from_string(const std::string& s)
{
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw ParseError("bad rational literal '" + s + "'");
    r.canonicalize();
    return r;
}

class ExactScalar {
public:
    ExactScalar() : re_(0), im_(0) {}
    ExactScalar(long n) : re_(n), im_(0) {} // NOLINT: implicit by design
    ExactScalar(Rational re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }
    ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
    {
        re_.canonicalize();
        im_.canonicalize();
    }
    ExactScalar(long num, long den) : re_(num, den), im_(0) { re_.canonicalize(); }

    static ExactScalar i() { return ExactScalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_rational() const { return sgn(im_) == 0; }

    ExactScalar conj() const { return ExactScalar(re_, -im_); }

    // |z|^2 = re^2 + im^2, a nonnegative rational
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    ExactScalar operator-() const { return ExactScalar(-re_, -im_); }

    ExactScalar& operator+=(const ExactScalar& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    ExactScalar& operator-=(const ExactScalar& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    ExactScalar& operator*=(const ExactScalar& o)
    {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    ExactScalar& operator/=(const ExactScalar& o)
    {
        if (o.is_zero())
            throw DivisionByZero();
        Rational n2 = o.norm2();
        Rational r = (re_ * o.re_ + im_ * o.im_) / n2;
        Rational i = (im_ * o.re_ - re_ * o.im_) / n2;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    ExactScalar inverse() const
    {
        ExactScalar one(1);
        return one / *this;
    }

    // integer powers, negative allowed for nonzero values
    ExactScalar pow(long e) const
    {
        if (e < 0)
            return inverse().pow(-e);
        ExactScalar acc(1), base = *this;
        while (e > 0) {
            if (e & 1)
                acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    std::string to_string() const
    {
        if (is_zero())
            return "0";
        std::string s;
        if (sgn(re_) != 0)
            s += re_.get_str();
        if (sgn(im_) != 0) {
            if (!s.empty() && sgn(im_) > 0)
                s += "+";
            if (im_ == -1)
                s += "-i";
            else if (im_ == 1)
                s += "i";
            else
                s += im_.get_str() + "*i";
        }
        return s;
    }

private:
    Rational re_, im_;
};

inline ExactScalar factorial_scalar(unsigned long n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return ExactScalar(Rational(f));
}

// (2n)!/n!, the raw even Chern coefficient
inline ExactScalar even_chern_coefficient(unsigned long n)
{
    mpz_class a, b;
    mpz_fac_ui(a.get_mpz_t(), 2 * n);
    mpz_fac_ui(b.get_mpz_t(), n);
    Rational r(a);
    r /= Rational(b);
    return ExactScalar(r);
}

// k!! for k >= -1 (with (-1)!! = 1)
inline Rational double_factorial(long k)
{
    if (k <= 0)
        return Rational(1);
    mpz_class f;
    mpz_2fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(f);
}

} // namespace cyclochern
