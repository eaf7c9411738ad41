#ifndef AWREL_SCALAR_HPP
#define AWREL_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "awrel/error.hpp"

namespace awrel {

// Working field selector for I/O and capability checks. Arithmetic itself is
// always carried out in Q(i); a value belongs to Q exactly when im == 0.
enum class Field {
    Rational,
    Gaussian,
};

// Exact element of Q(i): re + im*i with arbitrary-precision rational parts,
// kept canonical (reduced fractions, positive denominators) at all times.
class Scalar {
public:
    Scalar() : re_(0) {}
    Scalar(long n) : re_(n) {}
    Scalar(int n) : re_(n) {}
    Scalar(long num, long den);

    static Scalar rational(const mpq_class& re);
    static Scalar gaussian(const mpq_class& re, const mpq_class& im);
    static Scalar imaginary_unit();

    // Parses the text form "[-]p[/q]".
    static Scalar parse_rational(std::string_view text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Order comparison of real values; rejects nonreal operands.
    static bool less(const Scalar& a, const Scalar& b);

    // "p/q" or "p" for real values; "re+im*i" otherwise (display only; the
    // JSON form of a nonreal value is structured).
    std::string str() const;

private:
    mpq_class re_;
    mpq_class im_;
};

Scalar inv(const Scalar& x);
Scalar pow(const Scalar& x, long n);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace awrel

#endif
