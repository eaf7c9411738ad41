#include "awrel/scalar.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace awrel {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DivisionByZero: return "division_by_zero";
        case ErrorCode::ParseError: return "parse_error";
        case ErrorCode::DimensionMismatch: return "dimension_mismatch";
        case ErrorCode::IndexOutOfRange: return "index_out_of_range";
        case ErrorCode::DiameterTooSmall: return "diameter_too_small";
        case ErrorCode::InconsistentFormulas: return "inconsistent_formulas";
        case ErrorCode::ZeroScale: return "zero_scale";
        case ErrorCode::Underdetermined: return "underdetermined";
        case ErrorCode::Inconsistent: return "inconsistent";
        case ErrorCode::DegenerateParameters: return "degenerate_parameters";
        case ErrorCode::NotCovered: return "not_covered";
        case ErrorCode::FieldTooSmall: return "field_too_small";
        case ErrorCode::InvalidSquareRoot: return "invalid_square_root";
        case ErrorCode::SingularMatrix: return "singular_matrix";
        case ErrorCode::InvalidArgument: return "invalid_argument";
    }
    return "unknown";
}

Scalar::Scalar(long num, long den) {
    if (den == 0)
        throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
    re_ = mpq_class(num, den);
    re_.canonicalize();
}

Scalar Scalar::rational(const mpq_class& re) {
    Scalar x;
    x.re_ = re;
    x.re_.canonicalize();
    return x;
}

Scalar Scalar::gaussian(const mpq_class& re, const mpq_class& im) {
    Scalar x;
    x.re_ = re;
    x.im_ = im;
    x.re_.canonicalize();
    x.im_.canonicalize();
    return x;
}

Scalar Scalar::imaginary_unit() { return gaussian(0, 1); }

Scalar Scalar::operator-() const { return gaussian(-re_, -im_); }

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero())
        throw Error(ErrorCode::DivisionByZero, "division by zero scalar");
    // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2); the norm is zero only at zero.
    mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / norm;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / norm;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

bool Scalar::less(const Scalar& a, const Scalar& b) {
    if (!a.is_real() || !b.is_real())
        throw Error(ErrorCode::InvalidArgument, "order comparison of nonreal scalars");
    return a.re_ < b.re_;
}

Scalar inv(const Scalar& x) {
    if (x.is_zero())
        throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return Scalar(1) / x;
}

Scalar pow(const Scalar& x, long n) {
    if (n < 0) {
        if (x.is_zero())
            throw Error(ErrorCode::DivisionByZero, "negative power of zero");
        return pow(inv(x), -n);
    }
    Scalar result(1);
    Scalar base = x;
    unsigned long e = static_cast<unsigned long>(n);
    while (e != 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Scalar Scalar::parse_rational(std::string_view text) {
    size_t pos = 0;
    auto fail = [&](const std::string& what) -> Error {
        return Error(ErrorCode::ParseError,
                     what + " at position " + std::to_string(pos) + " in \"" +
                         std::string(text) + "\"");
    };
    if (text.empty()) throw fail("empty scalar");
    bool negative = false;
    if (text[pos] == '-') {
        negative = true;
        ++pos;
    }
    auto read_digits = [&]() -> std::string {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) throw fail("expected digits");
        return std::string(text.substr(start, pos - start));
    };
    std::string num = read_digits();
    std::string den = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_digits();
    }
    if (pos != text.size()) throw fail("unexpected character");
    mpq_class d(den);
    if (d == 0)
        throw Error(ErrorCode::DivisionByZero,
                    "zero denominator in \"" + std::string(text) + "\"");
    mpq_class value = mpq_class(num) / d;
    if (negative) value = -value;
    return Scalar::rational(value);
}

std::string Scalar::str() const {
    if (is_real()) return re_.get_str();
    return re_.get_str() + "+" + im_.get_str() + "*i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

}  // namespace awrel
