#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace pkv {

// Complex number with exact rational real and imaginary parts.
// mpq_class keeps every value canonical (positive denominator, lowest terms),
// which the rest of the exact pipeline relies on.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}
    GaussianRational(const mpq_class& re) : re_(re), im_(0) {}
    GaussianRational(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {}

    static GaussianRational make(long num, long den, long inum = 0, long iden = 1);
    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }
    // |q|^2 as a rational (always real and nonnegative).
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
    GaussianRational operator+(const GaussianRational& o) const {
        return GaussianRational(re_ + o.re_, im_ + o.im_);
    }
    GaussianRational operator-(const GaussianRational& o) const {
        return GaussianRational(re_ - o.re_, im_ - o.im_);
    }
    GaussianRational operator*(const GaussianRational& o) const {
        return GaussianRational(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    GaussianRational operator/(const GaussianRational& o) const;

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
    double to_double() const;

    // Report form "a/b+c/d*i" with zero parts omitted ("0" for zero).
    std::string str() const;

    // Parses the literal grammar `[-]a[/b][+|-c[/d]i]`, e.g. "1", "-3/4+1/2i", "0+1i".
    static GaussianRational parse(const std::string& text);

private:
    mpq_class re_, im_;
};

GaussianRational operator*(long s, const GaussianRational& q);

}  // namespace pkv
