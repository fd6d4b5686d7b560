#pragma once

#include <complex>
#include <gmpxx.h>
#include <string>

namespace frolicher {

// Exact element of Q(i), stored as a pair of GMP rationals.
class GaussianRational {
  public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}
    GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    // Accepts "3", "-1/2".  Throws ParseError otherwise.
    static mpq_class parse_rational(const std::string &text);

    const mpq_class &re() const { return re_; }
    const mpq_class &im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    GaussianRational inverse() const;  // throws NumericError on zero
    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
    std::string str() const;

    GaussianRational &operator+=(const GaussianRational &o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational &operator-=(const GaussianRational &o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational &operator*=(const GaussianRational &o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational &operator/=(const GaussianRational &o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational &b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational &b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational &a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

  private:
    mpq_class re_{0};
    mpq_class im_{0};
};

inline const GaussianRational kImaginaryUnit{mpq_class(0), mpq_class(1)};

}  // namespace frolicher
