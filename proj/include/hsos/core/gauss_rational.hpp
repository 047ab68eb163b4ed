#pragma once

#include <complex>
#include <ostream>
#include <string>

#include "hsos/core/rational.hpp"

namespace hsos {

/// Element a + b*i of the Gaussian rationals Q(i). This is the coefficient
/// field for every polynomial, form and matrix in the library.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }

  /// |x|^2 = x * conj(x), always a nonnegative rational.
  Rational norm_sq() const { return re_ * re_ + im_ * im_; }

  GaussRational inverse() const {
    Rational n = norm_sq();
    if (sgn(n) == 0) throw DivisionByZero();
    return {re_ / n, -im_ / n};
  }

  GaussRational operator-() const { return {-re_, -im_}; }

  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
      re_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational s = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(s);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    if (o.is_zero()) throw DivisionByZero();
    if (sgn(o.im_) == 0) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    return *this *= o.inverse();
  }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Text accepted back by the polynomial parser: "3", "-1/2", "i",
  /// "-2*i", "(1/2+3*i)".
  std::string str() const {
    if (is_real()) return re_.get_str();
    std::string imag;
    if (im_ == 1) {
      imag = "i";
    } else if (im_ == -1) {
      imag = "-i";
    } else {
      imag = im_.get_str() + "*i";
    }
    if (sgn(re_) == 0) return imag;
    std::string out = "(" + re_.get_str();
    if (sgn(im_) > 0) out += "+";
    return out + imag + ")";
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline GaussRational conjugate(const GaussRational& a) { return a.conj(); }

inline std::ostream& operator<<(std::ostream& os, const GaussRational& a) {
  return os << a.str();
}

}  // namespace hsos
