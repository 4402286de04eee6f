#ifndef LUI_RATIONAL_HPP
#define LUI_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

#include "lui/errors.hpp"

namespace lui {

using Rational = mpq_class;

/// Parse "p/q" or "p" into a canonical rational. Rejects q = 0.
inline Rational parse_rational(std::string_view text) {
  try {
    Rational r(std::string(text), 10);
    if (r.get_den() == 0) throw validation_error("rational with zero denominator: " + std::string(text));
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw validation_error("malformed rational: " + std::string(text));
  }
}

inline std::string rational_str(const Rational& r) { return r.get_str(); }

/// Complex number with exact rational real and imaginary parts.
class GaussianRational {
public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {} // NOLINT: implicit by design
  GaussianRational(Rational re, Rational im = Rational(0)) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational parse(std::string_view re, std::string_view im) {
    return {parse_rational(re), parse_rational(im)};
  }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  /// |z|^2 as an exact rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.norm();
    if (n == 0) throw std::domain_error("division by zero GaussianRational");
    return {(a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n};
  }
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
  GaussianRational& operator*=(const GaussianRational& o) {
    *this = *this * o;
    return *this;
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  std::string str() const {
    if (im_ == 0) return re_.get_str();
    std::string s = re_.get_str();
    s += (im_ > 0) ? " + " : " - ";
    s += abs(im_).get_str();
    s += "i";
    return s;
  }

private:
  Rational re_, im_;
};

} // namespace lui

#endif
