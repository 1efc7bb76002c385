#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace gk {

/// Exact complex number with rational real and imaginary parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {0, 1}; }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  /// Throws std::domain_error on zero.
  GaussianRational inverse() const;
  /// Bit length of numerators and denominators, a proxy for "simplicity".
  std::size_t height() const;
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string to_string() const;

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
  GaussianRational& operator*=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.to_string();
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// exp(2 pi i * numerator / order), kept in lowest terms.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(std::int64_t numerator, std::int64_t order);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t order() const noexcept { return order_; }

  RootOfUnity operator*(const RootOfUnity& o) const;
  RootOfUnity conj() const { return {-num_, order_}; }
  std::complex<double> to_complex() const;

  bool operator==(const RootOfUnity&) const = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t order_ = 1;
};

/// A value that is either zero or a root of unity: the entries of character
/// functionals and of the Gelfand matrix.
using CyclotomicEntry = std::optional<RootOfUnity>;

inline CyclotomicEntry operator*(const CyclotomicEntry& a, const CyclotomicEntry& b) {
  if (!a || !b) return std::nullopt;
  return *a * *b;
}

inline std::complex<double> to_complex(const CyclotomicEntry& e) {
  return e ? e->to_complex() : std::complex<double>{0.0, 0.0};
}

}  // namespace gk
