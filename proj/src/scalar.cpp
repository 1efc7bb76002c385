#include "groupoidkit/scalar.hpp"

#include <numbers>
#include <numeric>
#include <stdexcept>

namespace gk {

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("GaussianRational: division by zero");
  const mpq_class norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

std::size_t GaussianRational::height() const {
  auto bits = [](const mpq_class& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
  };
  return bits(re_) + bits(im_);
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "i";
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im_.get_str() + "i";
}

RootOfUnity::RootOfUnity(std::int64_t numerator, std::int64_t order) {
  if (order <= 0) throw std::invalid_argument("RootOfUnity: order must be positive");
  numerator %= order;
  if (numerator < 0) numerator += order;
  const std::int64_t g = std::gcd(numerator, order);
  num_ = numerator / g;
  order_ = order / g;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  const std::int64_t l = std::lcm(order_, o.order_);
  return {num_ * (l / order_) + o.num_ * (l / o.order_), l};
}

std::complex<double> RootOfUnity::to_complex() const {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(order_);
  return std::polar(1.0, angle);
}

}  // namespace gk
