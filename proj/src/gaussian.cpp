#include "gaussian.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace rcg::gaussian {
namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kInvSqrt2Pi = 0.3989422804014327;

// Abramowitz & Stegun 26.2.23 rational tail approximation, |error| < 4.5e-4.
double tail_guess(double pp) {
  const double t = std::sqrt(-2.0 * std::log(pp));
  return t - (2.515517 + t * (0.802853 + t * 0.010328)) /
                 (1.0 + t * (1.432788 + t * (0.189269 + t * 0.001308)));
}

}  // namespace

double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw ValidationError("normal_quantile: p = " + std::to_string(p) +
                          " outside (0, 1)");
  double x = p < 0.5 ? -tail_guess(p) : tail_guess(1.0 - p);
  for (int i = 0; i < 3; ++i) {
    const double e = normal_cdf(x) - p;
    const double u = e / normal_pdf(x);
    x -= u / (1.0 + 0.5 * x * u);  // Halley step
  }
  return x;
}

double NormalStream::uniform() {
  for (;;) {
    const double u =
        static_cast<double>(rng_() >> 11) * (1.0 / 9007199254740992.0);
    if (u > 0.0 && u < 1.0) return u;
  }
}

double NormalStream::next() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  for (;;) {
    const double v1 = 2.0 * uniform() - 1.0;
    const double v2 = 2.0 * uniform() - 1.0;
    const double s = v1 * v1 + v2 * v2;
    if (s > 0.0 && s < 1.0) {
      const double factor = std::sqrt(-2.0 * std::log(s) / s);
      spare_ = v2 * factor;
      have_spare_ = true;
      return v1 * factor;
    }
  }
}

}  // namespace rcg::gaussian
