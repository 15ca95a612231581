#pragma once

#include <cstdint>
#include <random>

namespace rcg::gaussian {

// Standard normal CDF, accurate in both tails (erfc based).
double normal_cdf(double x);
double normal_pdf(double x);

// Inverse standard normal CDF for p in (0, 1). Rational initial guess
// refined by Halley steps on the erfc-based CDF; relative error near machine
// precision over the plotting-position range.
double normal_quantile(double p);

// Deterministic N(0,1) stream: mt19937_64 plus an explicit polar Box-Muller,
// so the draw sequence is fixed by the seed alone (std::normal_distribution
// is implementation-defined).
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : rng_(seed) {}

  double next();

  // Uniform on (0, 1), never returning the endpoints.
  double uniform();

 private:
  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace rcg::gaussian
