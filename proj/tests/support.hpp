#pragma once

#include <random>

#include "galinv/exact/complex_rational.hpp"
#include "galinv/exact/matrix.hpp"

namespace galinv::testing {

class RandomExact {
 public:
  explicit RandomExact(unsigned seed) : rng_(seed) {}

  Rational rational(int max_num = 9, int max_den = 6) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    Rational q(num(rng_), den(rng_));
    q.canonicalize();
    return q;
  }

  Rational nonzero_rational(int max_num = 9, int max_den = 6) {
    for (;;) {
      Rational q = rational(max_num, max_den);
      if (q != 0) return q;
    }
  }

  ComplexRational complex(int max_num = 9, int max_den = 6) {
    Rational re = rational(max_num, max_den);
    return {re, rational(max_num, max_den)};
  }

  MatrixCR matrix(std::size_t r, std::size_t c, double density = 1.0) {
    MatrixCR m(r, c);
    std::bernoulli_distribution keep(density);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        if (keep(rng_)) m(i, j) = complex();
      }
    }
    return m;
  }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace galinv::testing
