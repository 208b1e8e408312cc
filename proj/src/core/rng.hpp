#pragma once

#include <cstdint>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace pkv {

// splitmix64; self-contained so seeded runs are reproducible across platforms
// and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [lo, hi] (inclusive).
    long int_in(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double uniform(double lo, double hi) {
        double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    // Rational with numerator in {-3..3} and denominator in {1..3}.
    mpq_class small_rational() {
        mpq_class q(int_in(-3, 3), int_in(1, 3));
        q.canonicalize();
        return q;
    }

    GaussianRational small_gaussian_rational(bool real_only = false) {
        return GaussianRational(small_rational(), real_only ? mpq_class(0) : small_rational());
    }

    // Random symmetric n x n matrix with small rational entries.
    ExactMatrix symmetric_matrix(std::uint32_t n, bool real_only) {
        ExactMatrix m(n, n);
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = i; j < n; ++j) {
                m.at(i, j) = small_gaussian_rational(real_only);
                m.at(j, i) = m.at(i, j);
            }
        return m;
    }

    std::vector<GaussianRational> rational_vector(std::size_t len, bool real_only = true) {
        std::vector<GaussianRational> v(len);
        for (auto& x : v) x = small_gaussian_rational(real_only);
        return v;
    }

    std::vector<double> double_vector(std::size_t len, double lo, double hi) {
        std::vector<double> v(len);
        for (auto& x : v) x = uniform(lo, hi);
        return v;
    }

private:
    std::uint64_t state_;
};

}  // namespace pkv
