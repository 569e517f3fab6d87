#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace hyperdiv {

// Euler-Mascheroni constant, 17 significant digits.
inline constexpr double kEulerGamma = 0.57721566490153286;

// Neumaier compensated summation; keeps rounding error near one ulp of the
// result even when terms vary over many orders of magnitude.
class CompensatedSum {
  public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class CompensatedComplexSum {
  public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

  private:
    CompensatedSum re_;
    CompensatedSum im_;
};

// e(t) = exp(2*pi*i*t); the argument is reduced mod 1 before the trig calls
// so large phases do not lose the fractional part inside sin/cos.
std::complex<double> unit_phase(double t);

// splitmix64 finalizer; derives independent per-index seeds so randomized
// sweeps give identical output for any thread count.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// Runs fn(i) for i in [0, count). Work items must write only to their own
// per-index slots; the first exception thrown is rethrown after join.
// threads = 0 resolves to the hardware concurrency.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

unsigned resolve_threads(unsigned requested);

// Largest u with u*u <= x, exact for all x below 2^62.
std::uint64_t integer_sqrt(std::uint64_t x);

}  // namespace hyperdiv
