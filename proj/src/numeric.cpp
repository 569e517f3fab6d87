#include "hyperdiv/numeric.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>
#include <vector>

namespace hyperdiv {

std::complex<double> unit_phase(double t) {
    double r = t - std::floor(t);
    if (r >= 1.0) r = 0.0;  // floor rounding can leave r == 1.0 for tiny negative t
    const double a = 2.0 * std::numbers::pi * r;
    return {std::cos(a), std::sin(a)};
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
    threads = resolve_threads(threads);
    if (count == 0) return;
    if (threads <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                next.store(count);  // drain remaining work
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned n = threads < count ? threads : static_cast<unsigned>(count);
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

std::uint64_t integer_sqrt(std::uint64_t x) {
    if (x == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

}  // namespace hyperdiv
