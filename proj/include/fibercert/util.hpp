#ifndef FIBERCERT_UTIL_HPP
#define FIBERCERT_UTIL_HPP

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <numeric>
#include <thread>
#include <vector>

namespace fibercert {

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// x^-1 mod p, p prime, x not divisible by p.
inline long inverse_mod(long x, long p) {
    x %= p;
    if (x < 0) x += p;
    long r0 = p, r1 = x, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long r2 = r0 - q * r1;
        long s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    long inv = s0 % p;
    return inv < 0 ? inv + p : inv;
}

// Evaluates f(0..n-1) into a vector, using up to `jobs` worker threads.
// Results land at their own index, so the output is schedule-independent.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t n, int jobs, F&& f) {
    std::vector<T> out(n);
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            out[i] = f(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n || failed.load())
                return;
            try {
                out[i] = f(i);
            } catch (...) {
                if (!failed.exchange(true))
                    error = std::current_exception();
                return;
            }
        }
    };
    std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    for (std::size_t i = 0; i < nthreads; ++i)
        threads.emplace_back(worker);
    for (auto& t : threads)
        t.join();
    if (failed.load())
        std::rethrow_exception(error);
    return out;
}

} // namespace fibercert

#endif
