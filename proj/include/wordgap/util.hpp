#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace wordgap {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(std::uint64_t base, unsigned exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

// splitmix64; used for seed mixing and instance hashing.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
    return mix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

// Deterministic PRNG with explicit state; identical streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    // Unbiased value in [0, n).
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

  private:
    std::uint64_t state_;
};

// Runs fn(chunk_index, begin, end) over [0, n) split into roughly even chunks,
// one per worker. Results must be merged by the caller from per-chunk slots so
// the outcome is schedule-independent.
inline void parallel_chunks(std::uint64_t n, unsigned threads,
                            const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
    if (threads == 0) threads = 1;
    if (threads == 1 || n < 2) {
        fn(0, 0, n);
        return;
    }
    if (threads > n) threads = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::uint64_t step = n / threads, extra = n % threads;
    std::uint64_t begin = 0;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t end = begin + step + (t < extra ? 1 : 0);
        pool.emplace_back(fn, t, begin, end);
        begin = end;
    }
    for (auto& th : pool) th.join();
}

inline unsigned default_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

}  // namespace wordgap
