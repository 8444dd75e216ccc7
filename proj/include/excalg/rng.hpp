#ifndef EXCALG_RNG_HPP
#define EXCALG_RNG_HPP

#include <excalg/matrix.hpp>

#include <cstdint>
#include <string>

namespace excalg {

/*
 * Deterministic splitmix64 generator. Every sampled suite derives its own
 * stream from (master seed, suite name), so reports are reproducible and
 * independent of suite execution order.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static Rng for_suite(std::uint64_t master_seed, const std::string& suite) {
        // FNV-1a over the suite name, mixed into the master seed.
        std::uint64_t h = 1469598103934665603ULL;
        for (unsigned char c : suite) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        return Rng(master_seed ^ h);
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Small integer in [-bound, bound]; keeps exact arithmetic cheap.
    long small_int(long bound = 4) {
        return static_cast<long>(below(2 * static_cast<std::uint64_t>(bound) + 1)) - bound;
    }
    long nonzero_int(long bound = 4) {
        long v = 0;
        while (v == 0) v = small_int(bound);
        return v;
    }

    template <typename F>
    F scalar(long bound = 4) { return F::from_int(small_int(bound)); }

    template <typename F>
    F nonzero_scalar(long bound = 4) { return F::from_int(nonzero_int(bound)); }

    template <typename F>
    Vec<F> vector(std::size_t n, long bound = 4) {
        Vec<F> v(n);
        for (auto& x : v) x = scalar<F>(bound);
        return v;
    }

private:
    std::uint64_t state_;
};

} // namespace excalg

#endif // EXCALG_RNG_HPP
