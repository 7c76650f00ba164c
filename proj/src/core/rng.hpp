#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace qst {

// Seeded RNG with hand-rolled variate transforms. std::mt19937_64 output is
// bit-exact per the standard, but the std distributions are not; doing the
// uniform/normal mapping here keeps every seeded run reproducible across
// compilers and standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n).
    uint64_t below(uint64_t n) {
        uint64_t v = static_cast<uint64_t>(uniform01() * static_cast<double>(n));
        return v >= n ? n - 1 : v;
    }

    // Standard normal via Box-Muller (cosine branch only).
    double normal() {
        double u1 = 1.0 - uniform01();  // (0, 1]
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double normal(double mean, double sigma) { return mean + sigma * normal(); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace qst
