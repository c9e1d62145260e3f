#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace prefopt {

// Error taxonomy. Everything derives from std::runtime_error so callers can
// catch broadly, but tests can pin the exact failure class.
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Named sub-streams so every consumer of randomness hangs off one of the two
// user-facing seeds without collisions.
enum class SeedStream : uint64_t {
    param_init = 1,
    data_pair = 2,
    shuffle = 3,
    probe = 4,
    grad_check = 5,
    mc_question = 6,
    test = 7,
};

inline uint64_t derive_seed(uint64_t base, SeedStream stream, uint64_t index = 0) {
    uint64_t h = splitmix64(base ^ (static_cast<uint64_t>(stream) * 0xA24BAED4963EE407ULL));
    return splitmix64(h ^ (index * 0x9FB21C651E98DF25ULL));
}

// Deterministic RNG: mt19937_64 core with explicit distribution code on top.
// std::normal_distribution and std::shuffle are implementation-defined, so we
// pin Box-Muller and Fisher-Yates by hand to keep outputs bit-stable.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // uniform in [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform_in(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [0, n)
    int uniform_int(int n) {
        if (n <= 0) throw ContractError("Rng::uniform_int: n must be positive");
        return static_cast<int>(gen_() % static_cast<uint64_t>(n));
    }

    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = gen_() % i;
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// log(sigmoid(x)) without overflow for large |x|
inline double log_sigmoid(double x) {
    const double t = -x;
    return -(std::max(t, 0.0) + std::log1p(std::exp(-std::fabs(t))));
}

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// softplus(x) = log(1 + e^x)
inline double softplus(double x) { return std::max(x, 0.0) + std::log1p(std::exp(-std::fabs(x))); }

// Shortest decimal form that round-trips a double; used for every float we
// serialize so reruns byte-match.
std::string fmt_double(double v);

}  // namespace prefopt
