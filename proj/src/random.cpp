#include "paircert/random.hpp"

#include <cmath>

namespace paircert {

namespace {

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::string_view component, std::uint64_t index) {
    return splitmix64(base ^ fnv1a(component) ^ splitmix64(index * 0x9e3779b97f4a7c15ULL + 1));
}

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

long long Rng::poisson(double mean) {
    if (mean <= 0.0) return 0;

    if (mean < 30.0) {
        // Knuth multiplication method.
        const double limit = std::exp(-mean);
        double prod = uniform();
        long long k = 0;
        while (prod > limit) {
            prod *= uniform();
            ++k;
        }
        return k;
    }

    // PTRS (Hormann 1993): transformed rejection with squeeze, valid for
    // mean >= 10; used here above 30 where the simple method gets slow.
    const double slam = std::sqrt(mean);
    const double loglam = std::log(mean);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);

    for (;;) {
        const double u = uniform() - 0.5;
        const double v = uniform();
        const double us = 0.5 - std::abs(u);
        const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r) return static_cast<long long>(kf);
        if (kf < 0.0 || (us < 0.013 && v > us)) continue;
        const double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
        const double rhs = kf * loglam - mean - std::lgamma(kf + 1.0);
        if (lhs <= rhs) return static_cast<long long>(kf);
    }
}

}  // namespace paircert
