#pragma once

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dcolor {

using NodeId = int;
using Color = long long;

inline constexpr Color kNoColor = -1;

// Thrown when an algorithm reaches a state its own guarantees rule out.
// The CLI maps this to exit code 3.
struct InternalContradiction : std::runtime_error {
    explicit InternalContradiction(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violations (bad parameters, unusable instances). Exit code 2.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Exact nonnegative rational, used wherever thresholds like 2+eps must be
// compared without floating point.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n, long long d) : num(n), den(d) {
        if (den <= 0 || num < 0) throw std::invalid_argument("Rat: need num >= 0, den > 0");
        normalize();
    }

    void normalize() {
        long long g = std::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    // Doubles are dyadic rationals; this recovers them exactly for the
    // denominators we care about (eps values like 0.25, 0.5, 1).
    static Rat from_double(double x) {
        if (x < 0) throw std::invalid_argument("Rat: negative");
        double scaled = x;
        long long den = 1;
        for (int i = 0; i < 40 && scaled != static_cast<double>(static_cast<long long>(scaled)); ++i) {
            scaled *= 2;
            den *= 2;
        }
        return Rat(static_cast<long long>(scaled), den);
    }

    double as_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    Rat plus_int(long long k) const { return Rat(num + k * den, den); }
    Rat half() const { return Rat(num, 2 * den); }
    Rat over_int(long long k) const { return Rat(num, den * k); }

    // ceil(1 / this); this > 0 required.
    long long ceil_inverse() const {
        if (num == 0) throw std::invalid_argument("Rat: ceil_inverse of 0");
        return (den + num - 1) / num;
    }
};

// a <= r * b, exactly. b >= 0 assumed.
inline bool leq_times(long long a, const Rat& r, long long b) {
    return static_cast<__int128>(a) * r.den <= static_cast<__int128>(r.num) * b;
}

// a > r * b, exactly.
inline bool gt_times(long long a, const Rat& r, long long b) {
    return !leq_times(a, r, b);
}

// SplitMix64: the fixed PRNG behind every seeded generator in this project.
// Chosen because its output is a pure function of (seed, draw index), so
// generated graphs replay bit-exactly across platforms and runs.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1) with 53 bits of mantissa.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

private:
    std::uint64_t state_;
};

inline int ceil_log2(long long x) {
    if (x <= 1) return 0;
    return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(x - 1)));
}

// Largest s with s^r <= x (integer r-th root).
inline long long floor_root(long long x, int r) {
    if (x <= 0) return 0;
    if (r <= 1) return x;
    long long lo = 1, hi = x;
    while (lo < hi) {
        long long mid = lo + (hi - lo + 1) / 2;
        __int128 p = 1;
        bool over = false;
        for (int i = 0; i < r; ++i) {
            p *= mid;
            if (p > x) { over = true; break; }
        }
        if (over) hi = mid - 1; else lo = mid;
    }
    return lo;
}

// Smallest e with e^r >= x.
inline long long ceil_root(long long x, int r) {
    long long f = floor_root(x, r);
    __int128 p = 1;
    for (int i = 0; i < r; ++i) p *= f;
    return (p >= x) ? f : f + 1;
}

// base^exp, saturating at cap. Guarantee factors computed this way stay
// comparable without overflow; a saturated factor simply guarantees nothing.
inline long long sat_pow(long long base, int exp, long long cap = (1LL << 50)) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > cap / std::max<long long>(base, 1)) return cap;
        r *= base;
    }
    return std::min(r, cap);
}

} // namespace dcolor
