#pragma once

#include <cstdint>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace qrec {

// Counter-based splittable generator. The whole output sequence is a pure
// function of (seed, stream_id, n), so replicas on disjoint stream ids are
// reproducible regardless of scheduling.
inline constexpr const char* kAlgorithmVersion = "splitmix64ctr-v1";

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
    std::string algorithm_version = kAlgorithmVersion;
    std::uint64_t counter = 0;

    RngStream() : RngStream(0, 0) {}
    RngStream(std::uint64_t seed_in, std::uint64_t stream_id_in)
        : seed(seed_in), stream_id(stream_id_in) {
        key_ = mix64(seed ^ 0x9E3779B97F4A7C15ull) ^ mix64(stream_id ^ 0xD1B54A32D192ED03ull);
    }

    std::uint64_t next_u64() {
        std::uint64_t v = key_ + (++counter) * 0x9E3779B97F4A7C15ull;
        return mix64(v);
    }

    // Uniform on the open interval (0,1); never returns 0 or 1.
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Independent child stream; distinct child indices give distinct stream ids.
    RngStream substream(std::uint64_t child) const {
        return RngStream(seed, mix64(stream_id ^ (0x632BE59BD9B4E019ull + child * 0x9E3779B97F4A7C15ull)));
    }

private:
    std::uint64_t key_ = 0;
};

// FNV-1a over the name; stable way to derive a stream id from a label.
inline std::uint64_t stream_id_for(const std::string& name) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline double exp_sample(RngStream& stream, double rate) {
    if (!(rate > 0.0)) throw std::invalid_argument("exp_sample: rate must be positive");
    return -std::log(stream.uniform()) / rate;
}

// P(B <= z) = z^k on [0,1].
inline double beta_k1_sample(RngStream& stream, double k) {
    if (!(k > 0.0)) throw std::invalid_argument("beta_k1_sample: k must be positive");
    double u = stream.uniform();
    if (k == 1.0) return u;
    return std::pow(u, 1.0 / k);
}

namespace detail {

// Standard normal via the polar rejection method.
inline double normal_sample(RngStream& stream) {
    for (;;) {
        double u = 2.0 * stream.uniform() - 1.0;
        double v = 2.0 * stream.uniform() - 1.0;
        double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
    }
}

// Marsaglia-Tsang squeeze method, shape >= 1, unit rate.
inline double gamma_ge1_sample(RngStream& stream, double shape) {
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = normal_sample(stream);
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = stream.uniform();
        double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace detail

// Integer shape: exact sum of shape exponential draws (construction identity).
// Real shape: Marsaglia-Tsang for shape >= 1, boosted by U^{1/shape} below 1.
inline double gamma_sample(RngStream& stream, double shape_k, double rate_t) {
    if (!(shape_k > 0.0) || !(rate_t > 0.0))
        throw std::invalid_argument("gamma_sample: parameters must be positive");
    if (shape_k == std::floor(shape_k) && shape_k <= 64.0) {
        double s = 0.0;
        int n = static_cast<int>(shape_k);
        for (int i = 0; i < n; ++i) s += exp_sample(stream, rate_t);
        return s;
    }
    if (shape_k >= 1.0) return detail::gamma_ge1_sample(stream, shape_k) / rate_t;
    double g = detail::gamma_ge1_sample(stream, shape_k + 1.0);
    return g * std::pow(stream.uniform(), 1.0 / shape_k) / rate_t;
}

// Count of unit-rate arrivals before `mean`; exact for any mean >= 0.
inline std::int64_t poisson_count(RngStream& stream, double mean) {
    if (!(mean >= 0.0)) throw std::invalid_argument("poisson_count: mean must be nonnegative");
    std::int64_t n = 0;
    double s = exp_sample(stream, 1.0);
    while (s <= mean) {
        ++n;
        s += exp_sample(stream, 1.0);
    }
    return n;
}

// Index N >= 1 of the first success with success probabilities
// 1/k, 1/(k+1), 1/(k+2), ...; nullopt when no success within cap trials.
// The law is heavy tailed: P(N > n) = (k-1)/(k+n-1), so overflow has
// probability ~ (k-1)/cap.
inline std::optional<std::int64_t> harmonic_first_success(RngStream& stream, std::int64_t k,
                                                          std::int64_t cap = 1000000) {
    if (k < 1) throw std::invalid_argument("harmonic_first_success: k must be >= 1");
    if (cap < 1) throw std::invalid_argument("harmonic_first_success: cap must be >= 1");
    for (std::int64_t j = 1; j <= cap; ++j) {
        if (stream.uniform() * static_cast<double>(k + j - 1) < 1.0) return j;
    }
    return std::nullopt;
}

}  // namespace qrec
