#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

namespace flipmatch::rng {

// Finalizer from the splitmix64 generator (Vigna). Bijective on uint64_t.
inline constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Top 53 bits mapped to [0, 1).
inline constexpr double to_unit(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Stateless keyed hash of a (key, stream, index) triple. The three inputs
// are folded through mix64 stages so that nearby keys decorrelate.
inline constexpr std::uint64_t keyed_hash(std::uint64_t key, std::uint64_t stream,
                                          std::uint64_t index) {
    std::uint64_t h = mix64(key ^ 0x6a09e667f3bcc909ULL);
    h = mix64(h ^ mix64(stream + 0xd1342543de82ef95ULL));
    h = mix64(h ^ mix64(index + 0xa0761d6478bd642fULL));
    return h;
}

// Sequential splitmix64 stream. Fully portable: arithmetic on uint64_t only,
// so identical seeds give identical draws on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // Uniform integer in [0, n) by rejection; avoids modulo bias and does not
    // depend on std::uniform_int_distribution (which is implementation-defined).
    std::uint64_t bounded(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("bounded: n must be positive");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    double unit() { return to_unit(next()); }

private:
    std::uint64_t state_;
};

template <typename T>
void shuffle(std::span<T> values, SplitMix64& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.bounded(i));
        std::swap(values[i - 1], values[j]);
    }
}

} // namespace flipmatch::rng
