#pragma once

#include <cstdint>

#include "sebmcr/common.hpp"
#include "sebmcr/matrix.hpp"

namespace sebmcr {

// Counter-based generator: output k depends only on (seed, stream_id, k),
// so substreams with distinct stream_id are independent and a stream can be
// filled in any order. splitmix64 finalizer over key + counter.
class Rng {
   public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream_id = 0)
        : seed_(seed), stream_(stream_id), key_(derive_key(seed, stream_id)) {}

    // Independent stream derived from this one's identity plus a tag.
    Rng substream(std::uint64_t tag) const { return Rng(seed_, mix64(stream_ ^ mix64(tag + 0x9E3779B97F4A7C15ULL))); }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_; }
    std::uint64_t counter() const { return ctr_; }

    std::uint64_t next_u64() { return at(ctr_++); }

    // Uniform on (0, 1), never exactly 0 or 1.
    double next_uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

    // Uniform integer in [0, n). Multiply-shift mapping of one 64-bit draw.
    std::uint64_t next_below(std::uint64_t n) {
        require_arg(n > 0, "Rng::next_below: n must be positive");
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    double next_gaussian(double mean = 0.0, double std = 1.0);
    double next_gumbel();
    double next_uniform_range(double lo, double hi) { return lo + (hi - lo) * next_uniform(); }

    void fill_gaussian(Matrix& m, double mean, double std);
    void fill_gumbel(Matrix& m);

private:
    static std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream) {
        return mix64(mix64(seed + 0x9E3779B97F4A7C15ULL) ^ (stream + 0xD1B54A32D192ED03ULL));
    }
    std::uint64_t at(std::uint64_t ctr) const { return mix64(key_ + ctr * 0x9E3779B97F4A7C15ULL); }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
};

// i.i.d. normal draws, deterministic under fixed Rng state.
Matrix gaussian(Rng& rng, double mean, double std, std::size_t rows, std::size_t cols);

}  // namespace sebmcr
