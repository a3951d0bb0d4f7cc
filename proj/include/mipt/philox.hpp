#pragma once

#include <array>
#include <cstdint>

namespace mipt {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// Every uniform draw is a pure function of (key, stream, counter), so any
/// draw can be reproduced from its index alone.  Distinct stream ids give
/// statistically independent sequences without coordination, which is what
/// lets trajectories run on any number of workers and still replay exactly.
struct Philox4x32 {
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                              std::array<std::uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = std::uint64_t(kMul0) * ctr[0];
            const std::uint64_t p1 = std::uint64_t(kMul1) * ctr[2];
            ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0],
                   std::uint32_t(p1),
                   std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1],
                   std::uint32_t(p0)};
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        return ctr;
    }
};

/// A single randomness stream: key = master seed, counter words carry
/// (stream id, draw index).  One 64-bit uniform per counter tick.
class RandomStream {
  public:
    RandomStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_(stream_id) {}

    /// Raw 64 bits of draw `index` without touching the cursor.
    std::uint64_t bits_at(std::uint64_t index) const {
        const auto out = Philox4x32::block(
            {std::uint32_t(index), std::uint32_t(index >> 32),
             std::uint32_t(stream_), std::uint32_t(stream_ >> 32)},
            {std::uint32_t(seed_), std::uint32_t(seed_ >> 32)});
        return (std::uint64_t(out[0]) << 32) | out[1];
    }

    /// Next uniform in [0, 1) with 53-bit resolution; consumes one draw.
    double uniform() { return double(bits_at(counter_++) >> 11) * 0x1.0p-53; }

    /// Skip draws without evaluating them (used by event-log replay).
    void skip(std::uint64_t n) { counter_ += n; }

    std::uint64_t draws_consumed() const { return counter_; }
    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_; }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

}  // namespace mipt
