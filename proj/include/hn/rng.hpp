#pragma once

#include <cstdint>
#include <array>

namespace hn {

// Philox4x32-10 counter-based generator. State is (key, counter); output
// blocks are a pure function of both, so any (seed, stream) pair yields an
// independent reproducible sequence regardless of thread scheduling.
//
// Layout: key  = 64-bit seed split into two 32-bit words,
//         ctr  = [position.lo, position.hi, stream.lo, stream.hi].
class Philox {
public:
    Philox(std::uint64_t seed, std::uint64_t stream) noexcept
        : key_{static_cast<std::uint32_t>(seed),
               static_cast<std::uint32_t>(seed >> 32)},
          stream_lo_(static_cast<std::uint32_t>(stream)),
          stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

    // Next raw 32-bit word.
    std::uint32_t next_u32() noexcept {
        if (buf_pos_ == 4) refill();
        return buf_[buf_pos_++];
    }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t lo = next_u32();
        const std::uint64_t hi = next_u32();
        return (hi << 32) | lo;
    }

    // Uniform double in [0, 1), 53 random bits.
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi) noexcept {
        return lo + (hi - lo) * next_double();
    }

    bool next_bit() noexcept { return (next_u32() >> 31) != 0; }

private:
    void refill() noexcept;

    std::array<std::uint32_t, 2> key_;
    std::uint32_t stream_lo_, stream_hi_;
    std::uint64_t position_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int buf_pos_ = 4;
};

// Derives a child seed for task `index` from a base seed. Used to hand
// independent streams to ensemble members and grid tasks.
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) noexcept;

} // namespace hn
