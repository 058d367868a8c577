#pragma once

#include <array>
#include <cstdint>

namespace polyneq {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11): a keyed
/// bijection of a 128-bit counter. Output depends only on (key, counter).
class Philox4x32 {
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter generate(Counter ctr, Key key) noexcept
    {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
            const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const auto lo0 = static_cast<std::uint32_t>(p0);
            const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const auto lo1 = static_cast<std::uint32_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        }
        return ctr;
    }

private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
};

/// Stream tags keep independent draws of one trial apart.
enum class StreamTag : std::uint32_t {
    Zeros = 1,
    Leading = 2,
    Gamma = 3,
    Alpha = 4,
    Falsify = 5,
};

/// Sequence of draws keyed by (seed, trial, tag); the i-th draw is a pure
/// function of those and i.
class CounterStream {
public:
    CounterStream(std::uint64_t seed, std::uint64_t trial, StreamTag tag) noexcept
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          trial_(trial), tag_(static_cast<std::uint32_t>(tag))
    {
    }

    std::uint64_t next_u64() noexcept
    {
        if (lane_ == 2) {
            const Philox4x32::Counter ctr = {block_, tag_, static_cast<std::uint32_t>(trial_),
                                             static_cast<std::uint32_t>(trial_ >> 32)};
            out_ = Philox4x32::generate(ctr, key_);
            ++block_;
            lane_ = 0;
        }
        const std::uint64_t v = (static_cast<std::uint64_t>(out_[2 * lane_]) << 32) | out_[2 * lane_ + 1];
        ++lane_;
        return v;
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    Philox4x32::Key key_;
    std::uint64_t trial_;
    std::uint32_t tag_;
    std::uint32_t block_ = 0;
    Philox4x32::Counter out_{};
    int lane_ = 2;
};

} // namespace polyneq
