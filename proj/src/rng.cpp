// Copyright olsmc contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "olsmc/rng.hpp"

#include <bit>
#include <cstring>
#include <random>

namespace olsmc {

namespace detail {

namespace {

inline void quarter_round(std::uint32_t& a, std::uint32_t& b, std::uint32_t& c,
                          std::uint32_t& d) {
    a += b;
    d = std::rotl(d ^ a, 16);
    c += d;
    b = std::rotl(b ^ c, 12);
    a += b;
    d = std::rotl(d ^ a, 8);
    c += d;
    b = std::rotl(b ^ c, 7);
}

inline std::uint32_t load_le32(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) |
           (static_cast<std::uint32_t>(p[3]) << 24);
}

}  // namespace

std::array<std::uint32_t, 16> chacha20_init(std::span<const std::uint8_t, 32> key,
                                            std::uint32_t counter,
                                            std::span<const std::uint8_t, 12> nonce) {
    std::array<std::uint32_t, 16> s;
    s[0] = 0x61707865;
    s[1] = 0x3320646e;
    s[2] = 0x79622d32;
    s[3] = 0x6b206574;
    for (std::size_t i = 0; i < 8; ++i) {
        s[4 + i] = load_le32(key.data() + 4 * i);
    }
    s[12] = counter;
    for (std::size_t i = 0; i < 3; ++i) {
        s[13 + i] = load_le32(nonce.data() + 4 * i);
    }
    return s;
}

void chacha20_block(const std::array<std::uint32_t, 16>& state,
                    std::array<std::uint8_t, 64>& out) {
    std::array<std::uint32_t, 16> x = state;
    for (int round = 0; round < 10; ++round) {
        quarter_round(x[0], x[4], x[8], x[12]);
        quarter_round(x[1], x[5], x[9], x[13]);
        quarter_round(x[2], x[6], x[10], x[14]);
        quarter_round(x[3], x[7], x[11], x[15]);
        quarter_round(x[0], x[5], x[10], x[15]);
        quarter_round(x[1], x[6], x[11], x[12]);
        quarter_round(x[2], x[7], x[8], x[13]);
        quarter_round(x[3], x[4], x[9], x[14]);
    }
    for (std::size_t i = 0; i < 16; ++i) {
        const std::uint32_t w = x[i] + state[i];
        out[4 * i + 0] = static_cast<std::uint8_t>(w);
        out[4 * i + 1] = static_cast<std::uint8_t>(w >> 8);
        out[4 * i + 2] = static_cast<std::uint8_t>(w >> 16);
        out[4 * i + 3] = static_cast<std::uint8_t>(w >> 24);
    }
}

}  // namespace detail

ChaCha20Rng::ChaCha20Rng(const Seed& seed) {
    static constexpr std::array<std::uint8_t, 12> kZeroNonce{};
    state_ = detail::chacha20_init(std::span<const std::uint8_t, 32>(seed), 0,
                                   std::span<const std::uint8_t, 12>(kZeroNonce));
}

ChaCha20Rng ChaCha20Rng::from_os_entropy() {
    std::random_device rd;
    Seed seed{};
    for (std::size_t i = 0; i < seed.size(); i += 4) {
        const std::uint32_t w = rd();
        seed[i + 0] = static_cast<std::uint8_t>(w);
        seed[i + 1] = static_cast<std::uint8_t>(w >> 8);
        seed[i + 2] = static_cast<std::uint8_t>(w >> 16);
        seed[i + 3] = static_cast<std::uint8_t>(w >> 24);
    }
    return ChaCha20Rng(seed);
}

void ChaCha20Rng::refill() {
    detail::chacha20_block(state_, block_);
    state_[12] += 1;
    pos_ = 0;
}

void ChaCha20Rng::fill_bytes(std::span<std::uint8_t> out) {
    for (auto& byte : out) {
        byte = next_byte();
    }
}

std::uint8_t ChaCha20Rng::next_byte() {
    if (pos_ == block_.size()) {
        refill();
    }
    return block_[pos_++];
}

std::uint64_t ChaCha20Rng::next_u64() {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        v |= static_cast<std::uint64_t>(next_byte()) << (8 * i);
    }
    return v;
}

std::uint64_t ChaCha20Rng::uniform(std::uint64_t bound) {
    if (bound == 0) {
        return 0;
    }
    if ((bound & (bound - 1)) == 0) {
        return next_u64() & (bound - 1);
    }
    // Largest multiple of bound representable in 64 bits; redraw above it.
    const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
    for (;;) {
        const std::uint64_t v = next_u64();
        if (v < limit) {
            return v % bound;
        }
    }
}

}  // namespace olsmc
