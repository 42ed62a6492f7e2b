// Copyright olsmc contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace olsmc {

/// Deterministic random generator backed by the ChaCha20 stream cipher
/// (RFC 8439 block function, zero nonce, 32-bit block counter starting
/// at zero). A fixed 32-byte seed reproduces the exact output stream on
/// every platform, which is what makes key and ciphertext test vectors
/// stable. Production callers should construct it with from_os_entropy().
///
/// A generator instance is single-consumer: concurrent users must each
/// own their own instance.
class ChaCha20Rng {
  public:
    static constexpr std::size_t kSeedBytes = 32;
    using Seed = std::array<std::uint8_t, kSeedBytes>;

    explicit ChaCha20Rng(const Seed& seed);

    /// Seeds from std::random_device.
    static ChaCha20Rng from_os_entropy();

    void fill_bytes(std::span<std::uint8_t> out);
    std::uint8_t next_byte();
    std::uint64_t next_u64();

    /// Unbiased draw from [0, bound), bound >= 1. Rejection sampling.
    std::uint64_t uniform(std::uint64_t bound);

  private:
    void refill();

    std::array<std::uint32_t, 16> state_;
    std::array<std::uint8_t, 64> block_{};
    std::size_t pos_ = sizeof(block_);
};

namespace detail {

/// One ChaCha20 block: 20 rounds over `state`, result serialized
/// little-endian into `out`. Exposed for test vectors.
void chacha20_block(const std::array<std::uint32_t, 16>& state,
                    std::array<std::uint8_t, 64>& out);

/// Initial state per RFC 8439: constants, 32-byte key, counter, 12-byte nonce.
std::array<std::uint32_t, 16> chacha20_init(std::span<const std::uint8_t, 32> key,
                                            std::uint32_t counter,
                                            std::span<const std::uint8_t, 12> nonce);

}  // namespace detail

}  // namespace olsmc
