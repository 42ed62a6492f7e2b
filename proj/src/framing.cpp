// Copyright olsmc contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "olsmc/framing.hpp"

namespace olsmc {

namespace {

constexpr std::size_t kLengthPrefixBytes = 8;

inline bool frame_bit(std::span<const std::uint8_t> frame, std::size_t bit) {
    const std::size_t byte = bit / 8;
    if (byte >= frame.size()) {
        return false;  // zero padding
    }
    return (frame[byte] >> (bit % 8)) & 1;
}

}  // namespace

std::vector<SymbolVector> frame_message(std::span<const std::uint8_t> data,
                                        std::size_t k, unsigned b) {
    if (k == 0 || b < 1 || b > 64) {
        throw ParameterError("framing needs k >= 1 and b in [1, 64]");
    }
    std::vector<std::uint8_t> frame(kLengthPrefixBytes + data.size());
    const std::uint64_t length = data.size();
    for (std::size_t i = 0; i < kLengthPrefixBytes; ++i) {
        frame[i] = static_cast<std::uint8_t>(length >> (8 * i));
    }
    std::copy(data.begin(), data.end(), frame.begin() + kLengthPrefixBytes);

    const std::size_t frame_bits = frame.size() * 8;
    const std::size_t block_bits = k * b;
    const std::size_t num_blocks = (frame_bits + block_bits - 1) / block_bits;

    std::vector<SymbolVector> blocks;
    blocks.reserve(num_blocks);
    std::size_t bit = 0;
    for (std::size_t blk = 0; blk < num_blocks; ++blk) {
        SymbolVector m(k, b);
        auto symbols = m.symbols();
        for (std::size_t s = 0; s < k; ++s) {
            std::uint64_t value = 0;
            for (unsigned i = 0; i < b; ++i, ++bit) {
                value |= static_cast<std::uint64_t>(frame_bit(frame, bit)) << i;
            }
            symbols[s] = value;
        }
        blocks.push_back(std::move(m));
    }
    return blocks;
}

std::vector<std::uint8_t> unframe_message(std::span<const SymbolVector> blocks) {
    if (blocks.empty()) {
        throw FramingError("no plaintext blocks");
    }
    const std::size_t k = blocks.front().size();
    const unsigned b = blocks.front().width_bits();
    for (const auto& blk : blocks) {
        if (blk.size() != k || blk.width_bits() != b) {
            throw FramingError("plaintext blocks disagree on shape");
        }
    }

    const std::size_t total_bits = blocks.size() * k * b;
    std::vector<std::uint8_t> frame(total_bits / 8, 0);
    std::size_t bit = 0;
    for (const auto& blk : blocks) {
        for (std::size_t s = 0; s < k; ++s) {
            const std::uint64_t value = blk[s];
            for (unsigned i = 0; i < b; ++i, ++bit) {
                const std::size_t byte = bit / 8;
                if (byte < frame.size() && ((value >> i) & 1)) {
                    frame[byte] |= static_cast<std::uint8_t>(1u << (bit % 8));
                }
            }
        }
    }

    if (frame.size() < kLengthPrefixBytes) {
        throw FramingError("recovered data shorter than the length prefix");
    }
    std::uint64_t length = 0;
    for (std::size_t i = 0; i < kLengthPrefixBytes; ++i) {
        length |= static_cast<std::uint64_t>(frame[i]) << (8 * i);
    }
    if (length > frame.size() - kLengthPrefixBytes) {
        throw FramingError("recorded length exceeds recovered payload");
    }
    return {frame.begin() + kLengthPrefixBytes,
            frame.begin() + kLengthPrefixBytes + static_cast<std::size_t>(length)};
}

}  // namespace olsmc
