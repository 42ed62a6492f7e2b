// Copyright olsmc contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "olsmc/framing.hpp"

using namespace olsmc;

namespace {

ChaCha20Rng seeded(std::uint8_t tag) {
    ChaCha20Rng::Seed seed{};
    seed[0] = tag;
    return ChaCha20Rng(seed);
}

}  // namespace

TEST_CASE("an empty message still fills one block") {
    const auto blocks = frame_message({}, 9, 8);  // k*b = 72 bits >= prefix
    REQUIRE(blocks.size() == 1);
    CHECK(unframe_message(blocks).empty());
}

TEST_CASE("round-trips over sizes and widths") {
    auto rng = seeded(1);
    for (const unsigned b : {1u, 2u, 4u, 8u, 13u, 64u}) {
        for (const std::size_t k : {9u, 25u, 49u}) {
            for (const std::size_t len : {0u, 1u, 7u, 8u, 9u, 63u, 200u, 1000u}) {
                std::vector<std::uint8_t> data(len);
                rng.fill_bytes(data);
                const auto blocks = frame_message(data, k, b);
                CHECK(blocks.size() >= 1);
                for (const auto& blk : blocks) {
                    CHECK(blk.size() == k);
                    CHECK(blk.width_bits() == b);
                }
                // Minimal block count for 64 + 8*len framed bits.
                const std::size_t want =
                    (64 + 8 * len + k * b - 1) / (k * b);
                CHECK(blocks.size() == want);
                CHECK(unframe_message(blocks) == data);
            }
        }
    }
}

TEST_CASE("bit layout is LSB-first") {
    // One byte 0x01 frames as length prefix 01 00 .. 00 then payload bits.
    const std::vector<std::uint8_t> data{0xB7};
    const auto blocks = frame_message(data, 9, 8);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0][0] == 0x01);  // length low byte
    for (int i = 1; i < 8; ++i) {
        CHECK(blocks[0][i] == 0);
    }
    CHECK(blocks[0][8] == 0xB7);
}

TEST_CASE("framing errors") {
    CHECK_THROWS_AS(unframe_message({}), FramingError);

    // Length field larger than the recovered payload.
    auto blocks = frame_message(std::vector<std::uint8_t>(4, 0xEE), 9, 8);
    auto bad = blocks;
    bad[0].set(0, 0xFF);  // claims 255 bytes, only one block present
    CHECK_THROWS_AS(unframe_message(bad), FramingError);

    // Mismatched block shapes.
    std::vector<SymbolVector> mixed;
    mixed.emplace_back(9, 8u);
    mixed.emplace_back(9, 4u);
    CHECK_THROWS_AS(unframe_message(mixed), FramingError);

    // Fewer recovered bits than the 64-bit prefix.
    std::vector<SymbolVector> tiny;
    tiny.emplace_back(9, 1u);  // 9 bits total
    CHECK_THROWS_AS(unframe_message(tiny), FramingError);

    CHECK_THROWS_AS(frame_message({}, 0, 8), ParameterError);
    CHECK_THROWS_AS(frame_message({}, 9, 0), ParameterError);
}
