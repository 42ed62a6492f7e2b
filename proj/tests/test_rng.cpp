// Copyright olsmc contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "olsmc/rng.hpp"

using namespace olsmc;

namespace {

std::vector<std::uint8_t> from_hex(const char* hex) {
    std::vector<std::uint8_t> out;
    for (const char* p = hex; p[0] != '\0' && p[1] != '\0'; p += 2) {
        auto nibble = [](char c) -> std::uint8_t {
            if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
            return static_cast<std::uint8_t>(c - 'a' + 10);
        };
        out.push_back(static_cast<std::uint8_t>((nibble(p[0]) << 4) | nibble(p[1])));
    }
    return out;
}

}  // namespace

TEST_CASE("chacha20 block matches the RFC 8439 reference output") {
    std::array<std::uint8_t, 32> key;
    for (std::size_t i = 0; i < key.size(); ++i) {
        key[i] = static_cast<std::uint8_t>(i);
    }
    const auto nonce_bytes = from_hex("000000090000004a00000000");
    std::array<std::uint8_t, 12> nonce;
    std::copy(nonce_bytes.begin(), nonce_bytes.end(), nonce.begin());

    const auto state = detail::chacha20_init(key, 1, nonce);
    std::array<std::uint8_t, 64> block;
    detail::chacha20_block(state, block);

    const auto expected = from_hex(
        "10f1e7e4d13b5915500fdd1fa32071c4c7d1f4c733c068030422aa9ac3d46c4e"
        "d2826446079faa0914c2d705d98b02a2b5129cd1de164eb9cbd083e8a2503c4e");
    CHECK(std::equal(block.begin(), block.end(), expected.begin(), expected.end()));
}

TEST_CASE("keystream for the all-zero seed") {
    ChaCha20Rng rng(ChaCha20Rng::Seed{});
    std::vector<std::uint8_t> out(64);
    rng.fill_bytes(out);
    const auto expected = from_hex(
        "76b8e0ada0f13d90405d6ae55386bd28bdd219b8a08ded1aa836efcc8b770dc7"
        "da41597c5157488d7724e03fb8d84a376a43b8f41518a11cc387b669b2ee6586");
    CHECK(out == expected);
}

TEST_CASE("keystream continues across block boundaries") {
    ChaCha20Rng::Seed seed;
    for (std::size_t i = 0; i < seed.size(); ++i) {
        seed[i] = static_cast<std::uint8_t>(i + 1);
    }
    ChaCha20Rng rng(seed);
    std::vector<std::uint8_t> out(80);
    rng.fill_bytes(out);
    const auto expected = from_hex(
        "b1697e9fc6461e1983d131cf69691ca1a7a3fc134f149880e8bb2b5d2365e103"
        "0f6ae77c4dc90b31073aa31a94c9be897b89a6702aa6c1c983b1ab2251676120"
        "638ad71667c2a9399b4b365097dead38");
    CHECK(out == expected);
}

TEST_CASE("same seed, same stream") {
    ChaCha20Rng::Seed seed{};
    seed[0] = 0xAB;
    ChaCha20Rng a(seed);
    ChaCha20Rng b(seed);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
}

TEST_CASE("uniform stays in range and hits every residue") {
    ChaCha20Rng rng(ChaCha20Rng::Seed{});
    std::array<int, 7> hits{};
    for (int i = 0; i < 2000; ++i) {
        const auto v = rng.uniform(7);
        REQUIRE(v < 7);
        ++hits[v];
    }
    for (const auto h : hits) {
        CHECK(h > 0);
    }
    CHECK(rng.uniform(1) == 0);
}

TEST_CASE("os entropy seeds differ") {
    auto a = ChaCha20Rng::from_os_entropy();
    auto b = ChaCha20Rng::from_os_entropy();
    // 128 bits of agreement would mean a broken entropy source.
    bool all_equal = true;
    for (int i = 0; i < 2; ++i) {
        all_equal = all_equal && (a.next_u64() == b.next_u64());
    }
    CHECK_FALSE(all_equal);
}
