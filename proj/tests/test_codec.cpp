// Copyright olsmc contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "olsmc/codec.hpp"

using namespace olsmc;

namespace {

ChaCha20Rng seeded(std::uint8_t tag) {
    ChaCha20Rng::Seed seed{};
    seed[0] = tag;
    return ChaCha20Rng(seed);
}

SymbolVector random_message(std::size_t k, unsigned b, ChaCha20Rng& rng) {
    SymbolVector m(k, b);
    for (std::size_t i = 0; i < m.size(); ++i) {
        m.set(i, rng.next_u64() & m.mask());
    }
    return m;
}

std::string serialize_public(const PublicKey& pk) {
    std::ostringstream out;
    codec::write_public(out, pk);
    return out.str();
}

std::string serialize_private(const PrivateKey& sk) {
    std::ostringstream out;
    codec::write_private(out, sk);
    return out.str();
}

}  // namespace

TEST_CASE("public key header golden vector for (q=3, t=2, b=8)") {
    auto rng = seeded(1);
    const auto [pk, sk] = keygen(3, 2, 8, rng);
    const auto bytes = serialize_public(pk);
    const std::string expected = {'\x4F', '\x4C', '\x53', '\x4D', '\x01',
                                  '\x01', '\x03', '\x00', '\x02', '\x08'};
    REQUIRE(bytes.size() >= 10);
    CHECK(bytes.substr(0, 10) == expected);
    // 9 rows of ceil(21/8) = 3 bytes follow the header.
    CHECK(bytes.size() == 10 + 27);
}

TEST_CASE("private key files have the documented size") {
    auto rng = seeded(2);
    const auto [pk, sk] = keygen(3, 2, 8, rng);
    // 10 + ceil(9/8)*9 + 21*4
    CHECK(serialize_private(sk).size() == 112);
}

TEST_CASE("round-trips are bit-exact") {
    struct Params {
        unsigned q, t, b;
    };
    for (const auto [q, t, b] : {Params{3, 2, 8}, Params{5, 3, 4}, Params{7, 2, 1}}) {
        auto rng = seeded(static_cast<std::uint8_t>(3 + q + t));
        for (int trial = 0; trial < 25; ++trial) {
            const auto [pk, sk] = keygen(q, t, b, rng);

            const auto pk_bytes = serialize_public(pk);
            std::istringstream pk_in(pk_bytes);
            const auto pk2 = codec::read_public(pk_in);
            CHECK(pk2 == pk);
            CHECK(serialize_public(pk2) == pk_bytes);

            const auto sk_bytes = serialize_private(sk);
            std::istringstream sk_in(sk_bytes);
            const auto sk2 = codec::read_private(sk_in);
            CHECK(sk2 == sk);
            CHECK(serialize_private(sk2) == sk_bytes);

            std::vector<Ciphertext> blocks;
            const std::size_t count = rng.uniform(4);
            for (std::size_t i = 0; i < count; ++i) {
                blocks.push_back(encrypt(pk, random_message(pk.k(), b, rng), rng));
            }
            std::ostringstream ct_out;
            codec::write_ciphertext(ct_out, pk.params(), blocks);
            std::istringstream ct_in(ct_out.str());
            const auto file = codec::read_ciphertext(ct_in);
            CHECK(file.params == pk.params());
            REQUIRE(file.blocks.size() == blocks.size());
            for (std::size_t i = 0; i < blocks.size(); ++i) {
                CHECK(file.blocks[i] == blocks[i]);
            }
            std::ostringstream ct_again;
            codec::write_ciphertext(ct_again, file.params, file.blocks);
            CHECK(ct_again.str() == ct_out.str());
        }
    }
}

TEST_CASE("a reloaded private key decrypts ciphertexts from the original") {
    auto rng = seeded(9);
    const auto [pk, sk] = keygen(5, 2, 8, rng);
    const auto m = random_message(pk.k(), 8, rng);
    const auto c = encrypt(pk, m, rng);

    std::istringstream in(serialize_private(sk));
    const auto sk2 = codec::read_private(in);
    const auto [decoded, report] = decrypt(sk2, c);
    CHECK(decoded == m);
    CHECK(report.ambiguous == 0);
}

TEST_CASE("ciphertext payload sizes") {
    auto rng = seeded(10);
    const auto [pk, sk] = keygen(3, 2, 8, rng);

    std::ostringstream empty;
    codec::write_ciphertext(empty, pk.params(), {});
    CHECK(empty.str().size() == 14);
    CHECK(empty.str().substr(10) == std::string(4, '\0'));

    const auto c = encrypt(pk, random_message(pk.k(), 8, rng), rng);
    std::ostringstream one;
    codec::write_ciphertext(one, pk.params(), std::vector<Ciphertext>{c});
    CHECK(one.str().size() == 14 + 21);  // n = 21 symbols, 1 byte each
}

TEST_CASE("malformed inputs raise their designated errors") {
    auto rng = seeded(11);
    const auto [pk, sk] = keygen(3, 2, 8, rng);
    const auto good = serialize_public(pk);

    auto mutated = [&](std::size_t index, char value) {
        std::string bytes = good;
        bytes[index] = value;
        return bytes;
    };

    {
        std::istringstream in(mutated(0, 'X'));
        CHECK_THROWS_AS(codec::read_public(in), BadMagic);
    }
    {
        std::istringstream in(mutated(4, '\x02'));
        CHECK_THROWS_AS(codec::read_public(in), BadVersion);
    }
    {
        std::istringstream in(mutated(5, '\x03'));
        CHECK_THROWS_AS(codec::read_public(in), BadKind);
    }
    {
        // kind byte outside the known set
        std::istringstream in(mutated(5, '\x7F'));
        CHECK_THROWS_AS(codec::read_public(in), BadKind);
    }
    {
        std::istringstream in(good.substr(0, good.size() - 1));
        CHECK_THROWS_AS(codec::read_public(in), Truncated);
    }
    {
        std::istringstream in(good.substr(0, 7));
        CHECK_THROWS_AS(codec::read_public(in), Truncated);
    }
    {
        // q = 4 is not prime
        std::istringstream in(mutated(6, '\x04'));
        CHECK_THROWS_AS(codec::read_public(in), ParameterError);
    }
    {
        // t too large for q = 3
        std::istringstream in(mutated(8, '\x05'));
        CHECK_THROWS_AS(codec::read_public(in), ParameterError);
    }
}

TEST_CASE("tampered private keys are rejected on load") {
    auto rng = seeded(12);
    const auto [pk, sk] = keygen(3, 2, 8, rng);
    const auto good = serialize_private(sk);

    {
        // Make S singular: row 1 := row 0 (k=9 fits one row in 2 bytes).
        std::string bytes = good;
        bytes[12] = bytes[10];
        bytes[13] = bytes[11];
        std::istringstream in(bytes);
        CHECK_THROWS_AS(codec::read_private(in), NotInvertible);
    }
    {
        // Repeat a permutation index: not a bijection.
        std::string bytes = good;
        const std::size_t perm_off = 10 + 18;
        for (int i = 0; i < 4; ++i) {
            bytes[perm_off + 4 + i] = bytes[perm_off + i];
        }
        std::istringstream in(bytes);
        CHECK_THROWS_AS(codec::read_private(in), NotPermutation);
    }
    {
        std::istringstream in(good.substr(0, good.size() - 2));
        CHECK_THROWS_AS(codec::read_private(in), Truncated);
    }
}

TEST_CASE("truncated ciphertext bodies are rejected") {
    auto rng = seeded(13);
    const auto [pk, sk] = keygen(3, 2, 8, rng);
    const auto c = encrypt(pk, random_message(pk.k(), 8, rng), rng);
    std::ostringstream out;
    codec::write_ciphertext(out, pk.params(), std::vector<Ciphertext>{c});
    const auto good = out.str();

    std::istringstream in(good.substr(0, good.size() - 3));
    CHECK_THROWS_AS(codec::read_ciphertext(in), Truncated);

    std::istringstream in2(good.substr(0, 12));
    CHECK_THROWS_AS(codec::read_ciphertext(in2), Truncated);
}

TEST_CASE("reading a file as the wrong kind raises BadKind") {
    auto rng = seeded(15);
    const auto [pk, sk] = keygen(3, 2, 8, rng);
    {
        std::istringstream in(serialize_public(pk));
        CHECK_THROWS_AS(codec::read_private(in), BadKind);
    }
    {
        std::istringstream in(serialize_private(sk));
        CHECK_THROWS_AS(codec::read_ciphertext(in), BadKind);
    }
}

TEST_CASE("mixed-parameter block lists are rejected") {
    auto rng = seeded(14);
    const auto [pk1, sk1] = keygen(3, 2, 8, rng);
    const auto [pk2, sk2] = keygen(3, 1, 8, rng);
    const auto c1 = encrypt(pk1, random_message(pk1.k(), 8, rng), rng);
    const auto c2 = encrypt(pk2, random_message(pk2.k(), 8, rng), rng);
    std::ostringstream out;
    const std::vector<Ciphertext> blocks{c1, c2};
    CHECK_THROWS_AS(codec::write_ciphertext(out, pk1.params(), blocks), ParameterError);
}
