// Copyright olsmc contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "olsmc/mceliece.hpp"

namespace olsmc::codec {

// Every file starts with the same 10-byte header:
//   magic "OLSM" | version 0x01 | kind | q (u16 LE) | t (u8) | b (u8)
// Matrix rows are bit-packed LSB-first within each byte and padded to a
// whole byte; symbols are packed in ceil(b/8) little-endian bytes.
inline constexpr std::array<std::uint8_t, 4> kMagic{0x4F, 0x4C, 0x53, 0x4D};
inline constexpr std::uint8_t kVersion = 0x01;

enum class Kind : std::uint8_t {
    public_key = 0x01,
    private_key = 0x02,
    ciphertext = 0x03,
};

/// Header followed by the k rows of G'.
void write_public(std::ostream& out, const PublicKey& pk);
PublicKey read_public(std::istream& in);

/// Header, the k rows of S, then the permutation as n u32 LE indices.
/// G, H and both inverses are rebuilt on load, which re-checks every key
/// invariant: a singular S loads as NotInvertible, a non-bijective index
/// list as NotPermutation.
void write_private(std::ostream& out, const PrivateKey& sk);
PrivateKey read_private(std::istream& in);

/// Header, u32 LE block count, then each block's n symbols. All blocks
/// must share `params` (the block list may be empty).
void write_ciphertext(std::ostream& out, CodeParams params,
                      std::span<const Ciphertext> blocks);

struct CiphertextFile {
    CodeParams params;
    std::vector<Ciphertext> blocks;
};

CiphertextFile read_ciphertext(std::istream& in);

}  // namespace olsmc::codec
