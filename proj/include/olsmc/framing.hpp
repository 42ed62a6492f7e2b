// Copyright olsmc contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "olsmc/bitlinalg.hpp"

namespace olsmc {

// A message of arbitrary length is framed as an 8-byte little-endian byte
// count, the payload, and zero padding up to a whole number of plaintext
// blocks of k*b bits. The framed bytes are read as a bitstream (LSB-first
// within each byte) and cut into b-bit symbols, k per block, so the
// layout is well defined even when k*b is not a multiple of 8.

/// Frames `data` into plaintext blocks for a code with k data symbols of
/// width b. Always yields at least one block.
std::vector<SymbolVector> frame_message(std::span<const std::uint8_t> data,
                                        std::size_t k, unsigned b);

/// Reassembles the original bytes. Throws FramingError when the blocks
/// are inconsistent or the recorded length exceeds the recovered payload.
std::vector<std::uint8_t> unframe_message(std::span<const SymbolVector> blocks);

}  // namespace olsmc
