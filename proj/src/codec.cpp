// Copyright olsmc contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "olsmc/codec.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <string>

namespace olsmc::codec {

namespace {

void write_bytes(std::ostream& out, std::span<const std::uint8_t> bytes) {
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

void read_bytes(std::istream& in, std::span<std::uint8_t> bytes) {
    in.read(reinterpret_cast<char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
    if (static_cast<std::size_t>(in.gcount()) != bytes.size()) {
        throw Truncated("unexpected end of stream");
    }
}

void write_u32(std::ostream& out, std::uint32_t v) {
    const std::uint8_t bytes[4] = {
        static_cast<std::uint8_t>(v),
        static_cast<std::uint8_t>(v >> 8),
        static_cast<std::uint8_t>(v >> 16),
        static_cast<std::uint8_t>(v >> 24),
    };
    write_bytes(out, bytes);
}

std::uint32_t read_u32(std::istream& in) {
    std::uint8_t bytes[4];
    read_bytes(in, bytes);
    return static_cast<std::uint32_t>(bytes[0]) |
           (static_cast<std::uint32_t>(bytes[1]) << 8) |
           (static_cast<std::uint32_t>(bytes[2]) << 16) |
           (static_cast<std::uint32_t>(bytes[3]) << 24);
}

void write_header(std::ostream& out, Kind kind, CodeParams params) {
    if (params.q > 0xFFFF || params.t > 0xFF || params.b > 0xFF) {
        throw ParameterError("parameters do not fit the header fields");
    }
    write_bytes(out, kMagic);
    const std::uint8_t fields[6] = {
        kVersion,
        static_cast<std::uint8_t>(kind),
        static_cast<std::uint8_t>(params.q),
        static_cast<std::uint8_t>(params.q >> 8),
        static_cast<std::uint8_t>(params.t),
        static_cast<std::uint8_t>(params.b),
    };
    write_bytes(out, fields);
}

CodeParams read_header(std::istream& in, Kind expected) {
    std::array<std::uint8_t, 10> h;
    read_bytes(in, h);
    if (!std::equal(kMagic.begin(), kMagic.end(), h.begin())) {
        throw BadMagic("not an OLSM file");
    }
    if (h[4] != kVersion) {
        throw BadVersion("unsupported format version " + std::to_string(h[4]));
    }
    if (h[5] != static_cast<std::uint8_t>(expected)) {
        throw BadKind("wrong object kind " + std::to_string(h[5]));
    }
    CodeParams params;
    params.q = static_cast<unsigned>(h[6]) | (static_cast<unsigned>(h[7]) << 8);
    params.t = h[8];
    params.b = h[9];
    // Rejects anything build_code would reject, before touching the payload.
    if (!is_prime(params.q) || params.t < 1 || 2 * params.t - 2 > params.q - 1 ||
        params.b < 1 || params.b > 64) {
        throw ParameterError("header carries invalid code parameters");
    }
    return params;
}

void write_matrix_rows(std::ostream& out, const BitMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        write_bytes(out, m.row(r));
    }
}

void read_matrix_rows(std::istream& in, BitMatrix& m) {
    std::vector<std::uint8_t> buf(m.row_bytes());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        read_bytes(in, buf);
        m.assign_row(r, buf);
    }
}

std::size_t symbol_bytes(unsigned b) { return (b + 7) / 8; }

void write_symbols(std::ostream& out, const SymbolVector& v) {
    const std::size_t nbytes = symbol_bytes(v.width_bits());
    std::vector<std::uint8_t> buf(nbytes);
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::uint64_t s = v[i];
        for (std::size_t j = 0; j < nbytes; ++j) {
            buf[j] = static_cast<std::uint8_t>(s);
            s >>= 8;
        }
        write_bytes(out, buf);
    }
}

SymbolVector read_symbols(std::istream& in, std::size_t length, unsigned b) {
    const std::size_t nbytes = symbol_bytes(b);
    SymbolVector v(length, b);
    std::vector<std::uint8_t> buf(nbytes);
    const std::uint64_t mask = v.mask();
    for (std::size_t i = 0; i < length; ++i) {
        read_bytes(in, buf);
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < nbytes; ++j) {
            s |= static_cast<std::uint64_t>(buf[j]) << (8 * j);
        }
        v.set(i, s & mask);
    }
    return v;
}

}  // namespace

void write_public(std::ostream& out, const PublicKey& pk) {
    write_header(out, Kind::public_key, pk.params());
    write_matrix_rows(out, pk.matrix());
}

PublicKey read_public(std::istream& in) {
    const CodeParams params = read_header(in, Kind::public_key);
    const std::size_t k = static_cast<std::size_t>(params.q) * params.q;
    const std::size_t n = k + static_cast<std::size_t>(2) * params.t * params.q;
    BitMatrix g_prime(k, n);
    read_matrix_rows(in, g_prime);
    return PublicKey(params, std::move(g_prime));
}

void write_private(std::ostream& out, const PrivateKey& sk) {
    write_header(out, Kind::private_key, sk.params());
    write_matrix_rows(out, sk.scrambler());
    for (const auto idx : sk.permutation().indices()) {
        write_u32(out, idx);
    }
}

PrivateKey read_private(std::istream& in) {
    const CodeParams params = read_header(in, Kind::private_key);
    const std::size_t k = static_cast<std::size_t>(params.q) * params.q;
    const std::size_t n = k + static_cast<std::size_t>(2) * params.t * params.q;
    BitMatrix s(k, k);
    read_matrix_rows(in, s);
    std::vector<std::uint32_t> map(n);
    for (auto& idx : map) {
        idx = read_u32(in);
    }
    return PrivateKey(params, std::move(s), Permutation(std::move(map)));
}

void write_ciphertext(std::ostream& out, CodeParams params,
                      std::span<const Ciphertext> blocks) {
    if (blocks.size() > std::numeric_limits<std::uint32_t>::max()) {
        throw ParameterError("too many ciphertext blocks");
    }
    for (const auto& block : blocks) {
        if (block.params() != params) {
            throw ParameterError("ciphertext blocks carry mixed parameters");
        }
    }
    write_header(out, Kind::ciphertext, params);
    write_u32(out, static_cast<std::uint32_t>(blocks.size()));
    for (const auto& block : blocks) {
        write_symbols(out, block.payload());
    }
}

CiphertextFile read_ciphertext(std::istream& in) {
    CiphertextFile file;
    file.params = read_header(in, Kind::ciphertext);
    const std::size_t k = static_cast<std::size_t>(file.params.q) * file.params.q;
    const std::size_t n = k + static_cast<std::size_t>(2) * file.params.t * file.params.q;
    const std::uint32_t count = read_u32(in);
    file.blocks.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        file.blocks.emplace_back(file.params, read_symbols(in, n, file.params.b));
    }
    return file;
}

}  // namespace olsmc::codec
