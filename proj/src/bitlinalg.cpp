// Copyright olsmc contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "olsmc/bitlinalg.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace olsmc {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), row_bytes_((cols + 7) / 8), bits_(rows * row_bytes_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, true);
    }
    return m;
}

void BitMatrix::assign_row(std::size_t r, std::span<const std::uint8_t> bytes) {
    if (bytes.size() != row_bytes_) {
        throw DimensionMismatch("row byte count mismatch");
    }
    std::copy(bytes.begin(), bytes.end(), bits_.begin() + r * row_bytes_);
    clear_row_padding(r);
}

void BitMatrix::clear_row_padding(std::size_t r) {
    const unsigned used = cols_ % 8;
    if (row_bytes_ > 0 && used != 0) {
        bits_[r * row_bytes_ + row_bytes_ - 1] &=
            static_cast<std::uint8_t>((1u << used) - 1);
    }
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    std::uint8_t* d = bits_.data() + dst * row_bytes_;
    const std::uint8_t* s = bits_.data() + src * row_bytes_;
    for (std::size_t i = 0; i < row_bytes_; ++i) {
        d[i] ^= s[i];
    }
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(bits_.begin() + a * row_bytes_,
                     bits_.begin() + (a + 1) * row_bytes_,
                     bits_.begin() + b * row_bytes_);
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

bool BitMatrix::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
}

namespace {

// Calls fn(col) for every set bit of the packed row.
template <typename Fn>
inline void for_each_set_bit(std::span<const std::uint8_t> row, Fn&& fn) {
    for (std::size_t byte = 0; byte < row.size(); ++byte) {
        std::uint8_t bits = row[byte];
        while (bits != 0) {
            fn(byte * 8 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= static_cast<std::uint8_t>(bits - 1);
        }
    }
}

}  // namespace

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("mat_mul: a.cols must equal b.rows");
    }
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto dst = out.row(r);
        for_each_set_bit(a.row(r), [&](std::size_t j) {
            auto src = b.row(j);
            for (std::size_t i = 0; i < dst.size(); ++i) {
                dst[i] ^= src[i];
            }
        });
    }
    return out;
}

std::optional<BitMatrix> invert(const BitMatrix& a) {
    if (a.rows() != a.cols()) {
        throw NotSquare("invert requires a square matrix");
    }
    const std::size_t n = a.rows();
    BitMatrix work = a;
    BitMatrix inv = BitMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && !work.get(pivot, col)) {
            ++pivot;
        }
        if (pivot == n) {
            return std::nullopt;
        }
        work.swap_rows(col, pivot);
        inv.swap_rows(col, pivot);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != col && work.get(r, col)) {
                work.xor_row(r, col);
                inv.xor_row(r, col);
            }
        }
    }
    return inv;
}

BitMatrix random_nonsingular(std::size_t k, ChaCha20Rng& rng) {
    BitMatrix m(k, k);
    std::vector<std::uint8_t> buf(m.row_bytes());
    for (;;) {
        for (std::size_t r = 0; r < k; ++r) {
            rng.fill_bytes(buf);
            m.assign_row(r, buf);
        }
        if (invert(m).has_value()) {
            return m;
        }
    }
}

Permutation::Permutation(std::vector<std::uint32_t> map) : map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (const auto v : map_) {
        if (v >= map_.size() || seen[v]) {
            throw NotPermutation("index map is not a bijection");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::uint32_t> map(n);
    std::iota(map.begin(), map.end(), 0u);
    return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
    std::vector<std::uint32_t> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) {
        inv[map_[i]] = static_cast<std::uint32_t>(i);
    }
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& then) const {
    if (then.size() != size()) {
        throw DimensionMismatch("compose: permutation sizes differ");
    }
    std::vector<std::uint32_t> out(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) {
        out[i] = then.map_[map_[i]];
    }
    return Permutation(std::move(out));
}

BitMatrix Permutation::as_matrix() const {
    BitMatrix m(size(), size());
    for (std::size_t i = 0; i < size(); ++i) {
        m.set(i, map_[i], true);
    }
    return m;
}

Permutation random_permutation(std::size_t n, ChaCha20Rng& rng) {
    std::vector<std::uint32_t> map(n);
    std::iota(map.begin(), map.end(), 0u);
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.uniform(i));
        std::swap(map[i - 1], map[j]);
    }
    return Permutation(std::move(map));
}

SymbolVector::SymbolVector(std::size_t length, unsigned width_bits)
    : width_bits_(width_bits), symbols_(length, 0) {
    if (width_bits < 1 || width_bits > 64) {
        throw ParameterError("symbol width must be in [1, 64]");
    }
}

SymbolVector::SymbolVector(unsigned width_bits, std::vector<std::uint64_t> symbols)
    : width_bits_(width_bits), symbols_(std::move(symbols)) {
    if (width_bits < 1 || width_bits > 64) {
        throw ParameterError("symbol width must be in [1, 64]");
    }
    const std::uint64_t m = mask();
    for (const auto s : symbols_) {
        if ((s & ~m) != 0) {
            throw ParameterError("symbol value exceeds width");
        }
    }
}

void SymbolVector::set(std::size_t i, std::uint64_t v) {
    if ((v & ~mask()) != 0) {
        throw ParameterError("symbol value exceeds width");
    }
    symbols_[i] = v;
}

std::size_t SymbolVector::weight() const {
    std::size_t w = 0;
    for (const auto s : symbols_) {
        w += (s != 0);
    }
    return w;
}

SymbolVector apply_matrix(const SymbolVector& v, const BitMatrix& a) {
    if (v.size() != a.rows()) {
        throw DimensionMismatch("apply_matrix: vector length must equal rows");
    }
    SymbolVector out(a.cols(), v.width_bits());
    auto dst = out.symbols();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::uint64_t sym = v[i];
        for_each_set_bit(a.row(i), [&](std::size_t j) { dst[j] ^= sym; });
    }
    return out;
}

SymbolVector permute(const SymbolVector& v, const Permutation& p) {
    if (v.size() != p.size()) {
        throw DimensionMismatch("permute: sizes differ");
    }
    SymbolVector out(v.size(), v.width_bits());
    auto dst = out.symbols();
    for (std::size_t i = 0; i < v.size(); ++i) {
        dst[p.map(i)] = v[i];
    }
    return out;
}

SymbolVector unpermute(const SymbolVector& v, const Permutation& p) {
    if (v.size() != p.size()) {
        throw DimensionMismatch("unpermute: sizes differ");
    }
    SymbolVector out(v.size(), v.width_bits());
    auto dst = out.symbols();
    for (std::size_t i = 0; i < v.size(); ++i) {
        dst[i] = v[p.map(i)];
    }
    return out;
}

SymbolVector xor_vectors(const SymbolVector& a, const SymbolVector& b) {
    if (a.size() != b.size() || a.width_bits() != b.width_bits()) {
        throw DimensionMismatch("xor_vectors: shape mismatch");
    }
    SymbolVector out = a;
    auto dst = out.symbols();
    for (std::size_t i = 0; i < b.size(); ++i) {
        dst[i] ^= b[i];
    }
    return out;
}

}  // namespace olsmc
