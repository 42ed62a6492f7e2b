// Copyright olsmc contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "olsmc/errors.hpp"
#include "olsmc/rng.hpp"

namespace olsmc {

/// Dense matrix over GF(2). Rows are bit-packed into bytes, LSB-first
/// (bit j of a row lives in byte j/8 at position j%8), each row padded
/// to a whole byte. Padding bits are kept zero, so byte-wise equality
/// and serialization are exact.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t row_bytes() const { return row_bytes_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * row_bytes_ + c / 8] >> (c % 8)) & 1;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        const std::size_t idx = r * row_bytes_ + c / 8;
        const std::uint8_t mask = static_cast<std::uint8_t>(1u << (c % 8));
        if (v) {
            bits_[idx] |= mask;
        } else {
            bits_[idx] &= static_cast<std::uint8_t>(~mask);
        }
    }

    std::span<const std::uint8_t> row(std::size_t r) const {
        return {bits_.data() + r * row_bytes_, row_bytes_};
    }
    std::span<std::uint8_t> row(std::size_t r) {
        return {bits_.data() + r * row_bytes_, row_bytes_};
    }

    /// Overwrites row r from packed bytes; padding bits are cleared.
    void assign_row(std::size_t r, std::span<const std::uint8_t> bytes);

    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    BitMatrix transposed() const;
    bool is_zero() const;

    bool operator==(const BitMatrix&) const = default;

  private:
    void clear_row_padding(std::size_t r);

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t row_bytes_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// GF(2) product (AND rows, XOR accumulate). Throws DimensionMismatch.
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);

/// Gauss-Jordan inverse over GF(2). nullopt when the matrix is singular;
/// throws NotSquare for non-square input.
std::optional<BitMatrix> invert(const BitMatrix& a);

/// Uniform k x k matrix conditioned on full rank: draws uniform matrices
/// and retries until invertible (about 3.5 attempts expected, any k).
BitMatrix random_nonsingular(std::size_t k, ChaCha20Rng& rng);

/// A bijection on {0..n-1}; map(i) is the destination of source position i.
/// Stored as an index array, never as an n x n matrix.
class Permutation {
  public:
    /// Throws NotPermutation unless `map` is a bijection.
    explicit Permutation(std::vector<std::uint32_t> map);

    static Permutation identity(std::size_t n);

    std::size_t size() const { return map_.size(); }
    std::uint32_t map(std::size_t i) const { return map_[i]; }
    std::span<const std::uint32_t> indices() const { return map_; }

    Permutation inverse() const;
    /// Applies *this first, `then` second. Throws DimensionMismatch.
    Permutation compose(const Permutation& then) const;

    /// Matrix view: row i has its single 1 at column map(i).
    BitMatrix as_matrix() const;

    bool operator==(const Permutation&) const = default;

  private:
    std::vector<std::uint32_t> map_;
};

Permutation random_permutation(std::size_t n, ChaCha20Rng& rng);

/// Fixed-width symbol sequence: `length` values of `width_bits` bits each
/// (1..64). Symbols combine by XOR only; no field multiplication exists
/// anywhere in this library.
class SymbolVector {
  public:
    SymbolVector() = default;
    SymbolVector(std::size_t length, unsigned width_bits);
    SymbolVector(unsigned width_bits, std::vector<std::uint64_t> symbols);

    std::size_t size() const { return symbols_.size(); }
    unsigned width_bits() const { return width_bits_; }
    std::uint64_t mask() const {
        return width_bits_ == 64 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << width_bits_) - 1;
    }

    std::uint64_t operator[](std::size_t i) const { return symbols_[i]; }
    /// Throws ParameterError when v does not fit in width_bits.
    void set(std::size_t i, std::uint64_t v);

    std::span<const std::uint64_t> symbols() const { return symbols_; }
    std::span<std::uint64_t> symbols() { return symbols_; }

    /// Number of nonzero symbols.
    std::size_t weight() const;

    bool operator==(const SymbolVector&) const = default;

  private:
    unsigned width_bits_ = 1;
    std::vector<std::uint64_t> symbols_;
};

/// v * A with XOR accumulation: output symbol j is the XOR of all input
/// symbols i with a[i][j] = 1. Requires v.size() == a.rows().
SymbolVector apply_matrix(const SymbolVector& v, const BitMatrix& a);

/// out[p.map(i)] = v[i]. Matches apply_matrix(v, p.as_matrix()).
SymbolVector permute(const SymbolVector& v, const Permutation& p);

/// Inverse of permute: out[i] = v[p.map(i)], i.e. multiplication by the
/// inverse permutation matrix.
SymbolVector unpermute(const SymbolVector& v, const Permutation& p);

/// Element-wise XOR; lengths and widths must match.
SymbolVector xor_vectors(const SymbolVector& a, const SymbolVector& b);

}  // namespace olsmc
