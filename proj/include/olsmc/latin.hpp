// Copyright olsmc contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "olsmc/errors.hpp"

namespace olsmc {

/// A q x q grid over the values 0..q-1, stored row-major. Construction
/// rejects malformed dimensions and out-of-range cells; it does not require
/// the Latin property itself (see is_latin).
class LatinSquare {
  public:
    LatinSquare(unsigned order, std::vector<std::uint16_t> cells);

    static LatinSquare from_rows(const std::vector<std::vector<std::uint16_t>>& rows);

    unsigned order() const { return order_; }
    std::uint16_t cell(unsigned row, unsigned col) const {
        return cells_[static_cast<std::size_t>(row) * order_ + col];
    }
    const std::vector<std::uint16_t>& cells() const { return cells_; }

    bool operator==(const LatinSquare&) const = default;

  private:
    unsigned order_;
    std::vector<std::uint16_t> cells_;
};

/// An ordered family of Latin squares of one order, pairwise orthogonal.
/// Both properties are enforced at construction.
class MolsFamily {
  public:
    MolsFamily(unsigned order, std::vector<LatinSquare> squares);

    unsigned order() const { return order_; }
    std::size_t size() const { return squares_.size(); }
    const LatinSquare& square(std::size_t i) const { return squares_[i]; }
    const std::vector<LatinSquare>& squares() const { return squares_; }

  private:
    unsigned order_;
    std::vector<LatinSquare> squares_;
};

bool is_prime(unsigned n);

/// True iff every row and every column of `s` is a permutation of 0..q-1.
bool is_latin(const LatinSquare& s);

/// True iff superimposing `a` and `b` yields order^2 distinct ordered pairs.
/// Throws OrderMismatch when the orders differ.
bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

/// The cyclic family over prime q: square a (a = 1..count) has
/// cell(i, j) = (a*i + j) mod q. Any two of the q-1 such squares are
/// orthogonal, which is as many as exist for prime order.
/// Throws NonPrimeOrder / TooManySquares.
MolsFamily cyclic_mols(unsigned q, unsigned count);

}  // namespace olsmc
