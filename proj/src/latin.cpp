// Copyright olsmc contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "olsmc/latin.hpp"

#include <string>

namespace olsmc {

LatinSquare::LatinSquare(unsigned order, std::vector<std::uint16_t> cells)
    : order_(order), cells_(std::move(cells)) {
    if (order == 0 || order > 0xFFFF) {
        throw ParameterError("latin square order must be in [1, 65535]");
    }
    if (cells_.size() != static_cast<std::size_t>(order) * order) {
        throw ParameterError("latin square needs order^2 cells");
    }
    for (const auto v : cells_) {
        if (v >= order) {
            throw ParameterError("latin square cell value out of range");
        }
    }
}

LatinSquare LatinSquare::from_rows(const std::vector<std::vector<std::uint16_t>>& rows) {
    std::vector<std::uint16_t> cells;
    cells.reserve(rows.size() * rows.size());
    for (const auto& row : rows) {
        if (row.size() != rows.size()) {
            throw ParameterError("latin square rows must form a square grid");
        }
        cells.insert(cells.end(), row.begin(), row.end());
    }
    return LatinSquare(static_cast<unsigned>(rows.size()), std::move(cells));
}

MolsFamily::MolsFamily(unsigned order, std::vector<LatinSquare> squares)
    : order_(order), squares_(std::move(squares)) {
    if (order >= 2 && squares_.size() > static_cast<std::size_t>(order) - 1) {
        throw TooManySquares("at most order-1 mutually orthogonal squares exist");
    }
    for (const auto& s : squares_) {
        if (s.order() != order_) {
            throw OrderMismatch("family squares must share one order");
        }
        if (!is_latin(s)) {
            throw ParameterError("family member is not a Latin square");
        }
    }
    for (std::size_t i = 0; i < squares_.size(); ++i) {
        for (std::size_t j = i + 1; j < squares_.size(); ++j) {
            if (!are_orthogonal(squares_[i], squares_[j])) {
                throw ParameterError("family squares are not pairwise orthogonal");
            }
        }
    }
}

bool is_prime(unsigned n) {
    if (n < 2) {
        return false;
    }
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

bool is_latin(const LatinSquare& s) {
    const unsigned q = s.order();
    std::vector<bool> seen(q);
    for (unsigned i = 0; i < q; ++i) {
        seen.assign(q, false);
        for (unsigned j = 0; j < q; ++j) {
            const auto v = s.cell(i, j);
            if (seen[v]) {
                return false;
            }
            seen[v] = true;
        }
    }
    for (unsigned j = 0; j < q; ++j) {
        seen.assign(q, false);
        for (unsigned i = 0; i < q; ++i) {
            const auto v = s.cell(i, j);
            if (seen[v]) {
                return false;
            }
            seen[v] = true;
        }
    }
    return true;
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
    if (a.order() != b.order()) {
        throw OrderMismatch("squares must have equal order");
    }
    const unsigned q = a.order();
    std::vector<bool> seen(static_cast<std::size_t>(q) * q, false);
    for (unsigned i = 0; i < q; ++i) {
        for (unsigned j = 0; j < q; ++j) {
            const std::size_t pair =
                static_cast<std::size_t>(a.cell(i, j)) * q + b.cell(i, j);
            if (seen[pair]) {
                return false;
            }
            seen[pair] = true;
        }
    }
    return true;
}

MolsFamily cyclic_mols(unsigned q, unsigned count) {
    if (!is_prime(q)) {
        throw NonPrimeOrder("q must be prime, got " + std::to_string(q));
    }
    if (count > q - 1) {
        throw TooManySquares("at most q-1 squares for prime q, requested " +
                             std::to_string(count));
    }
    std::vector<LatinSquare> squares;
    squares.reserve(count);
    for (unsigned a = 1; a <= count; ++a) {
        std::vector<std::uint16_t> cells(static_cast<std::size_t>(q) * q);
        for (unsigned i = 0; i < q; ++i) {
            for (unsigned j = 0; j < q; ++j) {
                cells[static_cast<std::size_t>(i) * q + j] =
                    static_cast<std::uint16_t>((static_cast<std::uint64_t>(a) * i + j) % q);
            }
        }
        squares.emplace_back(q, std::move(cells));
    }
    return MolsFamily(q, std::move(squares));
}

}  // namespace olsmc
