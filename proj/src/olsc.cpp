// Copyright olsmc contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "olsmc/olsc.hpp"

#include <bit>
#include <string>

namespace olsmc {

OlscCode build_code(unsigned q, unsigned t, unsigned b) {
    if (!is_prime(q)) {
        throw ParameterError("q must be prime, got " + std::to_string(q));
    }
    if (t < 1) {
        throw ParameterError("t must be at least 1");
    }
    if (2 * t - 2 > q - 1) {
        throw ParameterError("need 2t-2 <= q-1 (t <= (q+1)/2), got q=" +
                             std::to_string(q) + " t=" + std::to_string(t));
    }
    if (b < 1 || b > 64) {
        throw ParameterError("symbol width b must be in [1, 64]");
    }

    OlscCode code;
    code.params_ = {q, t, b};
    code.k_ = static_cast<std::size_t>(q) * q;
    code.r_ = static_cast<std::size_t>(2) * t * q;
    code.n_ = code.k_ + code.r_;

    const MolsFamily mols = cyclic_mols(q, 2 * t - 2);

    // One check per (block, data position): block 0 is the row partition,
    // block 1 the column partition, block 2+a the level sets of square a.
    const auto check_row = [&](unsigned block, unsigned i, unsigned j) -> std::size_t {
        switch (block) {
            case 0:
                return i;
            case 1:
                return static_cast<std::size_t>(q) + j;
            default:
                return static_cast<std::size_t>(block) * q +
                       mols.square(block - 2).cell(i, j);
        }
    };

    BitMatrix m(code.r_, code.k_);
    code.checks_of_.resize(code.k_ * 2 * t);
    for (unsigned i = 0; i < q; ++i) {
        for (unsigned j = 0; j < q; ++j) {
            const std::size_t pos = static_cast<std::size_t>(i) * q + j;
            for (unsigned block = 0; block < 2 * t; ++block) {
                const std::size_t row = check_row(block, i, j);
                m.set(row, pos, true);
                code.checks_of_[pos * 2 * t + block] = static_cast<std::uint32_t>(row);
            }
        }
    }

    code.g_ = BitMatrix(code.k_, code.n_);
    code.h_ = BitMatrix(code.r_, code.n_);
    for (std::size_t i = 0; i < code.k_; ++i) {
        code.g_.set(i, i, true);
    }
    for (std::size_t row = 0; row < code.r_; ++row) {
        for (std::size_t col = 0; col < code.k_; ++col) {
            if (m.get(row, col)) {
                code.h_.set(row, col, true);
                code.g_.set(col, code.k_ + row, true);  // M^T block of G
            }
        }
        code.h_.set(row, code.k_ + row, true);
    }

    code.check_columns_.resize(code.r_ * (q + 1));
    for (std::size_t row = 0; row < code.r_; ++row) {
        std::size_t slot = row * (q + 1);
        for (std::size_t col = 0; col < code.n_; ++col) {
            if (code.h_.get(row, col)) {
                code.check_columns_[slot++] = static_cast<std::uint32_t>(col);
            }
        }
    }
    return code;
}

SymbolVector encode(const OlscCode& code, const SymbolVector& m) {
    if (m.size() != code.k() || m.width_bits() != code.b()) {
        throw DimensionMismatch("encode: message must be k symbols of width b");
    }
    return apply_matrix(m, code.G());
}

SymbolVector syndrome(const OlscCode& code, const SymbolVector& v) {
    if (v.size() != code.n()) {
        throw DimensionMismatch("syndrome: vector length must be n");
    }
    SymbolVector s(code.r(), v.width_bits());
    auto out = s.symbols();
    for (std::size_t j = 0; j < code.r(); ++j) {
        std::uint64_t acc = 0;
        for (const auto col : code.check_columns(j)) {
            acc ^= v[col];
        }
        out[j] = acc;
    }
    return s;
}

std::pair<SymbolVector, DecodeReport> decode(const OlscCode& code, const SymbolVector& v) {
    if (v.size() != code.n()) {
        throw DimensionMismatch("decode: vector length must be n");
    }
    const unsigned t = code.t();
    const unsigned votes_per_symbol = 2 * t;
    DecodeReport report;

    // Syndrome, with each accumulation counted.
    SymbolVector synd(code.r(), v.width_bits());
    auto s = synd.symbols();
    for (std::size_t j = 0; j < code.r(); ++j) {
        std::uint64_t acc = 0;
        for (const auto col : code.check_columns(j)) {
            acc ^= v[col];
            ++report.xor_ops;
        }
        s[j] = acc;
    }

    // Majority vote per data position. Every tally below runs to
    // completion whatever the values, so xor_ops/cmp_ops depend only on
    // (q, t).
    SymbolVector m_hat(code.k(), v.width_bits());
    auto out = m_hat.symbols();
    std::vector<std::uint64_t> votes(votes_per_symbol);
    for (std::size_t i = 0; i < code.k(); ++i) {
        const auto checks = code.checks_of(i);
        for (unsigned d = 0; d < votes_per_symbol; ++d) {
            votes[d] = s[checks[d]];
        }

        unsigned best_count = 0;
        std::uint64_t best_value = 0;
        unsigned nonzero_votes = 0;
        for (unsigned d = 0; d < votes_per_symbol; ++d) {
            unsigned count = 0;
            for (unsigned l = 0; l < votes_per_symbol; ++l) {
                count += (votes[l] == votes[d]);
                ++report.cmp_ops;
            }
            const bool nonzero = votes[d] != 0;
            ++report.cmp_ops;
            nonzero_votes += nonzero;
            const bool take = nonzero & (count > best_count);
            ++report.cmp_ops;
            best_count = take ? count : best_count;
            best_value = take ? votes[d] : best_value;
        }

        const bool majority = best_count >= t + 1;
        ++report.cmp_ops;
        const std::uint64_t estimate = majority ? best_value : 0;
        out[i] = v[i] ^ estimate;
        ++report.xor_ops;
        report.corrected += majority;
        // More failing checks than t errors elsewhere could explain, yet
        // no value wins: only corruption beyond t can look like this.
        report.ambiguous += (!majority) & (nonzero_votes > t);
    }
    return {std::move(m_hat), report};
}

DepthModel decoder_depth_model(unsigned q, unsigned t) {
    if (!is_prime(q) || t < 1 || 2 * t - 2 > q - 1) {
        throw ParameterError("depth model needs valid (q, t)");
    }
    DepthModel d;
    d.syndrome_depth = static_cast<unsigned>(std::bit_width(q - 1)) + 1;
    d.vote_depth = static_cast<unsigned>(std::bit_width(2 * t - 1));
    d.comparator_depth = 2;  // threshold compare + select
    d.total = d.syndrome_depth + d.vote_depth + d.comparator_depth;
    d.sequential_iterations = static_cast<std::size_t>(q) * q + 2 * t * q;
    return d;
}

}  // namespace olsmc
