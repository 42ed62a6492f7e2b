// Copyright olsmc contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "olsmc/bitlinalg.hpp"
#include "olsmc/latin.hpp"

namespace olsmc {

/// Code parameters shared by keys and ciphertexts.
struct CodeParams {
    unsigned q = 0;  ///< prime square order
    unsigned t = 0;  ///< correctable symbol errors
    unsigned b = 0;  ///< symbol width in bits

    bool operator==(const CodeParams&) const = default;
};

/// An orthogonal-Latin-square code over b-bit symbols.
///
/// The k = q^2 data positions are indexed row-major as (i, j) -> i*q + j.
/// The r = 2tq parity checks come in 2t blocks of q rows over the data
/// positions: the row partition (check i covers all (i, .)), the column
/// partition (check q+j covers all (., j)), and one level-set partition
/// per square of the cyclic MOLS family (check of level v in square a
/// covers all cells where that square holds v). Any two of these checks
/// share at most one data position, and every data position lies in
/// exactly one check per block, which is what makes the 2t checks of a
/// position an orthogonal vote set.
///
/// H = [M | I_r] stacks those partitions; G = [I_k | M^T] is the matching
/// systematic encoder, so G * H^T = 0. All matrices are binary regardless
/// of b: symbols are combined by XOR only.
class OlscCode {
  public:
    const CodeParams& params() const { return params_; }
    unsigned q() const { return params_.q; }
    unsigned t() const { return params_.t; }
    unsigned b() const { return params_.b; }
    std::size_t k() const { return k_; }
    std::size_t r() const { return r_; }
    std::size_t n() const { return n_; }

    const BitMatrix& G() const { return g_; }
    const BitMatrix& H() const { return h_; }

    /// The 2t check rows containing data position i.
    std::span<const std::uint32_t> checks_of(std::size_t i) const {
        return {checks_of_.data() + i * 2 * params_.t, 2 * params_.t};
    }

    /// The q+1 codeword positions summed by check row j.
    std::span<const std::uint32_t> check_columns(std::size_t j) const {
        return {check_columns_.data() + j * (params_.q + 1), params_.q + 1};
    }

  private:
    friend OlscCode build_code(unsigned q, unsigned t, unsigned b);

    CodeParams params_;
    std::size_t k_ = 0;
    std::size_t r_ = 0;
    std::size_t n_ = 0;
    BitMatrix g_;
    BitMatrix h_;
    std::vector<std::uint32_t> checks_of_;       // k x 2t, flat
    std::vector<std::uint32_t> check_columns_;   // r x (q+1), flat
};

/// Per-decode instrumentation. field_ops counts finite-field
/// multiplications and inversions and is zero on every call: majority
/// decoding needs none. xor_ops and cmp_ops depend only on (q, t), never
/// on the input values.
struct DecodeReport {
    std::uint64_t corrected = 0;  ///< data symbols with a nonzero error estimate
    std::uint64_t ambiguous = 0;  ///< data positions with conflicting votes
    std::uint64_t field_ops = 0;  ///< always 0
    std::uint64_t xor_ops = 0;
    std::uint64_t cmp_ops = 0;
};

/// Builds the code for prime q, t >= 1 with 2t-2 <= q-1, and b in [1, 64].
/// Throws ParameterError otherwise.
OlscCode build_code(unsigned q, unsigned t, unsigned b);

/// Systematic encoding: c = m * G, first k symbols equal m.
SymbolVector encode(const OlscCode& code, const SymbolVector& m);

/// s_j = XOR of v_i over all i with H[j][i] = 1; zero iff v is a codeword.
SymbolVector syndrome(const OlscCode& code, const SymbolVector& v);

/// One-step majority-logic decoding of the k data symbols.
///
/// For each data position the 2t syndrome symbols of its checks are the
/// votes. A nonzero value held by at least t+1 votes is XORed out of the
/// received symbol; everything else passes through unchanged. Recovery is
/// exact whenever the received word is a codeword plus at most t symbol
/// errors (data and parity positions combined). A position is flagged
/// ambiguous when more than t votes are nonzero yet none of their values
/// reaches t+1 - a pattern no weight <= t corruption can produce.
///
/// Control flow and operation counts are input-independent: every vote is
/// tallied in full, with no early exit.
std::pair<SymbolVector, DecodeReport> decode(const OlscCode& code, const SymbolVector& v);

/// Dataflow depth of a fully parallel one-step decoder, in gate levels.
/// Each check sums q data symbols plus one parity symbol in an XOR tree;
/// vote aggregation reduces 2t votes; the threshold comparator adds a
/// constant. Independent of the number of messages processed, unlike the
/// sequential bounded-distance model which iterates over all n positions.
struct DepthModel {
    unsigned syndrome_depth = 0;    ///< ceil(log2(q)) + 1
    unsigned vote_depth = 0;        ///< ceil(log2(2t))
    unsigned comparator_depth = 0;  ///< fixed comparator/select stage
    unsigned total = 0;
    std::size_t sequential_iterations = 0;  ///< n, for the O(n) contrast model
};

DepthModel decoder_depth_model(unsigned q, unsigned t);

}  // namespace olsmc
