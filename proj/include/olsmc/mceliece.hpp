// Copyright olsmc contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <utility>

#include "olsmc/olsc.hpp"
#include "olsmc/rng.hpp"

namespace olsmc {

/// G' = S*G*P. Knowing G' does not reveal the structured G without the
/// private factors.
class PublicKey {
  public:
    PublicKey(CodeParams params, BitMatrix g_prime);

    const CodeParams& params() const { return params_; }
    const BitMatrix& matrix() const { return g_prime_; }
    std::size_t k() const { return g_prime_.rows(); }
    std::size_t n() const { return g_prime_.cols(); }

    bool operator==(const PublicKey&) const = default;

  private:
    CodeParams params_;
    BitMatrix g_prime_;
};

/// The factors of G': the code itself, the scrambler S, and the column
/// permutation P, with both inverses precomputed for decryption.
class PrivateKey {
  public:
    /// Rebuilds the code from params and inverts S. Throws NotInvertible
    /// when S is singular.
    PrivateKey(CodeParams params, BitMatrix s, Permutation p);

    const CodeParams& params() const { return code_.params(); }
    const OlscCode& code() const { return code_; }
    const BitMatrix& scrambler() const { return s_; }
    const BitMatrix& scrambler_inv() const { return s_inv_; }
    const Permutation& permutation() const { return p_; }
    const Permutation& permutation_inv() const { return p_inv_; }

    /// Behavioral equality: same parameters and secret factors.
    bool operator==(const PrivateKey& o) const {
        return params() == o.params() && s_ == o.s_ && p_ == o.p_;
    }

  private:
    OlscCode code_;
    BitMatrix s_;
    BitMatrix s_inv_;
    Permutation p_;
    Permutation p_inv_;
};

/// One encrypted block: n symbols of width b.
class Ciphertext {
  public:
    Ciphertext(CodeParams params, SymbolVector payload);

    const CodeParams& params() const { return params_; }
    const SymbolVector& payload() const { return payload_; }

    bool operator==(const Ciphertext&) const = default;

  private:
    CodeParams params_;
    SymbolVector payload_;
};

struct KeyMetrics {
    std::size_t k = 0;
    std::size_t n = 0;
    unsigned b = 0;
    std::size_t matrix_bits = 0;          ///< k*n, the public key size
    std::size_t plaintext_bits = 0;       ///< k*b carried per block
    double plaintext_to_key_ratio = 0.0;  ///< b/n
    /// Plaintext bits carried per generating matrix of identical size,
    /// relative to a binary code: exactly b.
    unsigned factor = 0;
};

/// Samples S (uniform nonsingular) and P (uniform permutation), builds the
/// code, and publishes G' = S*G*P. Deterministic for a fixed rng seed.
std::pair<PublicKey, PrivateKey> keygen(unsigned q, unsigned t, unsigned b,
                                        ChaCha20Rng& rng);

/// Exactly t positions, drawn without replacement, each holding a uniform
/// nonzero b-bit value. Throws ParameterError if t > n or b is out of range.
SymbolVector sample_error(std::size_t n, std::size_t t, unsigned b, ChaCha20Rng& rng);

/// c = m*G' + e with a fresh weight-t error, t being the key's full
/// correction capability.
Ciphertext encrypt(const PublicKey& pk, const SymbolVector& m, ChaCha20Rng& rng);

/// Unpermute, majority-decode, unscramble. Honest ciphertexts decrypt to
/// the original message with report.ambiguous == 0; malformed ones pass
/// through with the damage recorded in the report rather than throwing.
std::pair<SymbolVector, DecodeReport> decrypt(const PrivateKey& sk, const Ciphertext& c);

KeyMetrics key_metrics(const PublicKey& pk);

/// Deliberately weakened constructions for tests: identity factors and
/// caller-chosen error vectors make intermediate values visible. Nothing
/// in the tool or library calls these.
namespace insecure {

std::pair<PublicKey, PrivateKey> keygen_from_factors(CodeParams params, BitMatrix s,
                                                     Permutation p);

Ciphertext encrypt_with_error(const PublicKey& pk, const SymbolVector& m,
                              const SymbolVector& e);

}  // namespace insecure

}  // namespace olsmc
