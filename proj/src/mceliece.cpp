// Copyright olsmc contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "olsmc/mceliece.hpp"

#include <string>

namespace olsmc {

PublicKey::PublicKey(CodeParams params, BitMatrix g_prime)
    : params_(params), g_prime_(std::move(g_prime)) {
    const std::size_t k = static_cast<std::size_t>(params.q) * params.q;
    const std::size_t n = k + static_cast<std::size_t>(2) * params.t * params.q;
    if (g_prime_.rows() != k || g_prime_.cols() != n) {
        throw DimensionMismatch("public matrix must be k x n for its parameters");
    }
}

PrivateKey::PrivateKey(CodeParams params, BitMatrix s, Permutation p)
    : code_(build_code(params.q, params.t, params.b)),
      s_(std::move(s)),
      p_(std::move(p)),
      p_inv_(Permutation::identity(0)) {
    if (s_.rows() != code_.k() || s_.cols() != code_.k()) {
        throw DimensionMismatch("scrambler must be k x k");
    }
    if (p_.size() != code_.n()) {
        throw DimensionMismatch("permutation must have size n");
    }
    auto inv = invert(s_);
    if (!inv) {
        throw NotInvertible("scrambler matrix is singular");
    }
    s_inv_ = std::move(*inv);
    p_inv_ = p_.inverse();
}

Ciphertext::Ciphertext(CodeParams params, SymbolVector payload)
    : params_(params), payload_(std::move(payload)) {
    const std::size_t k = static_cast<std::size_t>(params.q) * params.q;
    const std::size_t n = k + static_cast<std::size_t>(2) * params.t * params.q;
    if (payload_.size() != n || payload_.width_bits() != params.b) {
        throw DimensionMismatch("ciphertext must hold n symbols of width b");
    }
}

std::pair<PublicKey, PrivateKey> keygen(unsigned q, unsigned t, unsigned b,
                                        ChaCha20Rng& rng) {
    OlscCode code = build_code(q, t, b);
    BitMatrix s = random_nonsingular(code.k(), rng);
    Permutation p = random_permutation(code.n(), rng);
    BitMatrix g_prime = mat_mul(mat_mul(s, code.G()), p.as_matrix());
    CodeParams params = code.params();
    return {PublicKey(params, std::move(g_prime)),
            PrivateKey(params, std::move(s), std::move(p))};
}

SymbolVector sample_error(std::size_t n, std::size_t t, unsigned b, ChaCha20Rng& rng) {
    if (t > n) {
        throw ParameterError("error weight t cannot exceed n");
    }
    if (b < 1 || b > 64) {
        throw ParameterError("symbol width b must be in [1, 64]");
    }
    SymbolVector e(n, b);
    // Partial Fisher-Yates: the first t slots of `positions` end up as a
    // uniform t-subset.
    std::vector<std::uint32_t> positions(n);
    for (std::size_t i = 0; i < n; ++i) {
        positions[i] = static_cast<std::uint32_t>(i);
    }
    const std::uint64_t nonzero_values = e.mask();  // 2^b - 1
    for (std::size_t i = 0; i < t; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.uniform(n - i));
        std::swap(positions[i], positions[j]);
        e.set(positions[i], 1 + rng.uniform(nonzero_values));
    }
    return e;
}

Ciphertext encrypt(const PublicKey& pk, const SymbolVector& m, ChaCha20Rng& rng) {
    if (m.size() != pk.k() || m.width_bits() != pk.params().b) {
        throw DimensionMismatch("message must be k symbols of width b");
    }
    SymbolVector c = apply_matrix(m, pk.matrix());
    SymbolVector e = sample_error(pk.n(), pk.params().t, pk.params().b, rng);
    return Ciphertext(pk.params(), xor_vectors(c, e));
}

std::pair<SymbolVector, DecodeReport> decrypt(const PrivateKey& sk, const Ciphertext& c) {
    if (c.params() != sk.params()) {
        throw DimensionMismatch("ciphertext parameters do not match key");
    }
    // c*P^-1 is codeword-plus-error in code coordinates; the decoded data
    // part is m*S, so one multiply by S^-1 finishes.
    SymbolVector aligned = unpermute(c.payload(), sk.permutation());
    auto [scrambled, report] = decode(sk.code(), aligned);
    return {apply_matrix(scrambled, sk.scrambler_inv()), report};
}

KeyMetrics key_metrics(const PublicKey& pk) {
    KeyMetrics m;
    m.k = pk.k();
    m.n = pk.n();
    m.b = pk.params().b;
    m.matrix_bits = m.k * m.n;
    m.plaintext_bits = m.k * m.b;
    m.plaintext_to_key_ratio = static_cast<double>(m.b) / static_cast<double>(m.n);
    m.factor = m.b;
    return m;
}

namespace insecure {

std::pair<PublicKey, PrivateKey> keygen_from_factors(CodeParams params, BitMatrix s,
                                                     Permutation p) {
    PrivateKey sk(params, std::move(s), std::move(p));
    BitMatrix g_prime =
        mat_mul(mat_mul(sk.scrambler(), sk.code().G()), sk.permutation().as_matrix());
    return {PublicKey(params, std::move(g_prime)), std::move(sk)};
}

Ciphertext encrypt_with_error(const PublicKey& pk, const SymbolVector& m,
                              const SymbolVector& e) {
    if (m.size() != pk.k() || m.width_bits() != pk.params().b) {
        throw DimensionMismatch("message must be k symbols of width b");
    }
    return Ciphertext(pk.params(), xor_vectors(apply_matrix(m, pk.matrix()), e));
}

}  // namespace insecure

}  // namespace olsmc
