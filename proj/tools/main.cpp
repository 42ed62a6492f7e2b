// Copyright olsmc contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

// olsmc - key generation, encryption, decryption, and decoder benchmarks
// for the non-binary orthogonal-Latin-square McEliece scheme.
//
// Exit codes: 0 success, 2 usage or parameter error, 3 file or format
// error, 4 decode-integrity failure.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "olsmc/codec.hpp"
#include "olsmc/framing.hpp"
#include "olsmc/mceliece.hpp"

namespace fs = std::filesystem;
using namespace olsmc;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;
constexpr int kExitIntegrity = 4;

// Ambiguous votes or inconsistent framing after decoding.
struct IntegrityError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

std::vector<std::uint8_t> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("read failed on " + path.string());
    }
    return data;
}

// All output goes through a temp file renamed into place, so a failure
// partway through never leaves a partial file behind.
class AtomicWriter {
  public:
    explicit AtomicWriter(const fs::path& path)
        : final_path_(path), temp_path_(path.string() + ".tmp"), out_(temp_path_, std::ios::binary) {
        if (!out_) {
            throw IoError("cannot create " + temp_path_.string());
        }
    }

    ~AtomicWriter() {
        if (!committed_) {
            out_.close();
            std::error_code ec;
            fs::remove(temp_path_, ec);
        }
    }

    std::ostream& stream() { return out_; }

    void commit() {
        out_.flush();
        if (!out_) {
            throw IoError("write failed on " + temp_path_.string());
        }
        out_.close();
        fs::rename(temp_path_, final_path_);
        committed_ = true;
    }

  private:
    fs::path final_path_;
    fs::path temp_path_;
    std::ofstream out_;
    bool committed_ = false;
};

ChaCha20Rng make_rng([[maybe_unused]] const std::string& seed_hex) {
#ifdef OLSMC_ENABLE_TEST_SEED
    if (!seed_hex.empty()) {
        if (seed_hex.size() != 64) {
            throw ParameterError("--seed wants 64 hex digits (32 bytes)");
        }
        ChaCha20Rng::Seed seed{};
        for (std::size_t i = 0; i < seed.size(); ++i) {
            const std::string byte = seed_hex.substr(2 * i, 2);
            seed[i] = static_cast<std::uint8_t>(std::stoul(byte, nullptr, 16));
        }
        return ChaCha20Rng(seed);
    }
#endif
    return ChaCha20Rng::from_os_entropy();
}

void print_metrics(const KeyMetrics& m) {
    std::printf("%-28s %zu\n", "k (data symbols)", m.k);
    std::printf("%-28s %zu\n", "n (code length)", m.n);
    std::printf("%-28s %u\n", "b (symbol bits)", m.b);
    std::printf("%-28s %zu\n", "public matrix bits (k*n)", m.matrix_bits);
    std::printf("%-28s %zu\n", "plaintext bits per block", m.plaintext_bits);
    std::printf("%-28s %.6f\n", "plaintext/key ratio (b/n)", m.plaintext_to_key_ratio);
    std::printf("%-28s %u\n", "key-size factor vs binary", m.factor);
}

int cmd_keygen(unsigned q, unsigned t, unsigned b, const fs::path& pub_path,
               const fs::path& priv_path, const std::string& seed_hex) {
    auto rng = make_rng(seed_hex);
    const auto [pk, sk] = keygen(q, t, b, rng);

    AtomicWriter pub(pub_path);
    codec::write_public(pub.stream(), pk);
    pub.commit();

    AtomicWriter priv(priv_path);
    codec::write_private(priv.stream(), sk);
    priv.commit();

    print_metrics(key_metrics(pk));
    return 0;
}

int cmd_encrypt(const fs::path& pub_path, const fs::path& in_path,
                const fs::path& out_path, const std::string& seed_hex) {
    std::ifstream pub_in(pub_path, std::ios::binary);
    if (!pub_in) {
        throw IoError("cannot open " + pub_path.string());
    }
    const auto pk = codec::read_public(pub_in);

    const auto data = read_file(in_path);
    auto rng = make_rng(seed_hex);

    const auto messages = frame_message(data, pk.k(), pk.params().b);
    std::vector<Ciphertext> blocks;
    blocks.reserve(messages.size());
    for (const auto& m : messages) {
        blocks.push_back(encrypt(pk, m, rng));
    }

    AtomicWriter out(out_path);
    codec::write_ciphertext(out.stream(), pk.params(), blocks);
    out.commit();
    return 0;
}

int cmd_decrypt(const fs::path& priv_path, const fs::path& in_path,
                const fs::path& out_path) {
    std::ifstream priv_in(priv_path, std::ios::binary);
    if (!priv_in) {
        throw IoError("cannot open " + priv_path.string());
    }
    const auto sk = codec::read_private(priv_in);

    std::ifstream ct_in(in_path, std::ios::binary);
    if (!ct_in) {
        throw IoError("cannot open " + in_path.string());
    }
    const auto file = codec::read_ciphertext(ct_in);
    if (file.params != sk.params()) {
        throw ParameterError("ciphertext parameters do not match the key");
    }

    std::vector<SymbolVector> messages;
    messages.reserve(file.blocks.size());
    for (std::size_t i = 0; i < file.blocks.size(); ++i) {
        auto [m, report] = decrypt(sk, file.blocks[i]);
        if (report.ambiguous > 0) {
            throw IntegrityError("block " + std::to_string(i) + ": " +
                                 std::to_string(report.ambiguous) +
                                 " symbols with conflicting votes (wrong key or more than t errors)");
        }
        messages.push_back(std::move(m));
    }
    const auto data = unframe_message(messages);

    AtomicWriter out(out_path);
    out.stream().write(reinterpret_cast<const char*>(data.data()),
                       static_cast<std::streamsize>(data.size()));
    out.commit();
    return 0;
}

int cmd_bench(unsigned q, unsigned t, unsigned b, unsigned trials,
              const std::string& csv_path) {
    using Clock = std::chrono::steady_clock;
    const auto ns = [](Clock::duration d) {
        return static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(d).count());
    };

    const auto depth = decoder_depth_model(q, t);
    auto rng = ChaCha20Rng::from_os_entropy();

    struct Row {
        unsigned trial;
        const char* op;
        std::uint64_t wall_ns;
        DecodeReport report;  // zero except for decrypt rows
    };
    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(trials) * 3);

    std::uint64_t keygen_total = 0;
    std::uint64_t encrypt_total = 0;
    std::uint64_t decrypt_total = 0;
    std::uint64_t ff_ops_total = 0;
    bool counts_constant = true;
    DecodeReport first_report;

    for (unsigned trial = 0; trial < trials; ++trial) {
        const auto t0 = Clock::now();
        const auto [pk, sk] = keygen(q, t, b, rng);
        const auto t1 = Clock::now();

        SymbolVector m(pk.k(), b);
        for (std::size_t i = 0; i < m.size(); ++i) {
            m.set(i, rng.next_u64() & m.mask());
        }

        const auto t2 = Clock::now();
        const auto c = encrypt(pk, m, rng);
        const auto t3 = Clock::now();
        const auto [decoded, report] = decrypt(sk, c);
        const auto t4 = Clock::now();

        if (!(decoded == m)) {
            throw IntegrityError("benchmark round-trip failed");
        }
        if (trial == 0) {
            first_report = report;
        }
        counts_constant = counts_constant && report.xor_ops == first_report.xor_ops &&
                          report.cmp_ops == first_report.cmp_ops;
        ff_ops_total += report.field_ops;

        keygen_total += ns(t1 - t0);
        encrypt_total += ns(t3 - t2);
        decrypt_total += ns(t4 - t3);
        rows.push_back({trial, "keygen", ns(t1 - t0), {}});
        rows.push_back({trial, "encrypt", ns(t3 - t2), {}});
        rows.push_back({trial, "decrypt", ns(t4 - t3), report});
    }

    std::printf("olsmc bench  q=%u t=%u b=%u  trials=%u\n", q, t, b, trials);
    std::printf("%-10s %14s\n", "op", "mean_ns");
    std::printf("%-10s %14llu\n", "keygen",
                static_cast<unsigned long long>(keygen_total / trials));
    std::printf("%-10s %14llu\n", "encrypt",
                static_cast<unsigned long long>(encrypt_total / trials));
    std::printf("%-10s %14llu\n", "decrypt",
                static_cast<unsigned long long>(decrypt_total / trials));
    std::printf("finite-field ops: %llu\n",
                static_cast<unsigned long long>(ff_ops_total));
    std::printf("decode xor ops: %llu, compare ops: %llu (constant across trials: %s)\n",
                static_cast<unsigned long long>(first_report.xor_ops),
                static_cast<unsigned long long>(first_report.cmp_ops),
                counts_constant ? "yes" : "NO");
    std::printf(
        "one-step decoder depth: syndrome %u + vote %u + comparator %u = %u gate levels "
        "(message-count independent)\n",
        depth.syndrome_depth, depth.vote_depth, depth.comparator_depth, depth.total);
    std::printf("sequential bounded-distance contrast: %zu iterations (grows with n)\n",
                depth.sequential_iterations);

    if (!csv_path.empty()) {
        AtomicWriter csv{fs::path(csv_path)};
        csv.stream() << "trial,op,wall_ns,ff_ops,xor_ops,cmp_ops,depth_model\n";
        for (const auto& row : rows) {
            csv.stream() << row.trial << ',' << row.op << ',' << row.wall_ns << ','
                         << row.report.field_ops << ',' << row.report.xor_ops << ','
                         << row.report.cmp_ops << ',' << depth.total << '\n';
        }
        csv.commit();
    }
    if (!counts_constant) {
        throw IntegrityError("decode operation counts varied across trials");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"McEliece encryption over non-binary orthogonal Latin square codes"};
    app.require_subcommand(1);

    unsigned q = 0;
    unsigned t = 0;
    unsigned b = 0;
    unsigned trials = 10;
    std::string pub_path;
    std::string priv_path;
    std::string in_path;
    std::string out_path;
    std::string csv_path;
    std::string seed_hex;

    const auto add_seed = [&](CLI::App* cmd) {
#ifdef OLSMC_ENABLE_TEST_SEED
        cmd->add_option("--seed", seed_hex, "32-byte hex seed (test builds only)");
#else
        (void)cmd;
#endif
    };

    auto* kg = app.add_subcommand("keygen", "generate a key pair");
    kg->add_option("--q", q, "prime Latin square order")->required();
    kg->add_option("--t", t, "error correction capability")->required();
    kg->add_option("--b", b, "symbol width in bits")->required();
    kg->add_option("--pub", pub_path, "public key output path")->required();
    kg->add_option("--priv", priv_path, "private key output path")->required();
    add_seed(kg);

    auto* enc = app.add_subcommand("encrypt", "encrypt a file");
    enc->add_option("--pub", pub_path, "public key path")->required();
    enc->add_option("--in", in_path, "plaintext input path")->required();
    enc->add_option("--out", out_path, "ciphertext output path")->required();
    add_seed(enc);

    auto* dec = app.add_subcommand("decrypt", "decrypt a file");
    dec->add_option("--priv", priv_path, "private key path")->required();
    dec->add_option("--in", in_path, "ciphertext input path")->required();
    dec->add_option("--out", out_path, "plaintext output path")->required();

    auto* bench = app.add_subcommand("bench", "measure and model the decoder");
    bench->add_option("--q", q, "prime Latin square order")->required();
    bench->add_option("--t", t, "error correction capability")->required();
    bench->add_option("--b", b, "symbol width in bits")->required();
    bench->add_option("--trials", trials, "number of trials")
        ->check(CLI::Range(1u, 1000000u));
    bench->add_option("--csv", csv_path, "per-trial CSV output path");

    try {
        app.parse(argc, argv);
        if (kg->parsed()) {
            return cmd_keygen(q, t, b, pub_path, priv_path, seed_hex);
        }
        if (enc->parsed()) {
            return cmd_encrypt(pub_path, in_path, out_path, seed_hex);
        }
        if (dec->parsed()) {
            return cmd_decrypt(priv_path, in_path, out_path);
        }
        return cmd_bench(q, t, b, trials, csv_path);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return kExitUsage;
    } catch (const ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << '\n';
        return kExitIntegrity;
    } catch (const FramingError& e) {
        std::cerr << "integrity error: " << e.what() << '\n';
        return kExitIntegrity;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFormat;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFormat;
    }
}
