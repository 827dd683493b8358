#include "cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <random>

#include "CLI11.hpp"
#include "badderlocks/classifier.hpp"
#include "badderlocks/error.hpp"
#include "badderlocks/fastcrc.hpp"
#include "badderlocks/params.hpp"
#include "badderlocks/reefshoal.hpp"
#include "badderlocks/sbox.hpp"
#include "badderlocks/vectors.hpp"

namespace badderlocks::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Bytes read_message(const std::string& path, std::istream& in) {
    if (path.empty()) return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot open input file '" + path + "'");
    return Bytes(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

Bytes sha256(std::span<const std::uint8_t> data) {
    Bytes out(EVP_MAX_MD_SIZE);
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 computation failed");
    }
    out.resize(len);
    return out;
}

int run_classify(std::size_t bits, const std::string& engine, bool grouped, const std::string& path,
                 std::istream& in, std::ostream& out) {
    const GeneratorEntry& entry = entry_by_aligned_bits(bits);
    const Bytes message = read_message(path, in);
    const ClassifierDigest digest = engine == "ref" ? classify(message, entry) : classify_fast(message, entry);
    out << digest.hex(grouped) << '\n';
    return kSuccess;
}

int run_expand(bool grouped, const std::string& path, std::istream& in, std::ostream& out) {
    const Bytes message = read_message(path, in);
    const std::size_t width = kCodewordBits * std::max(message.size(), kMinCodewords);
    out << render_hex(expand_message(message), {.grouped = grouped, .min_digits = (width + 3) / 4}) << '\n';
    return kSuccess;
}

int run_vectors(const std::string& suite_text, bool check, const std::string& engine_text, std::ostream& out,
                std::ostream& err) {
    const VectorSuite suite = *parse_suite(suite_text);
    const Engine engine = engine_text == "fast" ? Engine::fast : Engine::reference;
    const auto vectors = embedded_vectors(suite);
    std::size_t matched = 0;
    for (const auto& v : vectors) {
        const std::string got = compute_vector_hex(suite, v, engine);
        if (!check) {
            out << format_vector_line(v.bits, v.input_spec, got) << '\n';
            continue;
        }
        if (normalize_hex(got) == normalize_hex(v.expected_hex)) {
            ++matched;
        } else {
            err << "mismatch: " << v.bits << ' ' << v.input_spec << "\n  expected " << v.expected_hex << "\n  got      "
                << got << '\n';
        }
    }
    if (!check) return kSuccess;
    out << matched << '/' << vectors.size() << " vectors match\n";
    return matched == vectors.size() ? kSuccess : kMismatch;
}

int run_verify_params(bool full, std::ostream& out) {
    const auto& reg = registry();
    const VerifyLevel level = full ? VerifyLevel::full : VerifyLevel::quick;

    std::vector<std::future<VerificationReport>> jobs;
    for (const auto& e : reg) {
        jobs.push_back(std::async(std::launch::async, [&e, level] { return verify_entry(e, level); }));
    }
    std::size_t passed = 0;
    for (auto& job : jobs) {
        const VerificationReport report = job.get();
        out << "entry " << report.index << " (" << report.aligned_bits << " bits): ";
        if (report.passed()) {
            ++passed;
            out << "ok (" << report.checks.size() << " checks)\n";
            continue;
        }
        out << "FAILED\n";
        for (const auto& c : report.checks) {
            if (!c.passed) out << "  " << c.name << ": " << c.detail << '\n';
        }
    }
    out << passed << '/' << reg.size() << " entries verified (" << (full ? "full" : "quick") << ")\n";
    return passed == reg.size() ? kSuccess : kMismatch;
}

int run_bench(std::size_t bits, std::size_t mebibytes, std::uint64_t seed, std::ostream& out, std::ostream& err) {
    const GeneratorEntry& entry = entry_by_aligned_bits(bits);
    Bytes data(mebibytes << 20);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < data.size(); i += 8) {
        const std::uint64_t r = rng();
        for (std::size_t k = 0; k < 8 && i + k < data.size(); ++k) data[i + k] = static_cast<std::uint8_t>(r >> (8 * k));
    }

    using Clock = std::chrono::steady_clock;
    auto rate = [&](Clock::time_point t0, Clock::time_point t1) {
        const double seconds = std::chrono::duration<double>(t1 - t0).count();
        return static_cast<unsigned long long>(static_cast<double>(data.size()) / std::max(seconds, 1e-9));
    };

    CrcTables::for_entry(entry);
    const auto t0 = Clock::now();
    const ClassifierDigest ref = classify(data, entry);
    const auto t1 = Clock::now();
    const ClassifierDigest fast = classify_fast(data, entry);
    const auto t2 = Clock::now();

    out << "engine=ref bytes_per_second=" << rate(t0, t1) << '\n';
    out << "engine=fast bytes_per_second=" << rate(t1, t2) << '\n';
    if (ref != fast) {
        err << "engines disagree on the benchmark input\n";
        return kMismatch;
    }
    return kSuccess;
}

int run_assemble(std::size_t modulus_bits, std::size_t reserve_bits, bool grouped, const std::string& path,
                 std::istream& in, std::ostream& out) {
    const Bytes message = read_message(path, in);
    const Bytes hash = sha256(message);
    const RepresentativeLayout layout = plan_layout(modulus_bits, 8 * hash.size(), reserve_bits);
    out << bytes_to_hex(assemble(message, hash, layout), grouped) << '\n';
    return kSuccess;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Badderlocks v0.1 message classifier and Reef-and-Shoal representative tool", "badderlocks"};
    app.require_subcommand(1, 1);

    std::size_t bits = 0;
    std::string engine = "fast";
    bool grouped = false;
    std::string in_path;

    auto* classify_cmd = app.add_subcommand("classify", "Print the classifier digest of the input bytes");
    classify_cmd->add_option("--bits", bits, "Aligned output size of the generator")->required();
    classify_cmd->add_option("--engine", engine, "ref or fast")->check(CLI::IsMember({"ref", "fast"}));
    classify_cmd->add_flag("--grouped", grouped, "Space every 8 hex digits");
    classify_cmd->add_option("--in", in_path, "Read the message from FILE instead of stdin");

    auto* expand_cmd = app.add_subcommand("expand", "Print the S-box expanded message polynomial");
    expand_cmd->add_flag("--grouped", grouped, "Space every 8 hex digits");
    expand_cmd->add_option("--in", in_path, "Read the message from FILE instead of stdin");

    std::string suite;
    bool check = false;
    std::string vector_engine = "ref";
    auto* vectors_cmd = app.add_subcommand("vectors", "Emit or check the published test vectors");
    vectors_cmd->add_option("--suite", suite, "c1, c2-fox, c2-small or c2-mixed")
        ->required()
        ->check(CLI::IsMember({"c1", "c2-fox", "c2-small", "c2-mixed"}));
    vectors_cmd->add_flag("--check", check, "Compare against the embedded tables");
    vectors_cmd->add_option("--engine", vector_engine, "ref or fast")->check(CLI::IsMember({"ref", "fast"}));

    bool full = false;
    auto* verify_cmd = app.add_subcommand("verify-params", "Verify the generator registry");
    verify_cmd->add_flag("--full", full, "Also check generator irreducibility and the Berlekamp-Massey round trip");

    std::size_t mebibytes = 16;
    std::uint64_t seed = 1;
    auto* bench_cmd = app.add_subcommand("bench", "Compare reference and table-driven throughput");
    bench_cmd->add_option("--bits", bits, "Aligned output size of the generator")->required();
    bench_cmd->add_option("--size", mebibytes, "Random input size in MiB")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", seed, "Seed for the random input");

    std::size_t modulus_bits = 0;
    std::size_t reserve_bits = 16;
    std::string hash_name = "sha256";
    auto* assemble_cmd = app.add_subcommand("assemble", "Print padding || classifier || SHA-256 for the input");
    assemble_cmd->add_option("--modulus-bits", modulus_bits, "Signature modulus size")->required();
    assemble_cmd->add_option("--hash", hash_name, "Hash function")->check(CLI::IsMember({"sha256"}));
    assemble_cmd->add_option("--reserve-bits", reserve_bits, "Padding field width");
    assemble_cmd->add_flag("--grouped", grouped, "Space every 8 hex digits");
    assemble_cmd->add_option("--in", in_path, "Read the message from FILE instead of stdin");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (classify_cmd->parsed()) return run_classify(bits, engine, grouped, in_path, in, out);
        if (expand_cmd->parsed()) return run_expand(grouped, in_path, in, out);
        if (vectors_cmd->parsed()) return run_vectors(suite, check, vector_engine, out, err);
        if (verify_cmd->parsed()) return run_verify_params(full, out);
        if (bench_cmd->parsed()) return run_bench(bits, mebibytes, seed, out, err);
        if (assemble_cmd->parsed()) return run_assemble(modulus_bits, reserve_bits, grouped, in_path, in, out);
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace badderlocks::cli
