#include <random>

#include "badderlocks/classifier.hpp"
#include "badderlocks/error.hpp"
#include "badderlocks/sbox.hpp"
#include "badderlocks/vectors.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace badderlocks;

namespace {

const std::string kFox = "The quick brown fox jumps over the lazy dog";

// Classifier built from the coefficient-vector oracle and bit strings.
Bytes oracle_classify(const Bytes& msg, const GeneratorEntry& e) {
    const auto& t = codeword_table();
    std::string bits;
    for (auto b : msg) bits += oracle::bit_string(t[b], 9);
    for (std::size_t i = msg.size(); i < 8; ++i) bits += oracle::bit_string(71, 9);
    bits.append(e.degree, '0');
    const auto rem = oracle::mod(oracle::from_poly(oracle::poly_from_bit_string(bits)), oracle::from_poly(e.generator));
    Bytes out(e.aligned_bits / 8, 0);
    for (std::size_t k = 0; k < rem.size(); ++k) {
        if (rem[k]) out[out.size() - 1 - k / 8] |= static_cast<std::uint8_t>(1u << (k % 8));
    }
    return out;
}

}  // namespace

TEST_CASE("classifier examples") {
    const auto& e64 = entry_by_aligned_bits(64);
    CHECK(classify(to_bytes(kFox), e64).hex() == "4A0B6AAA2BA80913");
    CHECK(classify(to_bytes(""), e64).hex(true) == "497DB905 9F4F543C");
    CHECK(classify(to_bytes("A"), e64).hex(true) == "177EB92F 319B46C1");

    const auto abc = classify(to_bytes("ABCDEFGHI"), entry_by_aligned_bits(320)).hex(true);
    CHECK(abc.starts_with("6A1D2FA7 7FF5522A"));
    CHECK(abc.ends_with("B37B5300"));

    const Bytes mixed{0x5D, 0xBA, 0x17, 0x74, 0xD1, 0x2E, 0x8B, 0xE8,
                      0x45, 0xA2, 0xFF, 0x5C, 0xB9, 0x16, 0x73, 0xD0};
    const auto m = classify(mixed, entry_by_aligned_bits(416)).hex(true);
    CHECK(m.starts_with("01C37376"));
    CHECK(m.ends_with("AAC59163"));
}

TEST_CASE("published classifier tables") {
    for (auto suite : {VectorSuite::fox, VectorSuite::small, VectorSuite::mixed}) {
        const auto vectors = embedded_vectors(suite);
        CHECK_FALSE(vectors.empty());
        for (const auto& v : vectors) {
            CAPTURE(v.bits);
            CAPTURE(v.input_spec);
            CHECK(normalize_hex(compute_vector_hex(suite, v)) == normalize_hex(v.expected_hex));
        }
    }
    CHECK(embedded_vectors(VectorSuite::fox).size() == 30);
    CHECK(embedded_vectors(VectorSuite::small).size() == 20);
    CHECK(embedded_vectors(VectorSuite::mixed).size() == 2);
}

TEST_CASE("classifier agrees with the bit-string oracle") {
    std::mt19937_64 rng(31);
    for (const auto& e : registry()) {
        if (e.degree > 700) continue;
        for (int trial = 0; trial < 8; ++trial) {
            const auto msg = oracle::random_bytes(rng, rng() % 24);
            CAPTURE(e.index);
            CHECK(classify(msg, e).bytes == oracle_classify(msg, e));
        }
    }
}

TEST_CASE("digest shape") {
    std::mt19937_64 rng(32);
    for (const auto& e : registry()) {
        const auto empty = classify(Bytes{}, e);
        CHECK(empty.bytes.size() == e.aligned_bits / 8);
        CHECK(empty.entry == &e);
        CHECK(std::any_of(empty.bytes.begin(), empty.bytes.end(), [](auto b) { return b != 0; }));

        const std::size_t pad = e.aligned_bits - e.degree;
        for (int trial = 0; trial < 100; ++trial) {
            const auto d = classify(oracle::random_bytes(rng, rng() % 48), e);
            CHECK((d.bytes[0] >> (8 - pad)) == 0);
            CHECK(polynomial_from_bytes(d.bytes).degree().value_or(0) < e.degree);
        }
    }
}

TEST_CASE("crc is linear on equal-length expansions") {
    std::mt19937_64 rng(33);
    for (const auto& e : registry()) {
        for (int trial = 0; trial < 5; ++trial) {
            const std::size_t len = 8 + rng() % 40;
            const auto p = expand_message(oracle::random_bytes(rng, len));
            const auto q = expand_message(oracle::random_bytes(rng, len));
            CHECK(crc_remainder(p ^ q, e) == (crc_remainder(p, e) ^ crc_remainder(q, e)));
        }
    }
}

TEST_CASE("short messages equal the filler-completed polynomial") {
    std::mt19937_64 rng(34);
    const auto& t = codeword_table();
    for (const auto& e : registry()) {
        for (std::size_t len = 1; len < 8; ++len) {
            const auto msg = oracle::random_bytes(rng, len);
            std::string bits;
            for (auto b : msg) bits += oracle::bit_string(t[b], 9);
            while (bits.size() < 72) bits += oracle::bit_string(71, 9);
            const auto direct = crc_remainder(oracle::poly_from_bit_string(bits), e);
            CHECK(classify(msg, e).bytes == polynomial_to_bytes(direct, e.aligned_bits / 8));
        }
    }
}

TEST_CASE("byte conversions") {
    CHECK(bytes_to_hex(Bytes{0x00, 0xAB, 0x01}) == "00AB01");
    CHECK(bytes_to_hex(Bytes{1, 2, 3, 4, 5, 6, 7, 8, 9}, true) == "01 02030405 06070809");
    CHECK(polynomial_to_bytes(parse_hex("1FF"), 3) == Bytes{0x00, 0x01, 0xFF});
    CHECK_THROWS_AS(polynomial_to_bytes(parse_hex("1FF"), 1), ParameterError);
    CHECK(polynomial_from_bytes(Bytes{0x00, 0x01, 0xFF}) == parse_hex("1FF"));
    CHECK(to_bytes("Hi") == Bytes{'H', 'i'});
}

TEST_CASE("entropy ratio") {
    const auto& e64 = entry_by_aligned_bits(64);
    std::vector<Bytes> all;
    for (unsigned b = 0; b < 256; ++b) all.push_back(Bytes{static_cast<std::uint8_t>(b)});
    CHECK(entropy_ratio(all, e64) == 1.0);

    std::mt19937_64 rng(35);
    std::vector<Bytes> random;
    for (int i = 0; i < 1000; ++i) random.push_back(oracle::random_bytes(rng, 16));
    CHECK(entropy_ratio(random, e64) >= 0.99);

    const std::vector<Bytes> dup{to_bytes("m"), to_bytes("m")};
    CHECK_THROWS_AS(entropy_ratio(dup, e64), ParameterError);

    std::vector<Bytes> with_dups = all;
    with_dups.push_back(Bytes{7});
    CHECK(entropy_ratio(with_dups, e64) == 1.0);
}
