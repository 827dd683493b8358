#include <random>
#include <set>

#include "badderlocks/sbox.hpp"
#include "badderlocks/vectors.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace badderlocks;

TEST_CASE("candidate codewords") {
    const auto c = candidates_308();
    CHECK(c.size() == 308);
    CHECK(std::is_sorted(c.begin(), c.end()));
    CHECK(std::find(c.begin(), c.end(), kFillerCodeword) != c.end());
    CHECK_FALSE(is_candidate_codeword(0));
    CHECK_FALSE(is_candidate_codeword(512));
    for (unsigned v = 0; v < 512; ++v) {
        CAPTURE(v);
        CHECK(is_candidate_codeword(static_cast<std::uint16_t>(v)) == oracle::candidate(v));
    }
}

TEST_CASE("codeword table shape") {
    const auto& t = codeword_table();
    CHECK(t[0x00] == 69);
    CHECK(t[0xFF] == 442);
    CHECK(t[0x41] == 163);
    CHECK(t.filler() == 71);
    const auto e = t.entries();
    for (std::size_t i = 1; i < e.size(); ++i) CHECK(e[i - 1] < e[i]);
    for (auto v : e) {
        CHECK(v != kFillerCodeword);
        CHECK(oracle::candidate(v));
    }
}

TEST_CASE("codeword table validation rejects bad data") {
    std::array<std::uint16_t, 256> entries{};
    std::copy(codeword_table().entries().begin(), codeword_table().entries().end(), entries.begin());
    auto swapped = entries;
    std::swap(swapped[3], swapped[4]);
    CHECK_THROWS_AS(CodewordTable{swapped}, std::logic_error);
    auto with_filler = entries;
    with_filler[0] = kFillerCodeword;
    CHECK_THROWS_AS(CodewordTable{with_filler}, std::logic_error);
    auto non_candidate = entries;
    non_candidate[0] = 1;
    CHECK_THROWS_AS(CodewordTable{non_candidate}, std::logic_error);
    CHECK_NOTHROW(CodewordTable{entries});
}

TEST_CASE("expansion examples") {
    const Bytes first{0, 1, 2, 3, 4, 5, 6, 7};
    CHECK(expand_message(first) == parse_hex("22 918924A2 59309A4E"));
    const Bytes pq{0x70, 0x71, 0x72, 0x73, 0x74, 0x75, 0x76, 0x77};
    CHECK(expand_message(pq) == parse_hex("6E 385C4E37 2395CCE7"));

    std::string eight_fillers;
    for (int i = 0; i < 8; ++i) eight_fillers += oracle::bit_string(kFillerCodeword, 9);
    CHECK(expand_message(Bytes{}) == oracle::poly_from_bit_string(eight_fillers));
    CHECK(render_hex(expand_message(Bytes{})) == "2391C8E472391C8E47");
}

TEST_CASE("expansion table rows") {
    const auto vectors = embedded_vectors(VectorSuite::expansion);
    CHECK(vectors.size() == 32);
    for (const auto& v : vectors) {
        CAPTURE(v.input_spec);
        CHECK(expand_message(v.message) == parse_hex(v.expected_hex));
    }
}

TEST_CASE("expansion matches bit-string concatenation") {
    std::mt19937_64 rng(21);
    const auto& t = codeword_table();
    for (int trial = 0; trial < 300; ++trial) {
        const auto msg = oracle::random_bytes(rng, rng() % 40);
        std::string bits;
        for (auto b : msg) bits += oracle::bit_string(t[b], 9);
        for (std::size_t i = msg.size(); i < 8; ++i) bits += oracle::bit_string(kFillerCodeword, 9);
        CHECK(expand_message(msg) == oracle::poly_from_bit_string(bits));
    }
}

TEST_CASE("expansion length law") {
    std::mt19937_64 rng(22);
    for (std::size_t len = 0; len < 64; ++len) {
        const auto msg = oracle::random_bytes(rng, len);
        const auto p = expand_message(msg);
        // A codeword starts with a run of at most two equal bits, so one of
        // the top three bits of the expansion is set.
        const std::size_t width = 9 * std::max<std::size_t>(8, len);
        REQUIRE(p.degree().has_value());
        CHECK(*p.degree() < width);
        CHECK(*p.degree() >= width - 3);
    }
}

TEST_CASE("expansion is injective for equal lengths") {
    std::set<std::vector<std::uint64_t>> seen;
    for (unsigned b = 0; b < 256; ++b) {
        const Bytes msg{static_cast<std::uint8_t>(b)};
        const auto p = expand_message(msg);
        seen.emplace(p.words().begin(), p.words().end());
    }
    CHECK(seen.size() == 256);

    std::mt19937_64 rng(23);
    for (std::size_t len = 2; len <= 4; ++len) {
        for (int trial = 0; trial < 2000; ++trial) {
            const auto a = oracle::random_bytes(rng, len);
            auto b = a;
            b[rng() % len] ^= static_cast<std::uint8_t>(1u + rng() % 255);
            CHECK(expand_message(a) != expand_message(b));
        }
    }
}

TEST_CASE("pair window weights as observed") {
    // Characterization of the actual table: windows straddling a codeword
    // boundary reach weights 1 and 8. The acceptance suite checks the
    // stronger [2,7] bound separately.
    const auto stats = pair_window_weights();
    CHECK(stats.min_weight == 1);
    CHECK(stats.max_weight == 8);
    CHECK(stats.windows_by_weight[1] == 68);
    CHECK(stats.windows_by_weight[8] == 54);
    std::size_t total = 0;
    for (auto n : stats.windows_by_weight) total += n;
    CHECK(total == 257u * 257u * 10u);

    // Codewords 88 then 69 give 001011000 001000101; the window starting six
    // bits in is 000001000.
    const std::string pair = oracle::bit_string(88, 9) + oracle::bit_string(69, 9);
    const std::string window = pair.substr(6, 9);
    CHECK(std::count(window.begin(), window.end(), '1') == 1);
}
