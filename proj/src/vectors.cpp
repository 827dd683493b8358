#include "badderlocks/vectors.hpp"

#include <cctype>
#include <charconv>

#include "badderlocks/embedded_data.hpp"
#include "badderlocks/error.hpp"
#include "badderlocks/fastcrc.hpp"
#include "badderlocks/params.hpp"
#include "badderlocks/sbox.hpp"

namespace badderlocks {

std::optional<VectorSuite> parse_suite(std::string_view name) {
    if (name == "c1") return VectorSuite::expansion;
    if (name == "c2-fox") return VectorSuite::fox;
    if (name == "c2-small") return VectorSuite::small;
    if (name == "c2-mixed") return VectorSuite::mixed;
    return std::nullopt;
}

std::string_view suite_name(VectorSuite suite) {
    switch (suite) {
        case VectorSuite::expansion: return "c1";
        case VectorSuite::fox: return "c2-fox";
        case VectorSuite::small: return "c2-small";
        case VectorSuite::mixed: return "c2-mixed";
    }
    return "?";
}

Bytes decode_input_spec(std::string_view spec) {
    if (spec.starts_with("text:")) return to_bytes(spec.substr(5));
    if (spec.starts_with("hex:")) {
        const auto digits = spec.substr(4);
        if (digits.size() % 2 != 0) throw ParseError("hex input has an odd number of digits", spec.size());
        Bytes out;
        for (std::size_t i = 0; i < digits.size(); i += 2) {
            unsigned v = 0;
            const auto [ptr, ec] = std::from_chars(digits.data() + i, digits.data() + i + 2, v, 16);
            if (ec != std::errc{} || ptr != digits.data() + i + 2) {
                throw ParseError("bad hex byte in input spec", 4 + i);
            }
            out.push_back(static_cast<std::uint8_t>(v));
        }
        return out;
    }
    throw ParseError("input spec must start with 'hex:' or 'text:'", 0);
}

std::vector<TestVector> parse_vectors(std::string_view text) {
    std::vector<TestVector> out;
    std::size_t offset = 0;
    while (offset < text.size()) {
        auto eol = text.find('\n', offset);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(offset, eol - offset);
        const std::size_t line_start = offset;
        offset = eol + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;

        const auto t1 = line.find('\t');
        const auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
        if (t2 == std::string_view::npos) throw ParseError("vector line needs three tab-separated fields", line_start);

        TestVector v;
        const auto bits = line.substr(0, t1);
        const auto [ptr, ec] = std::from_chars(bits.data(), bits.data() + bits.size(), v.bits);
        if (ec != std::errc{} || ptr != bits.data() + bits.size()) throw ParseError("bad size field", line_start);
        v.input_spec = std::string(line.substr(t1 + 1, t2 - t1 - 1));
        v.message = decode_input_spec(v.input_spec);
        v.expected_hex = std::string(line.substr(t2 + 1));
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<TestVector> embedded_vectors(VectorSuite suite) {
    switch (suite) {
        case VectorSuite::expansion: return parse_vectors(data::vectors_c1_tsv());
        case VectorSuite::fox: return parse_vectors(data::vectors_c2_fox_tsv());
        case VectorSuite::small: return parse_vectors(data::vectors_c2_small_tsv());
        case VectorSuite::mixed: return parse_vectors(data::vectors_c2_mixed_tsv());
    }
    return {};
}

std::string compute_vector_hex(VectorSuite suite, const TestVector& vector, Engine engine) {
    if (suite == VectorSuite::expansion) {
        const std::size_t width = kCodewordBits * std::max(vector.message.size(), kMinCodewords);
        return render_hex(expand_message(vector.message), {.grouped = true, .min_digits = (width + 3) / 4});
    }
    const GeneratorEntry& entry = entry_by_aligned_bits(vector.bits);
    const ClassifierDigest digest =
        engine == Engine::fast ? classify_fast(vector.message, entry) : classify(vector.message, entry);
    return digest.hex(true);
}

std::string normalize_hex(std::string_view hex) {
    std::string out;
    for (char c : hex) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    return out;
}

std::string format_vector_line(std::size_t bits, std::string_view input_spec, std::string_view hex) {
    std::string line = std::to_string(bits);
    line += '\t';
    line += input_spec;
    line += '\t';
    line += hex;
    return line;
}

}  // namespace badderlocks
