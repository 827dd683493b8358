#include "badderlocks/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "badderlocks/error.hpp"
#include "badderlocks/sbox.hpp"

namespace badderlocks {

std::string ClassifierDigest::hex(bool grouped) const { return bytes_to_hex(bytes, grouped); }

Bytes to_bytes(std::string_view text) { return Bytes(text.begin(), text.end()); }

std::string bytes_to_hex(std::span<const std::uint8_t> bytes, bool grouped) {
    static constexpr char kDigits[] = "0123456789ABCDEF";
    std::string out;
    out.reserve(bytes.size() * 2 + bytes.size() / 4);
    const std::size_t ndigits = bytes.size() * 2;
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        for (int half = 0; half < 2; ++half) {
            const std::size_t remaining = ndigits - (2 * i + half);
            if (grouped && !out.empty() && remaining % 8 == 0) out.push_back(' ');
            out.push_back(kDigits[half == 0 ? bytes[i] >> 4 : bytes[i] & 0xF]);
        }
    }
    return out;
}

Bytes polynomial_to_bytes(const BitPolynomial& p, std::size_t length) {
    const auto deg = p.degree();
    if (deg && *deg >= 8 * length) throw ParameterError("polynomial does not fit in the requested byte length");
    Bytes out(length, 0);
    const auto words = p.words();
    for (std::size_t k = 0; k < length; ++k) {
        // byte k from the end holds coefficients 8k..8k+7
        const std::size_t w = k / 8;
        if (w < words.size()) out[length - 1 - k] = static_cast<std::uint8_t>(words[w] >> (8 * (k % 8)));
    }
    return out;
}

BitPolynomial polynomial_from_bytes(std::span<const std::uint8_t> bytes) {
    std::vector<std::uint64_t> words((bytes.size() + 7) / 8, 0);
    for (std::size_t k = 0; k < bytes.size(); ++k) {
        words[k / 8] |= std::uint64_t{bytes[bytes.size() - 1 - k]} << (8 * (k % 8));
    }
    return BitPolynomial::from_words(std::move(words));
}

BitPolynomial crc_remainder(const BitPolynomial& expanded, const GeneratorEntry& entry) {
    return remainder(shift_left(expanded, entry.degree), entry.generator);
}

ClassifierDigest classify(std::span<const std::uint8_t> message, const GeneratorEntry& entry) {
    const BitPolynomial crc = crc_remainder(expand_message(message), entry);
    return {polynomial_to_bytes(crc, entry.aligned_bits / 8), &entry};
}

double entropy_ratio(std::span<const Bytes> messages, const GeneratorEntry& entry) {
    const std::set<Bytes> distinct(messages.begin(), messages.end());
    if (distinct.size() < 2) {
        throw ParameterError("entropy_ratio needs at least 2 distinct messages, got " + std::to_string(distinct.size()));
    }
    std::map<Bytes, std::size_t> tally;
    for (const auto& m : distinct) ++tally[classify(m, entry).bytes];

    const double total = static_cast<double>(distinct.size());
    double digest_entropy = 0.0;
    for (const auto& [digest, count] : tally) {
        const double p = static_cast<double>(count) / total;
        digest_entropy -= p * std::log2(p);
    }
    const double source_entropy = std::log2(total);
    return digest_entropy / std::min(source_entropy, static_cast<double>(entry.degree));
}

}  // namespace badderlocks
