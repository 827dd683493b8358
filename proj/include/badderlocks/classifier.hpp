#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "badderlocks/gf2poly.hpp"
#include "badderlocks/params.hpp"

namespace badderlocks {

using Bytes = std::vector<std::uint8_t>;

/// Classifier output: the CRC remainder as big-endian bytes, left-padded with
/// zero bits to the entry's aligned size.
struct ClassifierDigest {
    Bytes bytes;
    /// The entry used; registry entries live for the whole program.
    const GeneratorEntry* entry = nullptr;

    std::string hex(bool grouped = false) const;
    friend bool operator==(const ClassifierDigest& a, const ClassifierDigest& b) { return a.bytes == b.bytes; }
};

/// Bytes of a text string, without any terminator.
Bytes to_bytes(std::string_view text);

/// Uppercase hex of a byte string, optionally in groups of 8 digits counted
/// from the right.
std::string bytes_to_hex(std::span<const std::uint8_t> bytes, bool grouped = false);

/// Big-endian byte rendering of p in exactly `length` bytes. p must fit.
Bytes polynomial_to_bytes(const BitPolynomial& p, std::size_t length);
BitPolynomial polynomial_from_bytes(std::span<const std::uint8_t> bytes);

/// x^degree * expanded mod generator, the CRC stage on an already expanded
/// message polynomial.
BitPolynomial crc_remainder(const BitPolynomial& expanded, const GeneratorEntry& entry);

/// Reference classifier: S-box expansion, then the CRC remainder. No final
/// inversion is applied.
ClassifierDigest classify(std::span<const std::uint8_t> message, const GeneratorEntry& entry);

/// Digest entropy over a uniform source on the distinct members of
/// `messages`, divided by min(log2 |messages|, entry.degree). Duplicates
/// collapse; fewer than two distinct messages throws ParameterError.
double entropy_ratio(std::span<const Bytes> messages, const GeneratorEntry& entry);

}  // namespace badderlocks
