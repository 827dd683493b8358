#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "badderlocks/classifier.hpp"
#include "badderlocks/params.hpp"

namespace badderlocks {

/// Field widths of a message representative padding || classifier || hash,
/// all in bits and whole bytes.
struct RepresentativeLayout {
    std::size_t modulus_bits = 0;
    std::size_t reserve_bits = 0;
    std::size_t classifier_bits = 0;
    std::size_t hash_bits = 0;
    Bytes padding_bytes;
    const GeneratorEntry* entry = nullptr;

    std::size_t total_bytes() const noexcept { return (reserve_bits + classifier_bits + hash_bits) / 8; }
};

/// reserve_bits / 8 bytes: zeros followed by a final 0x01.
Bytes default_padding(std::size_t reserve_bits);

/// Picks the largest classifier that fits beside the padding and hash fields.
/// Arguments must be multiples of 8 and the modulus nonzero (ParameterError).
/// When nothing fits, ParameterError reports the smallest workable modulus.
RepresentativeLayout plan_layout(std::size_t modulus_bits, std::size_t hash_bits, std::size_t reserve_bits = 16);

/// Same, with caller-chosen padding content; its length fixes reserve_bits.
RepresentativeLayout plan_layout_with_padding(std::size_t modulus_bits, std::size_t hash_bits, Bytes padding);

/// padding || classify(message) || hash_output. The result is shorter than the
/// modulus when the classifier does not fill the budget exactly; it is then
/// meant as a right-aligned integer. Throws ParameterError when hash_output
/// does not have hash_bits / 8 bytes.
Bytes assemble(std::span<const std::uint8_t> message, std::span<const std::uint8_t> hash_output,
               const RepresentativeLayout& layout);

}  // namespace badderlocks
