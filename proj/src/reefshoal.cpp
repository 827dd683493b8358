#include "badderlocks/reefshoal.hpp"

#include <string>

#include "badderlocks/error.hpp"
#include "badderlocks/fastcrc.hpp"

namespace badderlocks {

namespace {

void require_byte_multiple(std::size_t bits, const char* name) {
    if (bits % 8 != 0) {
        throw ParameterError(std::string(name) + " must be a multiple of 8, got " + std::to_string(bits));
    }
}

}  // namespace

Bytes default_padding(std::size_t reserve_bits) {
    require_byte_multiple(reserve_bits, "reserve_bits");
    Bytes out(reserve_bits / 8, 0x00);
    if (!out.empty()) out.back() = 0x01;
    return out;
}

RepresentativeLayout plan_layout_with_padding(std::size_t modulus_bits, std::size_t hash_bits, Bytes padding) {
    if (modulus_bits == 0) throw ParameterError("modulus_bits must be positive");
    require_byte_multiple(modulus_bits, "modulus_bits");
    require_byte_multiple(hash_bits, "hash_bits");

    const std::size_t reserve_bits = 8 * padding.size();
    const std::size_t smallest = registry().front().aligned_bits;
    const std::size_t minimum_modulus = reserve_bits + hash_bits + smallest;
    if (modulus_bits < minimum_modulus) {
        throw ParameterError("no classifier fits: " + std::to_string(modulus_bits) + "-bit modulus with " +
                             std::to_string(reserve_bits) + " padding bits and " + std::to_string(hash_bits) +
                             " hash bits; the modulus needs at least " + std::to_string(minimum_modulus) + " bits");
    }

    const GeneratorEntry& entry = select_generator(modulus_bits - reserve_bits - hash_bits);
    RepresentativeLayout layout;
    layout.modulus_bits = modulus_bits;
    layout.reserve_bits = reserve_bits;
    layout.classifier_bits = entry.aligned_bits;
    layout.hash_bits = hash_bits;
    layout.padding_bytes = std::move(padding);
    layout.entry = &entry;
    return layout;
}

RepresentativeLayout plan_layout(std::size_t modulus_bits, std::size_t hash_bits, std::size_t reserve_bits) {
    return plan_layout_with_padding(modulus_bits, hash_bits, default_padding(reserve_bits));
}

Bytes assemble(std::span<const std::uint8_t> message, std::span<const std::uint8_t> hash_output,
               const RepresentativeLayout& layout) {
    if (hash_output.size() * 8 != layout.hash_bits) {
        throw ParameterError("hash output has " + std::to_string(hash_output.size()) + " bytes, layout expects " +
                             std::to_string(layout.hash_bits / 8));
    }
    if (layout.entry == nullptr) throw ParameterError("layout has no classifier entry");

    const ClassifierDigest digest = classify_fast(message, *layout.entry);
    Bytes out;
    out.reserve(layout.total_bytes());
    out.insert(out.end(), layout.padding_bytes.begin(), layout.padding_bytes.end());
    out.insert(out.end(), digest.bytes.begin(), digest.bytes.end());
    out.insert(out.end(), hash_output.begin(), hash_output.end());
    return out;
}

}  // namespace badderlocks
