#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "badderlocks/gf2poly.hpp"

namespace badderlocks {

/// One generator polynomial of the registry. The generator is
/// phi(x^n + x^m) with deg phi == w, so its degree is w * n; the CRC output is
/// that degree rounded up to whole bytes.
struct GeneratorEntry {
    int index = 0;
    std::size_t target_bits = 0;
    std::size_t aligned_bits = 0;
    std::size_t degree = 0;
    std::size_t w = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    BitPolynomial phi;
    BitPolynomial generator;
};

inline constexpr int kRegistrySize = 30;

/// Design target size (2i + floor((i-2)(i-3)/10)) * 32 for registry index
/// 1..30. Throws ParameterError outside that range.
std::size_t size_for_index(int index);

/// Raised when registry text is malformed or an entry fails verification.
class RegistryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses registry text: one record per line,
///   index target aligned effective w n m phi-hex | generator-hex
/// with '#' comment lines. Only syntax is checked here.
std::vector<GeneratorEntry> parse_registry(std::string_view text);

/// The 30 embedded entries in ascending size, each verified at quick level on
/// first access.
const std::vector<GeneratorEntry>& registry();

enum class VerifyLevel { quick, full };

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    int index = 0;
    std::size_t aligned_bits = 0;
    std::vector<CheckResult> checks;

    bool passed() const noexcept;
};

/// Quick: size formula, degree and alignment laws, the composition
/// phi(x^n + x^m) against the listed generator, and irreducibility of phi.
/// Full adds irreducibility of the generator and a Berlekamp-Massey recovery
/// of the generator from 2 * degree bits of LFSR output.
///
/// Primitivity is not checked; it needs factorizations of 2^d - 1.
VerificationReport verify_entry(const GeneratorEntry& entry, VerifyLevel level);

/// Entry with the largest aligned size that does not exceed max_bits.
/// Throws ParameterError ("no generator fits") below the smallest size.
const GeneratorEntry& select_generator(std::size_t max_bits);

/// Entry whose aligned size is exactly `aligned_bits`; throws ParameterError
/// listing the valid sizes otherwise.
const GeneratorEntry& entry_by_aligned_bits(std::size_t aligned_bits);

/// "64, 128, 192, ..." for error messages.
std::string valid_aligned_sizes();

}  // namespace badderlocks
