#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "badderlocks/classifier.hpp"
#include "badderlocks/gf2poly.hpp"
#include "badderlocks/params.hpp"

namespace badderlocks {

/// Precomputed reduction rows for one generator.
///
/// The engine keeps its shift register as 9-bit fields packed seven to a
/// 64-bit word, and shifts by moving a circular start index instead of moving
/// bits. A row therefore has to be XORed in at whatever field offset the
/// start currently has inside its word, so each of the 512 rows is stored
/// pre-rotated for all seven offsets ("lanes").
///
/// Row v is v * x^degree mod generator, the correction for the 9 bits that
/// leave the register in one cycle. When degree is not a multiple of 9 the
/// last cycle moves only degree % 9 bits; its rows are kept as big-endian
/// output bytes because that cycle is applied to the digest byte string.
class CrcTables {
public:
    static constexpr unsigned kFieldBits = 9;
    static constexpr unsigned kFieldsPerWord = 7;
    static constexpr unsigned kRows = 512;

    explicit CrcTables(const GeneratorEntry& entry);

    /// Shared tables for a generator, built on first request and cached.
    static std::shared_ptr<const CrcTables> for_entry(const GeneratorEntry& entry);

    std::size_t degree() const noexcept { return degree_; }
    std::size_t field_count() const noexcept { return fields_; }
    std::size_t slot_count() const noexcept { return slots_; }
    std::size_t register_words() const noexcept { return slots_ / kFieldsPerWord; }
    std::size_t row_words() const noexcept { return row_words_; }
    /// degree % 9; zero means no short final cycle.
    unsigned final_bits() const noexcept { return final_bits_; }

    std::span<const std::uint64_t> row(unsigned lane, unsigned index) const noexcept {
        return {&rows_[(static_cast<std::size_t>(lane) * kRows + index) * row_words_], row_words_};
    }
    std::span<const std::uint8_t> final_row(unsigned index) const noexcept {
        return {&final_rows_[index * output_bytes_], output_bytes_};
    }

    /// Row `index` of `lane` decoded back into a polynomial.
    BitPolynomial row_polynomial(unsigned lane, unsigned index) const;

    std::size_t memory_bytes() const noexcept;

private:
    std::size_t degree_;
    std::size_t fields_;
    std::size_t slots_;
    std::size_t row_words_;
    std::size_t output_bytes_;
    unsigned final_bits_;
    std::vector<std::uint64_t> rows_;
    std::vector<std::uint8_t> final_rows_;
};

/// Builds the tables of every registry entry; returns their total size in bytes.
std::size_t build_all_tables();

/// Streaming table-driven classifier, bit-identical to classify().
///
/// The register starts at zero and each message byte drives one cycle: the 9
/// bits at the output end select a row, the S-box codeword enters at the input
/// end, and the row is XORed in. finish() appends filler codewords for short
/// messages and then clocks in degree zero bits. An engine is single-use.
class CrcEngine {
public:
    explicit CrcEngine(const GeneratorEntry& entry);

    void absorb(std::span<const std::uint8_t> chunk);
    ClassifierDigest finish();

    std::size_t consumed() const noexcept { return consumed_; }
    bool finished() const noexcept { return finished_; }
    const GeneratorEntry& entry() const noexcept { return *entry_; }
    const std::shared_ptr<const CrcTables>& tables() const noexcept { return tables_; }

    /// Current register contents as a polynomial (degree < entry degree).
    BitPolynomial register_value() const;

private:
    void cycle(unsigned input);

    const GeneratorEntry* entry_;
    std::shared_ptr<const CrcTables> tables_;
    std::vector<std::uint64_t> reg_;
    std::size_t start_ = 0;
    std::size_t consumed_ = 0;
    bool finished_ = false;
};

/// One-shot convenience over CrcEngine.
ClassifierDigest classify_fast(std::span<const std::uint8_t> message, const GeneratorEntry& entry);

}  // namespace badderlocks
