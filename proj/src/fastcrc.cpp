#include "badderlocks/fastcrc.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

#include "badderlocks/sbox.hpp"

namespace badderlocks {

namespace {

constexpr unsigned kFieldBits = CrcTables::kFieldBits;
constexpr unsigned kFieldsPerWord = CrcTables::kFieldsPerWord;
constexpr std::uint64_t kFieldMask = (1u << kFieldBits) - 1;

// Splits a polynomial of degree < 9 * count into 9-bit fields, lowest first.
std::vector<std::uint16_t> to_fields(const BitPolynomial& p, std::size_t count) {
    std::vector<std::uint16_t> fields(count, 0);
    for (std::size_t k = 0; k < count; ++k) {
        unsigned v = 0;
        for (unsigned b = 0; b < kFieldBits; ++b) {
            if (p.coefficient(kFieldBits * k + b)) v |= 1u << b;
        }
        fields[k] = static_cast<std::uint16_t>(v);
    }
    return fields;
}

}  // namespace

CrcTables::CrcTables(const GeneratorEntry& entry) {
    const auto deg = entry.generator.degree();
    if (!deg || *deg < 2 * kFieldBits) {
        throw std::invalid_argument("CrcTables: generator degree must be at least 18");
    }
    degree_ = *deg;
    fields_ = (degree_ + kFieldBits - 1) / kFieldBits;
    slots_ = kFieldsPerWord * ((fields_ + kFieldsPerWord - 1) / kFieldsPerWord);
    row_words_ = slots_ / kFieldsPerWord + 1;
    output_bytes_ = (degree_ + 7) / 8;
    final_bits_ = static_cast<unsigned>(degree_ % kFieldBits);

    // Rows are linear in the index: build the nine single-bit rows with the
    // reference remainder and combine.
    std::vector<std::vector<std::uint16_t>> basis;
    for (unsigned b = 0; b < kFieldBits; ++b) {
        basis.push_back(to_fields(remainder(BitPolynomial::monomial(degree_ + b), entry.generator), fields_));
    }
    std::vector<std::vector<std::uint16_t>> plain(kRows, std::vector<std::uint16_t>(fields_, 0));
    for (unsigned v = 1; v < kRows; ++v) {
        const auto& lower = plain[v & (v - 1)];
        const auto& bit = basis[std::countr_zero(v)];
        for (std::size_t k = 0; k < fields_; ++k) plain[v][k] = lower[k] ^ bit[k];
    }

    rows_.assign(kFieldsPerWord * kRows * row_words_, 0);
    for (unsigned lane = 0; lane < kFieldsPerWord; ++lane) {
        for (unsigned v = 0; v < kRows; ++v) {
            std::uint64_t* out = &rows_[(static_cast<std::size_t>(lane) * kRows + v) * row_words_];
            for (std::size_t k = 0; k < fields_; ++k) {
                const std::size_t slot = lane + k;
                out[slot / kFieldsPerWord] |= std::uint64_t{plain[v][k]} << (kFieldBits * (slot % kFieldsPerWord));
            }
        }
    }

    if (final_bits_ != 0) {
        const unsigned count = 1u << final_bits_;
        final_rows_.assign(count * output_bytes_, 0);
        for (unsigned v = 1; v < count; ++v) {
            const auto row = polynomial_to_bytes(
                remainder(shift_left(BitPolynomial(v), degree_), entry.generator), output_bytes_);
            std::copy(row.begin(), row.end(), final_rows_.begin() + static_cast<std::ptrdiff_t>(v * output_bytes_));
        }
    }
}

BitPolynomial CrcTables::row_polynomial(unsigned lane, unsigned index) const {
    const auto words = row(lane, index);
    std::vector<std::uint64_t> out((degree_ + 63) / 64 + 1, 0);
    for (std::size_t k = 0; k < fields_; ++k) {
        const std::size_t slot = lane + k;
        const std::uint64_t f = (words[slot / kFieldsPerWord] >> (kFieldBits * (slot % kFieldsPerWord))) & kFieldMask;
        const std::size_t pos = kFieldBits * k;
        out[pos / 64] |= f << (pos % 64);
        if (pos % 64 > 64 - kFieldBits) out[pos / 64 + 1] |= f >> (64 - pos % 64);
    }
    return BitPolynomial::from_words(std::move(out));
}

std::size_t CrcTables::memory_bytes() const noexcept {
    return rows_.size() * sizeof(std::uint64_t) + final_rows_.size();
}

std::shared_ptr<const CrcTables> CrcTables::for_entry(const GeneratorEntry& entry) {
    static std::mutex mutex;
    static std::map<std::vector<std::uint64_t>, std::shared_ptr<const CrcTables>> cache;

    std::vector<std::uint64_t> key(entry.generator.words().begin(), entry.generator.words().end());
    std::lock_guard lock(mutex);
    auto& slot = cache[key];
    if (!slot) slot = std::make_shared<const CrcTables>(entry);
    return slot;
}

std::size_t build_all_tables() {
    std::size_t total = 0;
    for (const auto& e : registry()) total += CrcTables::for_entry(e)->memory_bytes();
    return total;
}

// ---------------------------------------------------------------------------

CrcEngine::CrcEngine(const GeneratorEntry& entry)
    : entry_(&entry), tables_(CrcTables::for_entry(entry)), reg_(tables_->register_words(), 0) {}

void CrcEngine::cycle(unsigned input) {
    const CrcTables& t = *tables_;
    const std::size_t slots = t.slot_count();
    const std::size_t words = t.register_words();
    const unsigned short_bits = t.final_bits();

    auto field_ref = [&](std::size_t slot) -> std::pair<std::uint64_t&, unsigned> {
        return {reg_[slot / kFieldsPerWord], kFieldBits * static_cast<unsigned>(slot % kFieldsPerWord)};
    };

    std::size_t top_slot = start_ + t.field_count() - 1;
    if (top_slot >= slots) top_slot -= slots;
    auto [top_word, top_shift] = field_ref(top_slot);
    unsigned out = static_cast<unsigned>((top_word >> top_shift) & kFieldMask);
    top_word &= ~(kFieldMask << top_shift);

    if (short_bits != 0) {
        // The top field holds only short_bits bits; the rest of the outgoing
        // 9 bits are the high end of the field below it.
        const std::size_t below = top_slot == 0 ? slots - 1 : top_slot - 1;
        auto [word, shift] = field_ref(below);
        const unsigned f = static_cast<unsigned>((word >> shift) & kFieldMask);
        out = (out << (kFieldBits - short_bits)) | (f >> short_bits);
        word ^= std::uint64_t{f >> short_bits << short_bits} << shift;
    }

    start_ = start_ == 0 ? slots - 1 : start_ - 1;
    {
        auto [word, shift] = field_ref(start_);
        word |= std::uint64_t{input} << shift;
    }

    const auto row = t.row(static_cast<unsigned>(start_ % kFieldsPerWord), out);
    const std::size_t base = start_ / kFieldsPerWord;
    const std::size_t first = std::min(row.size(), words - base);
    std::uint64_t* dst = reg_.data() + base;
    for (std::size_t j = 0; j < first; ++j) dst[j] ^= row[j];
    for (std::size_t j = first; j < row.size(); ++j) reg_[j - first] ^= row[j];
}

void CrcEngine::absorb(std::span<const std::uint8_t> chunk) {
    if (finished_) throw std::logic_error("CrcEngine: absorb after finish");
    const CodewordTable& sbox = codeword_table();
    for (auto b : chunk) cycle(sbox[b]);
    consumed_ += chunk.size();
}

BitPolynomial CrcEngine::register_value() const {
    const CrcTables& t = *tables_;
    std::vector<std::uint64_t> out((t.degree() + 63) / 64 + 1, 0);
    for (std::size_t k = 0; k < t.field_count(); ++k) {
        std::size_t slot = start_ + k;
        if (slot >= t.slot_count()) slot -= t.slot_count();
        const std::uint64_t f =
            (reg_[slot / kFieldsPerWord] >> (kFieldBits * (slot % kFieldsPerWord))) & kFieldMask;
        const std::size_t pos = kFieldBits * k;
        out[pos / 64] |= f << (pos % 64);
        if (pos % 64 > 64 - kFieldBits) out[pos / 64 + 1] |= f >> (64 - pos % 64);
    }
    return BitPolynomial::from_words(std::move(out));
}

ClassifierDigest CrcEngine::finish() {
    if (finished_) throw std::logic_error("CrcEngine: finish called twice");
    finished_ = true;
    const CrcTables& t = *tables_;

    for (std::size_t i = consumed_; i < kMinCodewords; ++i) cycle(kFillerCodeword);
    for (std::size_t i = 0; i < t.degree() / kFieldBits; ++i) cycle(0);

    Bytes out = polynomial_to_bytes(register_value(), (t.degree() + 7) / 8);
    const unsigned r = t.final_bits();
    if (r != 0) {
        // Last r zero bits, applied to the big-endian byte string: read the r
        // bits below bit `degree`, shift left by r, drop everything at or above
        // bit `degree`, then XOR the matching row.
        const std::size_t d = t.degree();
        const auto bit = [&](std::size_t pos) {
            return (out[out.size() - 1 - pos / 8] >> (pos % 8)) & 1u;
        };
        unsigned top = 0;
        for (std::size_t pos = d; pos-- > d - r;) top = (top << 1) | bit(pos);

        for (std::size_t i = 0; i < out.size(); ++i) {
            const unsigned next = i + 1 < out.size() ? out[i + 1] : 0u;
            out[i] = static_cast<std::uint8_t>(((unsigned{out[i]} << r) | (next >> (8 - r))) & 0xFF);
        }
        const unsigned pad = static_cast<unsigned>(8 * out.size() - d);
        if (pad != 0) out[0] &= static_cast<std::uint8_t>((1u << (8 - pad)) - 1);

        const auto row = t.final_row(top);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] ^= row[i];
    }
    return {std::move(out), entry_};
}

ClassifierDigest classify_fast(std::span<const std::uint8_t> message, const GeneratorEntry& entry) {
    CrcEngine engine(entry);
    engine.absorb(message);
    return engine.finish();
}

}  // namespace badderlocks
