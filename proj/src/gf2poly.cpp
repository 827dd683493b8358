#include "badderlocks/gf2poly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <utility>

#include "badderlocks/error.hpp"
#include "word_ops.hpp"

namespace badderlocks {

BitPolynomial::BitPolynomial(std::uint64_t packed) {
    if (packed != 0) words_.push_back(packed);
}

BitPolynomial BitPolynomial::from_words(std::vector<std::uint64_t> words) {
    BitPolynomial p;
    p.words_ = std::move(words);
    p.trim();
    return p;
}

BitPolynomial BitPolynomial::monomial(std::size_t exponent) {
    BitPolynomial p;
    p.words_.assign(exponent / 64 + 1, 0);
    p.words_.back() = std::uint64_t{1} << (exponent % 64);
    return p;
}

std::optional<std::size_t> BitPolynomial::degree() const noexcept {
    if (words_.empty()) return std::nullopt;
    return (words_.size() - 1) * 64 + (63 - std::countl_zero(words_.back()));
}

bool BitPolynomial::coefficient(std::size_t exponent) const noexcept {
    const std::size_t w = exponent / 64;
    return w < words_.size() && ((words_[w] >> (exponent % 64)) & 1) != 0;
}

std::size_t BitPolynomial::weight() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
}

BitPolynomial& BitPolynomial::operator^=(const BitPolynomial& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
    trim();
    return *this;
}

void BitPolynomial::trim() noexcept {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

// ---------------------------------------------------------------------------
// Hex text

namespace {

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }

}  // namespace

BitPolynomial parse_hex(std::string_view text) {
    std::vector<int> digits;
    digits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (is_space(text[i])) continue;
        const int v = hex_value(text[i]);
        if (v < 0) {
            throw ParseError("invalid hex character '" + std::string(1, text[i]) + "' at offset " +
                                 std::to_string(i),
                             i);
        }
        digits.push_back(v);
    }
    if (digits.empty()) throw ParseError("hex text contains no digits", text.size());

    std::vector<std::uint64_t> words((digits.size() + 15) / 16, 0);
    for (std::size_t k = 0; k < digits.size(); ++k) {
        // k counts digits from the least significant end
        const auto v = static_cast<std::uint64_t>(digits[digits.size() - 1 - k]);
        words[k / 16] |= v << (4 * (k % 16));
    }
    return BitPolynomial::from_words(std::move(words));
}

std::string render_hex(const BitPolynomial& p, HexFormat fmt) {
    static constexpr char kDigits[] = "0123456789ABCDEF";
    const auto deg = p.degree();
    std::size_t ndigits = deg ? *deg / 4 + 1 : 1;
    ndigits = std::max(ndigits, fmt.min_digits);

    const auto words = p.words();
    std::string out;
    out.reserve(ndigits + ndigits / 8);
    for (std::size_t i = ndigits; i-- > 0;) {
        const std::size_t w = i / 16;
        const unsigned v = w < words.size() ? (words[w] >> (4 * (i % 16))) & 0xF : 0;
        out.push_back(kDigits[v]);
        if (fmt.grouped && i != 0 && i % 8 == 0) out.push_back(' ');
    }
    return out;
}

// ---------------------------------------------------------------------------
// Arithmetic

BitPolynomial multiply(const BitPolynomial& a, const BitPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto aw = a.words();
    const auto bw = b.words();
    std::vector<std::uint64_t> out(aw.size() + bw.size(), 0);
    for (std::size_t i = 0; i < aw.size(); ++i) {
        if (aw[i] == 0) continue;
        for (std::size_t j = 0; j < bw.size(); ++j) {
            const auto [lo, hi] = detail::clmul64(aw[i], bw[j]);
            out[i + j] ^= lo;
            out[i + j + 1] ^= hi;
        }
    }
    return BitPolynomial::from_words(std::move(out));
}

BitPolynomial square(const BitPolynomial& a) {
    const auto aw = a.words();
    std::vector<std::uint64_t> out(2 * aw.size(), 0);
    for (std::size_t i = 0; i < aw.size(); ++i) {
        out[2 * i] = detail::spread32(static_cast<std::uint32_t>(aw[i]));
        out[2 * i + 1] = detail::spread32(static_cast<std::uint32_t>(aw[i] >> 32));
    }
    return BitPolynomial::from_words(std::move(out));
}

BitPolynomial shift_left(const BitPolynomial& p, std::size_t bits) {
    if (p.is_zero()) return {};
    const auto pw = p.words();
    const std::size_t word_shift = bits / 64;
    const unsigned bit_shift = bits % 64;
    std::vector<std::uint64_t> out(pw.size() + word_shift + 1, 0);
    for (std::size_t i = 0; i < pw.size(); ++i) {
        out[i + word_shift] |= pw[i] << bit_shift;
        if (bit_shift != 0) out[i + word_shift + 1] |= pw[i] >> (64 - bit_shift);
    }
    return BitPolynomial::from_words(std::move(out));
}

BitPolynomial remainder(const BitPolynomial& dividend, const BitPolynomial& divisor) {
    if (divisor.is_zero()) throw DomainError("remainder: division by the zero polynomial");
    const detail::Reducer reducer(divisor);
    std::vector<std::uint64_t> work(dividend.words().begin(), dividend.words().end());
    reducer.reduce(work);
    return BitPolynomial::from_words(std::move(work));
}

BitPolynomial gcd(BitPolynomial a, BitPolynomial b) {
    while (!b.is_zero()) {
        BitPolynomial r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BitPolynomial substitute(const BitPolynomial& phi, const BitPolynomial& t) {
    const auto deg = phi.degree();
    if (!deg) return {};
    BitPolynomial acc;
    for (std::size_t k = *deg + 1; k-- > 0;) {
        acc = multiply(acc, t);
        if (phi.coefficient(k)) acc ^= BitPolynomial(1);
    }
    return acc;
}

BitPolynomial compose_tgfsr(const BitPolynomial& phi, std::size_t n, std::size_t m) {
    if (phi.is_zero()) throw ParameterError("compose_tgfsr: phi must be nonzero");
    if (!(0 < m && m < n)) {
        throw ParameterError("compose_tgfsr: need 0 < M < N, got N=" + std::to_string(n) +
                             " M=" + std::to_string(m));
    }
    // Multiplying by the binomial is two shifts, much cheaper than a general product.
    const auto deg = *phi.degree();
    BitPolynomial acc;
    for (std::size_t k = deg + 1; k-- > 0;) {
        acc = shift_left(acc, n) ^ shift_left(acc, m);
        if (phi.coefficient(k)) acc ^= BitPolynomial(1);
    }
    return acc;
}

namespace {

std::vector<std::size_t> prime_factors(std::size_t n) {
    std::vector<std::size_t> primes;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        primes.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) primes.push_back(n);
    return primes;
}

}  // namespace

bool is_irreducible(const BitPolynomial& f) {
    const auto deg = f.degree();
    if (!deg || *deg < 1) throw DomainError("is_irreducible: degree must be at least 1");
    const std::size_t d = *deg;
    const detail::Reducer reducer(f);

    // Checkpoints x^(2^(d/p)) along the single chain of d squarings.
    const auto primes = prime_factors(d);
    std::vector<std::pair<std::size_t, BitPolynomial>> checkpoints;
    for (auto p : primes) checkpoints.emplace_back(d / p, BitPolynomial{});

    const BitPolynomial x_mod_f = remainder(BitPolynomial(2), f);
    BitPolynomial h = x_mod_f;
    for (std::size_t i = 1; i <= d; ++i) {
        h = reducer.reduced(square(h));
        for (auto& [step, value] : checkpoints) {
            if (step == i) value = h;
        }
    }
    if (h != x_mod_f) return false;

    for (const auto& [step, value] : checkpoints) {
        if (gcd(f, value ^ x_mod_f) != BitPolynomial(1)) return false;
    }
    return true;
}

}  // namespace badderlocks
