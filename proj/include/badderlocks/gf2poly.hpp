#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace badderlocks {

/// Dense polynomial over GF(2). The coefficient of x^k lives at bit k of the
/// packed word array (word k/64, bit k%64), the natural packed-integer layout.
///
/// The word array never carries trailing zero words, so equality is plain
/// word comparison and the zero polynomial has an empty array.
class BitPolynomial {
public:
    BitPolynomial() = default;

    /// The polynomial whose packed representation is the given integer.
    explicit BitPolynomial(std::uint64_t packed);

    static BitPolynomial from_words(std::vector<std::uint64_t> words);
    static BitPolynomial monomial(std::size_t exponent);

    bool is_zero() const noexcept { return words_.empty(); }

    /// Highest exponent with a nonzero coefficient; nullopt for the zero
    /// polynomial.
    std::optional<std::size_t> degree() const noexcept;

    bool coefficient(std::size_t exponent) const noexcept;
    std::size_t weight() const noexcept;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    BitPolynomial& operator^=(const BitPolynomial& other);
    friend BitPolynomial operator^(BitPolynomial a, const BitPolynomial& b) { return a ^= b; }
    friend bool operator==(const BitPolynomial&, const BitPolynomial&) = default;

private:
    void trim() noexcept;

    std::vector<std::uint64_t> words_;
};

struct HexFormat {
    /// Insert a space every 8 digits, counted from the right.
    bool grouped = false;
    /// Left-pad with zeros up to this many digits.
    std::size_t min_digits = 0;
};

/// Big-endian hex: the last digit carries x^3..x^0. Whitespace is ignored.
/// Throws ParseError naming the offset of the first non-hex character.
BitPolynomial parse_hex(std::string_view text);

/// Uppercase hex, minimal digit count unless fmt.min_digits asks for more.
std::string render_hex(const BitPolynomial& p, HexFormat fmt = {});

BitPolynomial multiply(const BitPolynomial& a, const BitPolynomial& b);
BitPolynomial square(const BitPolynomial& a);

/// Schoolbook shift-and-XOR reduction. Throws DomainError for a zero divisor.
BitPolynomial remainder(const BitPolynomial& dividend, const BitPolynomial& divisor);

BitPolynomial shift_left(const BitPolynomial& p, std::size_t bits);
BitPolynomial gcd(BitPolynomial a, BitPolynomial b);

/// phi(t) with t := x^n + x^m substituted. Requires 0 < m < n and phi != 0;
/// throws ParameterError otherwise.
BitPolynomial compose_tgfsr(const BitPolynomial& phi, std::size_t n, std::size_t m);

/// phi(t(x)) for an arbitrary inner polynomial, by Horner's rule.
BitPolynomial substitute(const BitPolynomial& phi, const BitPolynomial& t);

/// Rabin's test: x^(2^d) == x mod f, and gcd(x^(2^(d/p)) - x, f) == 1 for
/// every prime p dividing d = deg f. Throws DomainError when deg f < 1.
bool is_irreducible(const BitPolynomial& f);

/// One bit per element, each 0 or 1.
using BitSequence = std::vector<std::uint8_t>;

/// Bits of a "0101..." string, first character first.
BitSequence bits_from_string(std::string_view text);

/// Fibonacci LFSR with characteristic polynomial f: the first deg f outputs are
/// the seed, and thereafter s[j + d] = sum over k < d of f_k * s[j + k].
/// Throws ParameterError for a zero seed, a seed of the wrong length, or
/// deg f < 1.
BitSequence lfsr_stream(const BitPolynomial& f, std::span<const std::uint8_t> seed,
                        std::size_t count);

struct LinearComplexity {
    std::size_t length = 0;
    /// Characteristic polynomial x^L * C(1/x) of the shortest LFSR, where C is
    /// the connection polynomial; for output of lfsr_stream(f, ...) with enough
    /// bits this is f itself. The constant 1 when length == 0.
    BitPolynomial polynomial;
};

LinearComplexity berlekamp_massey(std::span<const std::uint8_t> bits);

}  // namespace badderlocks
