#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "badderlocks/classifier.hpp"

namespace badderlocks {

// Published test-vector tables, stored one vector per line as
//   <bits> TAB <input-spec> TAB <hex>
// where input-spec is "hex:<digits>" or "text:<literal bytes>". For the
// expansion suite <bits> is the width of the message polynomial; for the
// classifier suites it is the aligned size of the generator.

enum class VectorSuite { expansion, fox, small, mixed };

/// "c1", "c2-fox", "c2-small", "c2-mixed".
std::optional<VectorSuite> parse_suite(std::string_view name);
std::string_view suite_name(VectorSuite suite);

struct TestVector {
    std::size_t bits = 0;
    std::string input_spec;
    Bytes message;
    std::string expected_hex;
};

/// Throws ParseError on a malformed line or input spec.
Bytes decode_input_spec(std::string_view spec);
std::vector<TestVector> parse_vectors(std::string_view text);
std::vector<TestVector> embedded_vectors(VectorSuite suite);

enum class Engine { reference, fast };

/// The value this library computes for a vector, formatted like the tables
/// (grouped hex).
std::string compute_vector_hex(VectorSuite suite, const TestVector& vector, Engine engine = Engine::reference);

/// Hex with whitespace removed and letters uppercased.
std::string normalize_hex(std::string_view hex);

std::string format_vector_line(std::size_t bits, std::string_view input_spec, std::string_view hex);

}  // namespace badderlocks
