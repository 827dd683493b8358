#pragma once

#include <string_view>

// Text of the files under data/, compiled into the library.
namespace badderlocks::data {

std::string_view registry_txt();
std::string_view vectors_c1_tsv();
std::string_view vectors_c2_fox_tsv();
std::string_view vectors_c2_small_tsv();
std::string_view vectors_c2_mixed_tsv();

}  // namespace badderlocks::data
