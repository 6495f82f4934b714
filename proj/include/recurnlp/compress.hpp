#ifndef RECURNLP_COMPRESS_HPP
#define RECURNLP_COMPRESS_HPP

#include <cstddef>
#include <string_view>

namespace recurnlp {

// Identifies the fixed compressor setting in reports.
inline constexpr const char* kCompressorId = "deflate-raw/level9";

// Compressed size of raw under raw DEFLATE (zlib, level 9,
// windowBits -15, memLevel 8, default strategy). The setting is fixed
// so ratios are comparable across runs and platforms.
std::size_t deflate_size(std::string_view raw);

// 1 - compressed_size / raw_size. Throws UndefinedInputError for empty
// input.
double compressibility_ratio(std::string_view raw);

} // namespace recurnlp

#endif
