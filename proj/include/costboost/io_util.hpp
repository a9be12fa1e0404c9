#ifndef COSTBOOST_IO_UTIL_HPP
#define COSTBOOST_IO_UTIL_HPP

#include <cstdint>
#include <string>

namespace costboost {

// Writes to <path>.tmp and renames onto path, so failures never leave a
// partial file behind.
void write_text_atomic(const std::string& path, const std::string& text);

std::string read_text(const std::string& path);

// FNV-1a 64-bit content hash, used for dataset fingerprints.
std::uint64_t fnv1a64(const std::string& bytes);

// Shortest-exact formatting used for every numeric artifact (17 significant
// digits round-trips a double bit-exactly).
std::string format_g17(double v);

}  // namespace costboost

#endif  // COSTBOOST_IO_UTIL_HPP
