#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace dsmn::io {

// FNV-1a 64-bit content hash. Stable across platforms and runs; used for
// dataset/checkpoint fingerprints in manifests, not for security.
std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::uint64_t fnv1a64(const std::string& s);
std::uint64_t fnv1a64_file(const std::filesystem::path& path);
std::string hash_hex(std::uint64_t h);

// Writes to a temporary file in the same directory, then renames. Readers
// never observe a half-written artifact.
void atomic_write(const std::filesystem::path& path, const std::string& bytes);

std::string read_file(const std::filesystem::path& path);

// Binary PGM (P5, maxval 255). `values` are row-major in [0,1], row 0 at the
// top of the image.
void write_pgm(const std::filesystem::path& path, const std::vector<double>& values,
               int height, int width);

}  // namespace dsmn::io
