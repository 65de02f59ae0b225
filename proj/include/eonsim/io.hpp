#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace eonsim {

// Writes to a sibling temp file and renames it over `path`, so readers never
// observe a partially written file. Throws std::runtime_error on I/O failure.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

}  // namespace eonsim
