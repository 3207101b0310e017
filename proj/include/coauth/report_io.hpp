#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace coauth {

/// Shortest round-trip decimal representation; identical bytes for
/// identical doubles.
std::string format_double(double value);

/// RFC 4180 quoting, applied only when the field needs it.
std::string csv_field(std::string_view field);

/// Writes `contents` to `path`, throwing coauth::Error on I/O failure.
void write_file(const std::filesystem::path& path, std::string_view contents);

std::string read_file(const std::filesystem::path& path);

}  // namespace coauth
