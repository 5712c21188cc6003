#pragma once

#include <filesystem>
#include <string>

namespace qtb {

// 17 significant digits: enough to round-trip any double, stable across
// runs, locale-independent.
std::string format_g17(double x);

// Write-temp-then-rename so readers never observe a partial file.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

}  // namespace qtb
