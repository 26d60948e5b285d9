#pragma once

#include <filesystem>
#include <string>

namespace quadlab {

/// Writes `text` to `path` via a temp file in the same directory followed by
/// an atomic rename. Either the complete file appears or nothing does.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

std::string read_text(const std::filesystem::path& path);

}  // namespace quadlab
