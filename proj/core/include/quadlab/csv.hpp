#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>
#include <vector>

namespace quadlab {

/// Formats a double with 9 significant digits (%.9g); the project-wide CSV
/// number format.
std::string format_csv(double v);

/// Buffered CSV writer. Rows accumulate in memory and the whole file is
/// committed atomically on write() (or destruction), so an aborted run never
/// leaves a partial file behind.
class CsvWriter {
 public:
  CsvWriter(std::filesystem::path path, const std::vector<std::string>& header);
  ~CsvWriter();

  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  void row(const std::vector<double>& values);
  /// Mixed row for files with non-numeric columns.
  void row_raw(const std::vector<std::string>& cells);

  std::size_t rows() const { return rows_; }

  /// Commits the file. Idempotent.
  void write();

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::string buffer_;
  std::size_t columns_;
  std::size_t rows_ = 0;
  bool written_ = false;
};

}  // namespace quadlab
