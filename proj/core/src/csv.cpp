#include "quadlab/csv.hpp"

#include <cstdio>

#include "quadlab/error.hpp"
#include "quadlab/io.hpp"

namespace quadlab {

std::string format_csv(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

CsvWriter::CsvWriter(std::filesystem::path path, const std::vector<std::string>& header)
    : path_(std::move(path)), columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) buffer_ += ',';
    buffer_ += header[i];
  }
  buffer_ += '\n';
}

CsvWriter::~CsvWriter() {
  try {
    write();
  } catch (...) {
    // destructor must not throw; an explicit write() reports failures
  }
}

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != columns_)
    throw DimensionMismatch("csv row width " + std::to_string(values.size()) +
                            " != header width " + std::to_string(columns_));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) buffer_ += ',';
    buffer_ += format_csv(values[i]);
  }
  buffer_ += '\n';
  ++rows_;
}

void CsvWriter::row_raw(const std::vector<std::string>& cells) {
  if (cells.size() != columns_)
    throw DimensionMismatch("csv row width " + std::to_string(cells.size()) +
                            " != header width " + std::to_string(columns_));
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) buffer_ += ',';
    buffer_ += cells[i];
  }
  buffer_ += '\n';
  ++rows_;
}

void CsvWriter::write() {
  if (written_) return;
  write_text_atomic(path_, buffer_);
  written_ = true;
}

}  // namespace quadlab
