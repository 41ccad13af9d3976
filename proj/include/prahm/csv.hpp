#pragma once
// CSV export with byte-stable numbers: every value is printed as the
// shortest decimal that round-trips to the same double.
#include <string>
#include <vector>

namespace prahm {

std::string fmt(double v);

std::string csv_table(const std::string& header,
                      const std::vector<std::vector<double>>& rows);

// Writes atomically enough for our purposes; throws an I/O error on failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace prahm
