#include "prahm/csv.hpp"

#include <charconv>
#include <fstream>

#include "prahm/error.hpp"

namespace prahm {

std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string csv_table(const std::string& header,
                      const std::vector<std::vector<double>>& rows) {
  std::string out = header;
  out.push_back('\n');
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out.push_back(',');
      out += fmt(row[i]);
    }
    out.push_back('\n');
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  if (path.empty()) throw Error(Errc::bad_config, "output path must not be empty");
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(Errc::io_error, "cannot open " + path + " for writing");
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f) throw Error(Errc::io_error, "short write to " + path);
}

}  // namespace prahm
