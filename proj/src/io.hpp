#ifndef B2P1_IO_HPP_
#define B2P1_IO_HPP_

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "dynamics.hpp"
#include "grid.hpp"

namespace b2p1 {

uint32_t crc32(const void* data, size_t n);

// Shortest decimal string that round-trips back to the same double.
std::string format_double(double v);

// Snapshot container: ASCII header (magic "B2P1SNAP 1", grid, time, field
// list, payload checksum), blank line, then raw little-endian float64 rows,
// eta first, x fastest.
std::string encode_snapshot(const WaveState& s);
WaveState decode_snapshot(const std::string& bytes);
void write_snapshot(const std::string& path, const WaveState& s);
WaveState read_snapshot(const std::string& path);

// Comma-separated, LF line endings, shortest round-trip numerics.
class CsvWriter {
  public:
    explicit CsvWriter(const std::string& path);
    void header(const std::vector<std::string>& cols);
    void row(const std::vector<double>& vals);
    void row(const std::vector<std::string>& cells);

  private:
    std::ofstream out_;
};

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace b2p1

#endif  // B2P1_IO_HPP_
