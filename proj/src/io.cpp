#include "io.hpp"

#include <charconv>
#include <cstring>
#include <sstream>

#include "errors.hpp"

namespace b2p1 {

namespace {

constexpr const char* kMagic = "B2P1SNAP 1";

const uint32_t* crc_table() {
    static uint32_t table[256];
    static bool init = [] {
        for (uint32_t i = 0; i < 256; ++i) {
            uint32_t c = i;
            for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
            table[i] = c;
        }
        return true;
    }();
    (void)init;
    return table;
}

double parse_double(const std::string& key, const std::string& v) {
    double out = 0.0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size())
        throw IoError("snapshot header: bad value for " + key + ": '" + v + "'");
    return out;
}

int parse_int(const std::string& key, const std::string& v) {
    int out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || p != v.data() + v.size())
        throw IoError("snapshot header: bad value for " + key + ": '" + v + "'");
    return out;
}

void append_field(std::string& out, const Field2D& f) {
    static_assert(sizeof(double) == 8);
    const size_t bytes = f.size() * 8;
    const size_t at = out.size();
    out.resize(at + bytes);
    std::memcpy(out.data() + at, f.data(), bytes);  // little-endian host assumed
}

}  // namespace

uint32_t crc32(const void* data, size_t n) {
    const uint8_t* p = static_cast<const uint8_t*>(data);
    const uint32_t* t = crc_table();
    uint32_t c = 0xFFFFFFFFu;
    for (size_t i = 0; i < n; ++i) c = t[(c ^ p[i]) & 0xFF] ^ (c >> 8);
    return c ^ 0xFFFFFFFFu;
}

std::string format_double(double v) {
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw IoError("cannot format double");
    return std::string(buf, p);
}

std::string encode_snapshot(const WaveState& s) {
    const Grid2D& g = s.eta.grid();
    std::string payload;
    payload.reserve(size_t(g.nx) * g.ny * 16);
    append_field(payload, s.eta);
    append_field(payload, s.f);

    char hex[9];
    std::snprintf(hex, sizeof(hex), "%08x", crc32(payload.data(), payload.size()));

    std::ostringstream h;
    h << kMagic << "\n"
      << "nx=" << g.nx << "\n"
      << "ny=" << g.ny << "\n"
      << "Lx=" << format_double(g.Lx) << "\n"
      << "Ly=" << format_double(g.Ly) << "\n"
      << "t=" << format_double(s.t) << "\n"
      << "fields=eta,f\n"
      << "checksum=" << hex << "\n\n";
    return h.str() + payload;
}

WaveState decode_snapshot(const std::string& bytes) {
    size_t pos = 0;
    auto next_line = [&]() -> std::string {
        size_t nl = bytes.find('\n', pos);
        if (nl == std::string::npos) throw TruncatedPayload("snapshot header is incomplete");
        std::string line = bytes.substr(pos, nl - pos);
        pos = nl + 1;
        return line;
    };

    if (next_line() != kMagic) throw BadMagic("not a snapshot: bad magic line");

    int nx = 0, ny = 0;
    double Lx = 0, Ly = 0, t = 0;
    std::string fields, checksum;
    for (std::string line = next_line(); !line.empty(); line = next_line()) {
        size_t eq = line.find('=');
        if (eq == std::string::npos) throw IoError("snapshot header: malformed line '" + line + "'");
        std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        if (key == "nx") nx = parse_int(key, val);
        else if (key == "ny") ny = parse_int(key, val);
        else if (key == "Lx") Lx = parse_double(key, val);
        else if (key == "Ly") Ly = parse_double(key, val);
        else if (key == "t") t = parse_double(key, val);
        else if (key == "fields") fields = val;
        else if (key == "checksum") checksum = val;
        else throw IoError("snapshot header: unknown key '" + key + "'");
    }
    if (fields != "eta,f") throw IoError("snapshot header: unsupported field list '" + fields + "'");
    if (nx <= 0 || ny <= 0) throw IoError("snapshot header: missing grid size");

    Grid2D g(nx, ny, Lx, Ly);
    const size_t n = size_t(nx) * ny, want = 2 * n * 8;
    if (bytes.size() - pos < want)
        throw TruncatedPayload("snapshot payload: expected " + std::to_string(want) +
                               " bytes, got " + std::to_string(bytes.size() - pos));
    if (bytes.size() - pos > want)
        throw IoError("snapshot payload: trailing bytes after fields");

    char hex[9];
    std::snprintf(hex, sizeof(hex), "%08x", crc32(bytes.data() + pos, want));
    if (checksum != hex)
        throw ChecksumMismatch("snapshot checksum " + checksum + " != computed " + hex);

    Field2D eta(g), f(g);
    std::memcpy(eta.data(), bytes.data() + pos, n * 8);
    std::memcpy(f.data(), bytes.data() + pos + n * 8, n * 8);
    return WaveState(std::move(eta), std::move(f), t);
}

void write_snapshot(const std::string& path, const WaveState& s) {
    write_text_file(path, encode_snapshot(s));
}

WaveState read_snapshot(const std::string& path) { return decode_snapshot(read_text_file(path)); }

CsvWriter::CsvWriter(const std::string& path) : out_(path, std::ios::binary) {
    if (!out_) throw IoError("cannot open '" + path + "' for writing");
}

void CsvWriter::header(const std::vector<std::string>& cols) {
    for (size_t i = 0; i < cols.size(); ++i) out_ << (i ? "," : "") << cols[i];
    out_ << "\n";
}

void CsvWriter::row(const std::vector<double>& vals) {
    for (size_t i = 0; i < vals.size(); ++i) out_ << (i ? "," : "") << format_double(vals[i]);
    out_ << "\n";
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
    out_ << "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(text.data(), std::streamsize(text.size()));
    if (!out) throw IoError("write failed for '" + path + "'");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace b2p1
