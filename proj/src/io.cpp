#include "qft/io.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

namespace qft::io {

namespace {

void write_u32_le(std::ostream& os, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

void write_f64_le(std::ostream& os, double d) {
    const auto v = std::bit_cast<std::uint64_t>(d);
    unsigned char b[8];
    for (int k = 0; k < 8; ++k) b[k] = static_cast<unsigned char>((v >> (8 * k)) & 0xff);
    os.write(reinterpret_cast<const char*>(b), 8);
}

std::uint32_t read_u32_le(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    if (!is) throw std::runtime_error("truncated binary signal file");
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

double read_f64_le(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    if (!is) throw std::runtime_error("truncated binary signal file");
    std::uint64_t v = 0;
    for (int k = 7; k >= 0; --k) v = (v << 8) | b[k];
    return std::bit_cast<double>(v);
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

constexpr char kMagic[5] = {'Q', 'S', 'I', 'G', '1'};

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t byte_offset)
    : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
      offset_(byte_offset) {}

void save_csv(const QSignal& f, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << "x1,x2,q0,q1,q2,q3\n";
    const GridSpec& g = f.grid();
    for (int m1 = 0; m1 < g.n1; ++m1) {
        for (int m2 = 0; m2 < g.n2; ++m2) {
            const Quaternion& q = f.at(m1, m2);
            os << format_double(g.x1(m1)) << ',' << format_double(g.x2(m2)) << ','
               << format_double(q.q0) << ',' << format_double(q.q1) << ','
               << format_double(q.q2) << ',' << format_double(q.q3) << '\n';
        }
    }
    if (!os) throw std::runtime_error("write failed for " + path);
}

QSignal load_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error(path + ": empty CSV");
    if (line.rfind("x1,x2,q0,q1,q2,q3", 0) != 0) {
        throw std::runtime_error(path + ": expected header x1,x2,q0,q1,q2,q3");
    }
    std::vector<double> x1s, x2s;
    std::vector<Quaternion> qs;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream row(line);
        double vals[6];
        std::string cell;
        for (int k = 0; k < 6; ++k) {
            if (!std::getline(row, cell, ',')) {
                throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                         ": expected 6 comma-separated values");
            }
            try {
                vals[k] = std::stod(cell);
            } catch (const std::exception&) {
                throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad number '" +
                                         cell + "'");
            }
        }
        x1s.push_back(vals[0]);
        x2s.push_back(vals[1]);
        qs.push_back({vals[2], vals[3], vals[4], vals[5]});
    }
    if (qs.size() < 4) throw std::runtime_error(path + ": too few samples");

    // Row-major: x2 varies fastest. The first block with constant x1 fixes n2.
    std::size_t n2 = 1;
    while (n2 < x1s.size() && x1s[n2] == x1s[0]) ++n2;
    if (n2 < 2 || qs.size() % n2 != 0) {
        throw std::runtime_error(path + ": rows do not form a row-major rectangular grid");
    }
    const std::size_t n1 = qs.size() / n2;
    if (n1 < 2) throw std::runtime_error(path + ": need at least 2 rows per axis");
    const double d1 = x1s[n2] - x1s[0];
    const double d2 = x2s[1] - x2s[0];
    GridSpec grid(static_cast<int>(n1), static_cast<int>(n2), d1, d2);
    for (std::size_t m1 = 0; m1 < n1; ++m1) {
        for (std::size_t m2 = 0; m2 < n2; ++m2) {
            const std::size_t at = m1 * n2 + m2;
            const double ex1 = grid.x1(static_cast<int>(m1));
            const double ex2 = grid.x2(static_cast<int>(m2));
            const double tol1 = 1e-9 * std::max(1.0, std::abs(ex1));
            const double tol2 = 1e-9 * std::max(1.0, std::abs(ex2));
            if (std::abs(x1s[at] - ex1) > tol1 || std::abs(x2s[at] - ex2) > tol2) {
                throw std::runtime_error(path + ": coordinates are not a uniform centered grid (row " +
                                         std::to_string(at + 2) + ")");
            }
        }
    }
    return {grid, std::move(qs)};
}

void save_binary(const QSignal& f, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os.write(kMagic, sizeof(kMagic));
    const GridSpec& g = f.grid();
    write_u32_le(os, static_cast<std::uint32_t>(g.n1));
    write_u32_le(os, static_cast<std::uint32_t>(g.n2));
    write_f64_le(os, g.d1);
    write_f64_le(os, g.d2);
    for (const Quaternion& q : f.samples()) {
        write_f64_le(os, q.q0);
        write_f64_le(os, q.q1);
        write_f64_le(os, q.q2);
        write_f64_le(os, q.q3);
    }
    if (!os) throw std::runtime_error("write failed for " + path);
}

QSignal load_binary(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path);
    char magic[5];
    is.read(magic, 5);
    if (!is || std::memcmp(magic, kMagic, 5) != 0) {
        throw std::runtime_error(path + ": missing QSIG1 magic");
    }
    const auto n1 = read_u32_le(is);
    const auto n2 = read_u32_le(is);
    const double d1 = read_f64_le(is);
    const double d2 = read_f64_le(is);
    GridSpec grid(static_cast<int>(n1), static_cast<int>(n2), d1, d2);
    std::vector<Quaternion> samples(static_cast<std::size_t>(grid.size()));
    for (Quaternion& q : samples) {
        q.q0 = read_f64_le(is);
        q.q1 = read_f64_le(is);
        q.q2 = read_f64_le(is);
        q.q3 = read_f64_le(is);
    }
    return {grid, std::move(samples)};
}

void save_signal(const QSignal& f, const std::string& path) {
    if (ends_with(path, ".csv")) {
        save_csv(f, path);
    } else {
        save_binary(f, path);
    }
}

QSignal load_signal(const std::string& path) {
    {
        std::ifstream is(path, std::ios::binary);
        if (!is) throw std::runtime_error("cannot open " + path);
        char head[5] = {};
        is.read(head, 5);
        if (is.gcount() >= 5 && std::memcmp(head, kMagic, 5) == 0) return load_binary(path);
        if (is.gcount() >= 2 && head[0] == 'P' && head[1] == '6') {
            return load_ppm_as_pure_quaternion(path);
        }
    }
    if (ends_with(path, ".ppm")) return load_ppm_as_pure_quaternion(path);
    return load_csv(path);
}

void save_spectrum(const QSpectrum& S, const std::string& path) {
    save_signal(QSignal(S.grid(), S.samples()), path);
}

QSpectrum load_spectrum(const std::string& path) {
    QSignal container = load_signal(path);
    return {container.grid(), container.samples()};
}

void save_magnitude_csv(const QSpectrum& S, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << "x1,x2,mag\n";
    const GridSpec& g = S.grid();
    for (int u1 = 0; u1 < g.n1; ++u1) {
        for (int u2 = 0; u2 < g.n2; ++u2) {
            os << format_double(g.x1(u1)) << ',' << format_double(g.x2(u2)) << ','
               << format_double(modulus(S.at(u1, u2))) << '\n';
        }
    }
    if (!os) throw std::runtime_error("write failed for " + path);
}

QSignal load_ppm_as_pure_quaternion(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::string data((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());

    std::size_t pos = 0;
    const auto fail = [&](const std::string& what) -> ParseError {
        return ParseError(path + ": " + what, pos);
    };
    const auto skip_separators = [&] {
        // whitespace and '#' comments to end of line
        while (pos < data.size()) {
            const char c = data[pos];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else if (c == '#') {
                while (pos < data.size() && data[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    };
    const auto read_int = [&]() -> long {
        skip_separators();
        const std::size_t start = pos;
        while (pos < data.size() && std::isdigit(static_cast<unsigned char>(data[pos]))) ++pos;
        if (pos == start) throw fail("expected an integer in PPM header");
        long value = 0;
        auto [ptr, ec] = std::from_chars(data.data() + start, data.data() + pos, value);
        if (ec != std::errc()) throw fail("bad integer in PPM header");
        return value;
    };

    if (data.size() < 2 || data[0] != 'P' || data[1] != '6') {
        throw fail("not a binary PPM (expected magic P6)");
    }
    pos = 2;
    const long width = read_int();
    const long height = read_int();
    const long maxval = read_int();
    if (width < 1 || height < 1) throw fail("non-positive PPM dimensions");
    if (maxval < 1 || maxval > 255) throw fail("only 8-bit PPM (maxval <= 255) supported");
    if (pos >= data.size() || !std::isspace(static_cast<unsigned char>(data[pos]))) {
        throw fail("expected single whitespace before PPM payload");
    }
    ++pos;

    const std::size_t need = static_cast<std::size_t>(width) * height * 3;
    if (data.size() - pos < need) {
        pos = data.size();
        throw fail("truncated PPM payload, need " + std::to_string(need) + " bytes");
    }

    // Rows map to axis 1, columns to axis 2; spacing defaults to 1.
    GridSpec grid(static_cast<int>(height), static_cast<int>(width), 1.0, 1.0);
    std::vector<Quaternion> samples(static_cast<std::size_t>(grid.size()));
    const double scale = 1.0 / static_cast<double>(maxval);
    for (std::size_t px = 0; px < static_cast<std::size_t>(width) * height; ++px) {
        const auto r = static_cast<unsigned char>(data[pos + 3 * px]);
        const auto g = static_cast<unsigned char>(data[pos + 3 * px + 1]);
        const auto b = static_cast<unsigned char>(data[pos + 3 * px + 2]);
        samples[px] = {0.0, r * scale, g * scale, b * scale};
    }
    return {grid, std::move(samples)};
}

}  // namespace qft::io
