#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "qft/signal.hpp"

namespace qft::io {

/// Thrown on malformed PPM input; offset is the byte position of the defect.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t byte_offset);
    std::size_t byte_offset() const { return offset_; }

private:
    std::size_t offset_;
};

// CSV: header "x1,x2,q0,q1,q2,q3", one row per sample, row-major. Coordinates
// must form a uniform centered grid; load re-derives the GridSpec from them.
void save_csv(const QSignal& f, const std::string& path);
QSignal load_csv(const std::string& path);

// Raw binary: magic "QSIG1", n1, n2 (little-endian u32), d1, d2 (f64), then
// n1*n2*4 f64 samples row-major.
void save_binary(const QSignal& f, const std::string& path);
QSignal load_binary(const std::string& path);

/// Picks CSV or binary by extension (".csv" vs anything else).
void save_signal(const QSignal& f, const std::string& path);
/// Picks the loader by content (binary magic) then extension; .ppm routes to
/// load_ppm_as_pure_quaternion.
QSignal load_signal(const std::string& path);

// Spectra reuse the signal containers with the frequency grid; loading yields
// samples only (component spectra are not serialized).
void save_spectrum(const QSpectrum& S, const std::string& path);
QSpectrum load_spectrum(const std::string& path);

/// CSV magnitude map "x1,x2,mag" with mag = |F(y)|_Q per point, for plotting.
void save_magnitude_csv(const QSpectrum& S, const std::string& path);

/// 8-bit binary PPM (P6) to a pure-quaternion signal: pixel (r, g, b) maps to
/// i r' + j g' + k b' with components scaled to [0, 1]; grid spacing 1.
/// Throws ParseError with the byte offset on malformed header or short payload.
QSignal load_ppm_as_pure_quaternion(const std::string& path);

}  // namespace qft::io
