#ifndef B2P1_ERRORS_HPP_
#define B2P1_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace b2p1 {

// Base class for all library errors. The C API maps subclasses to
// numeric status codes; keep the hierarchy flat.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A field contains NaN/Inf after an operation that promises finiteness.
struct NonFiniteField : Error {
    explicit NonFiniteField(const std::string& msg) : Error(msg) {}
};

// |P(kx,ky)| fell below tol_denom at a mode with a nonzero numerator.
struct SingularSymbol : Error {
    SingularSymbol(int jx, int jy, double pval)
        : Error("singular operator symbol at mode (" + std::to_string(jx) + "," +
                std::to_string(jy) + "), |P| = " + std::to_string(pval)),
          mode_x(jx), mode_y(jy) {}
    int mode_x, mode_y;
};

struct ConfigError : Error {
    ConfigError(const std::string& msg, int line = 0)
        : Error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_number(line) {}
    int line_number;
};

struct MissingKey : ConfigError {
    MissingKey(const std::string& section, const std::string& key, int line = 0)
        : ConfigError("missing key [" + section + "] " + key, line) {}
};

struct UnknownKey : ConfigError {
    UnknownKey(const std::string& section, const std::string& key, int line)
        : ConfigError("unknown key [" + section + "] " + key, line) {}
};

struct TypeError : ConfigError {
    TypeError(const std::string& key, const std::string& value, const std::string& want, int line)
        : ConfigError("key " + key + ": cannot parse '" + value + "' as " + want, line) {}
};

struct PicardDiverged : Error {
    PicardDiverged(int iters, double last_update)
        : Error("Picard iteration failed to contract after " + std::to_string(iters) +
                " iterations, last update " + std::to_string(last_update)),
          iterations(iters), update(last_update) {}
    int iterations;
    double update;
};

// RK4 stage produced NaN/Inf; signals the short-wave instability band.
struct NonFiniteState : Error {
    explicit NonFiniteState(const std::string& msg) : Error(msg) {}
};

struct SlopeTooLarge : Error {
    explicit SlopeTooLarge(const std::string& msg) : Error(msg) {}
};

struct MissingDerivative : Error {
    MissingDerivative(int a, int b, int c)
        : Error("jet cannot supply derivative (" + std::to_string(a) + "," +
                std::to_string(b) + "," + std::to_string(c) + ")") {}
};

struct UnsupportedRegime : Error {
    explicit UnsupportedRegime(const std::string& msg) : Error(msg) {}
};

struct TauNotNegligible : Error {
    explicit TauNotNegligible(const std::string& msg) : Error(msg) {}
};

// Forcing harmonic lies on the dispersion surface.
struct ResonantForcing : Error {
    ResonantForcing(int jx, int jy, double omega)
        : Error("resonant forcing harmonic (" + std::to_string(jx) + "," +
                std::to_string(jy) + ", omega=" + std::to_string(omega) + ")"),
          mode_x(jx), mode_y(jy), frequency(omega) {}
    int mode_x, mode_y;
    double frequency;
};

struct NonHarmonicBathymetry : Error {
    explicit NonHarmonicBathymetry(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

// Snapshot decoding failures.
struct BadMagic : IoError {
    explicit BadMagic(const std::string& msg) : IoError(msg) {}
};
struct TruncatedPayload : IoError {
    explicit TruncatedPayload(const std::string& msg) : IoError(msg) {}
};
struct ChecksumMismatch : IoError {
    explicit ChecksumMismatch(const std::string& msg) : IoError(msg) {}
};

}  // namespace b2p1

#endif  // B2P1_ERRORS_HPP_
