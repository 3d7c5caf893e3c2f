#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace cslp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Error taxonomy shared by the library and the CLI exit-code mapping.
enum class ErrorKind {
  Io,          // missing/unreadable file
  Parse,       // malformed structured text
  Validation,  // invariant violated in otherwise well-formed data
  Dimension,   // cross-object mismatch (e.g. path referencing unknown station)
  Solver,      // oracle failure
  Usage        // bad arguments / config
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error io_error(std::string m) { return Error(ErrorKind::Io, std::move(m)); }
inline Error parse_error(std::string m) { return Error(ErrorKind::Parse, std::move(m)); }
inline Error validation_error(std::string m) { return Error(ErrorKind::Validation, std::move(m)); }
inline Error dimension_error(std::string m) { return Error(ErrorKind::Dimension, std::move(m)); }
inline Error solver_error(std::string m) { return Error(ErrorKind::Solver, std::move(m)); }
inline Error usage_error(std::string m) { return Error(ErrorKind::Usage, std::move(m)); }

inline bool nearly_equal(double a, double b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

// FNV-1a, used for file digests and cut-pool keys. Not cryptographic.
inline std::uint64_t fnv1a64(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

inline std::string hex64(std::uint64_t v) {
  static const char* d = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = d[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace cslp
