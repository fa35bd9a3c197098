#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace fmdil {

using cplx = std::complex<double>;

constexpr double kDefaultTol = 1e-10;

// 64-bit FNV-1a. Used to fingerprint configs inside reports so a report can
// be traced back to the exact run parameters.
inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// Fixed 17-significant-digit rendering; round-trips doubles exactly and keeps
// CSV/JSON output byte-stable across runs.
std::string fmt17(double v);

}  // namespace fmdil
