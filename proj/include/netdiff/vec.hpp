#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "netdiff/error.hpp"

namespace netdiff {

/// Dense non-negative weight vector indexed by node. Plain std::vector with
/// a few helpers; invariants are checked at module boundaries, not per-op.
using WeightVector = std::vector<double>;

inline double l1_norm(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += std::abs(v);
    return s;
}

inline double l1_diff(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    return s;
}

inline double linf_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline void check_weight_vector(std::span<const double> x, const char* what) {
    for (double v : x) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw DataError(std::string(what) + ": entries must be finite and non-negative");
    }
}

} // namespace netdiff
