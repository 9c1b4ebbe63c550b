#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace cosine {

using Scalar = double;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Row-major sparse storage, i.e. compressed sparse row.
using SparseMatrix = Eigen::SparseMatrix<Scalar, Eigen::RowMajor>;

/// The two contrasting ideas a seed node can be planted with.
enum class Opinion : std::uint8_t { O1, O2 };

inline const char* to_string(Opinion o) { return o == Opinion::O1 ? "O1" : "O2"; }

/// Initial opinion value assigned to a seed of the given idea.
inline Scalar opinion_value(Opinion o) { return o == Opinion::O1 ? 1.0 : -1.0; }

/// Text form that parses back to the identical double.
inline std::string format_g17(Scalar v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Error raised on invalid inputs (bad files, out-of-range ids, infeasible budgets).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cosine
