#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "ydlab/error.hpp"

namespace ydlab {

// Ground field: exact rationals, always kept in canonical reduced form
// (positive denominator, gcd 1).  mpq_class canonicalizes on demand; every
// path that constructs a Scalar from user input goes through parse_scalar,
// which canonicalizes.
using Scalar = mpq_class;

// Parses "p" or "p/q" (decimal, q > 0 after canonicalization).
Scalar parse_scalar(const std::string& text);

// Renders canonically: "p" when the denominator is 1, else "p/q".
std::string scalar_str(const Scalar& s);

// A linear map between finite-dimensional rational vector spaces, stored as a
// dense cod x dom matrix.  Tensor products use the row-major flat index
// convention: basis vector e_i (x) e_j of an m (x) n space has flat index
// i*n + j (first factor slowest).  Immutable by convention after
// construction; all operations return fresh values.
class LinMap {
public:
    // Zero map of the given shape.
    LinMap(int cod_dim, int dom_dim);
    // Default: the 1 x 1 zero map (placeholder for deferred assignment).
    LinMap() : LinMap(1, 1) {}

    static LinMap identity(int n);
    // Permutation sending e_i (x) e_j of an m (x) n space to e_j (x) e_i.
    static LinMap flip(int m, int n);
    static LinMap scalar(const Scalar& value);  // 1x1
    static LinMap from_rows(const std::vector<std::vector<std::string>>& rows);

    int dom() const { return dom_; }
    int cod() const { return cod_; }

    const Scalar& at(int row, int col) const { return e_[static_cast<size_t>(row) * dom_ + col]; }
    Scalar& at(int row, int col) { return e_[static_cast<size_t>(row) * dom_ + col]; }

    bool operator==(const LinMap& other) const;
    bool operator!=(const LinMap& other) const { return !(*this == other); }

    bool is_identity() const;

    LinMap operator+(const LinMap& other) const;
    LinMap operator*(const Scalar& c) const;

    // Exact inverse via Gauss-Jordan elimination; requires a square map.
    // Throws Error(NotInvertible) on singular input.
    LinMap inverse() const;

    // First coordinate (row, col) at which the two maps differ, or nullopt if
    // equal; shape mismatch reports coordinate (-1, -1).
    struct Difference {
        long row = 0;
        long col = 0;
        std::string lhs;
        std::string rhs;
    };
    static std::optional<Difference> first_difference(const LinMap& a, const LinMap& b);

    std::string to_string() const;
    std::vector<std::vector<std::string>> to_rows() const;

private:
    int cod_;
    int dom_;
    std::vector<Scalar> e_;  // row-major, cod_ rows of dom_ entries
};

// Matrix product f.g (apply g first).  Throws Error(DimensionMismatch) unless
// f.dom() == g.cod().
LinMap compose(const LinMap& f, const LinMap& g);

// Kronecker product under the flat-index convention above.
LinMap kron(const LinMap& f, const LinMap& g);

inline LinMap kron(const LinMap& a, const LinMap& b, const LinMap& c) {
    return kron(kron(a, b), c);
}

inline bool eq(const LinMap& f, const LinMap& g) { return f == g; }

}  // namespace ydlab
