#pragma once

#include <vector>

#include "pkern/gf2.hpp"
#include "pkern/linear_code.hpp"

namespace pkern {

using PDProfile = std::vector<int>;

// An l x l binary matrix candidate.  Squareness is enforced here; being a
// polarization kernel (invertible and not column-equivalent to upper
// triangular) is a separate predicate so profiles of near-misses can still
// be inspected.
struct Kernel {
    BitMatrix m;

    explicit Kernel(BitMatrix mat) : m(std::move(mat)) {
        if (!m.is_square() || m.n == 0) throw NotSquare("kernel matrix must be square");
    }

    int size() const { return m.n; }
    bool operator==(const Kernel&) const = default;
};

bool is_polarization_kernel(const BitMatrix& m);

// Code spanned by rows phi..l-1 of the kernel; phi = l gives the zero code.
LinearCode kernel_code(const Kernel& k, int phi);

// D_i = distance from row i to the span of rows i+1..l-1 (D_{l-1} is the
// weight of the last row).
PDProfile partial_distance_profile(const Kernel& k);

// E(D) = (1/l) * sum ln D_i / ln l with l = D.size().
double error_exponent(const PDProfile& d);

}  // namespace pkern
