#include "pkern/kernel.hpp"

#include <cmath>

namespace pkern {

bool is_polarization_kernel(const BitMatrix& m) {
    if (!m.is_square() || m.n == 0) throw NotSquare("kernel matrix must be square");
    const int l = m.n;
    if (rank(m) != l) return false;
    // Column permutation to upper triangular keeps the row order, so row i
    // must vanish on the columns assigned above it and an invertible
    // triangular matrix has a unit diagonal.  Scanning bottom-up, row i may
    // touch only the columns already claimed below plus its own diagonal
    // column, hence must have exactly one 1 outside the claimed set; the
    // choice is forced, so this greedy scan is exact.
    std::uint32_t claimed = 0;
    for (int i = l - 1; i >= 0; --i) {
        const std::uint32_t fresh = m.rows[static_cast<std::size_t>(i)] & ~claimed;
        if (std::popcount(fresh) != 1) return true;  // not triangulable
        claimed |= fresh;
    }
    return false;  // triangulable, so it does not polarize
}

LinearCode kernel_code(const Kernel& k, int phi) {
    const int l = k.size();
    if (phi < 0 || phi > l) throw PhaseOutOfRange("phase outside [0, l]");
    BitMatrix g(l);
    for (int i = phi; i < l; ++i) g.rows.push_back(k.m.rows[static_cast<std::size_t>(i)]);
    return LinearCode::from_generator(g);
}

PDProfile partial_distance_profile(const Kernel& k) {
    const int l = k.size();
    PDProfile d(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) {
        // Dependent suffix rows make from_generator throw; a candidate that
        // is not even full rank still deserves a profile, so fall back to
        // the span of a maximal independent subset.
        BitMatrix g(l);
        for (int j = i + 1; j < l; ++j) g.rows.push_back(k.m.rows[static_cast<std::size_t>(j)]);
        rref_in_place(g);
        const LinearCode code = LinearCode::from_generator(g);
        d[static_cast<std::size_t>(i)] = distance_to_code(k.m.row(i), code);
    }
    return d;
}

double error_exponent(const PDProfile& d) {
    if (d.size() < 2) throw DistanceOutOfRange("exponent needs l >= 2");
    const double l = static_cast<double>(d.size());
    double sum = 0;
    for (int di : d) {
        if (di < 1) throw DistanceOutOfRange("partial distances must be positive");
        sum += std::log(static_cast<double>(di));
    }
    return sum / (l * std::log(l));
}

}  // namespace pkern
