#include "holoiso/grids.hpp"

#include <cmath>

namespace holoiso {

std::vector<Complex> disk_grid(int count, double radius) {
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    std::vector<Complex> out(count);
    for (int k = 0; k < count; ++k) {
        const double r = radius * std::sqrt((k + 0.5) / count);
        out[k] = std::polar(r, golden * k);
    }
    return out;
}

std::vector<Complex> circle_grid(int count, double radius, double offset) {
    std::vector<Complex> out(count);
    for (int k = 0; k < count; ++k) out[k] = std::polar(radius, offset + 2.0 * M_PI * k / count);
    return out;
}

}  // namespace holoiso
