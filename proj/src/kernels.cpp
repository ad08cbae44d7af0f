#include "holoiso/kernels.hpp"

#include <algorithm>

namespace holoiso {

ResidueReport verify_grid(const DiskIsometry& iso, std::span<const Complex> grid, Exec exec, double radius_cap) {
    struct Row {
        ResidueSample sample;
        bool near_branch = false;
    };
    const auto rows = map_indices<Row>(static_cast<int>(grid.size()), exec, [&](int i) {
        const Complex w = grid[i];
        const TargetPoint p = evaluate(iso, w, radius_cap);
        return Row{{w, functional_residual(w, p), defining_residual(iso.frame, w, p)}, p.near_branch};
    });
    ResidueReport report;
    report.samples.reserve(rows.size());
    for (const Row& r : rows) {
        report.samples.push_back(r.sample);
        report.max_functional = std::max(report.max_functional, r.sample.functional);
        report.max_defining = std::max(report.max_defining, r.sample.defining);
        if (r.near_branch) ++report.near_branch_paths;
    }
    return report;
}

std::vector<Complex> evaluate_disk_grid(const DiskIsometry& iso, std::span<const Complex> grid, Exec exec,
                                        double radius_cap) {
    return map_indices<Complex>(static_cast<int>(grid.size()), exec,
                                [&](int i) { return evaluate(iso, grid[i], radius_cap).disk; });
}

}  // namespace holoiso
