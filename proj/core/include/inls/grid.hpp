#ifndef INLS_GRID_HPP
#define INLS_GRID_HPP

#include <complex>
#include <memory>
#include <vector>

namespace inls {

/// Half-offset radial grid: nodes r_j = (j+1/2) h, j = 0..J-1, so the
/// singular weight |x|^{-b} is never evaluated at r = 0.
struct RadialGrid {
    int dim = 2;            ///< ambient dimension N
    int points = 0;         ///< J
    double r_max = 0.0;     ///< J*h
    double h = 0.0;
    double sphere_measure = 0.0;   ///< omega_{N-1}
    std::vector<double> r;         ///< node radii

    static std::shared_ptr<const RadialGrid> make(int N, int J, double r_max);

    bool same_as(const RadialGrid& o) const {
        return dim == o.dim && points == o.points && r_max == o.r_max;
    }
};

using GridPtr = std::shared_ptr<const RadialGrid>;

/// Complex samples of a radial field on a RadialGrid.
struct RadialField {
    GridPtr grid;
    std::vector<std::complex<double>> values;

    RadialField() = default;
    explicit RadialField(GridPtr g)
        : grid(std::move(g)), values(grid->points, std::complex<double>(0.0, 0.0)) {}
    RadialField(GridPtr g, std::vector<std::complex<double>> v)
        : grid(std::move(g)), values(std::move(v)) {}

    bool finite() const;
};

/// Throws std::invalid_argument unless both fields live on equal grids.
void require_same_grid(const RadialField& a, const RadialField& b);

/// Centered differences in the interior, one-sided at the two ends.
std::vector<std::complex<double>> radial_derivative(const RadialField& u);

}  // namespace inls

#endif
