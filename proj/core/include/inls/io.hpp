#ifndef INLS_IO_HPP
#define INLS_IO_HPP

#include <filesystem>
#include <string>

#include "inls/grid.hpp"
#include "inls/params.hpp"

namespace inls {

/// 17 significant digits, '.' decimal separator, locale independent.
std::string fmt17(double v);

/// Field snapshot: '#' header lines (N, b, alpha, sign, t, J, h), then
/// CSV columns r, re, im.
void write_snapshot(const std::filesystem::path& path, const RadialField& u,
                    const PhysParams& p, double t);

struct SnapshotData {
    RadialField u;
    PhysParams params;
    double t = 0.0;
};

SnapshotData read_snapshot(const std::filesystem::path& path);

}  // namespace inls

#endif
