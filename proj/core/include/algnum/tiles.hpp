#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "algnum/numsys.hpp"

namespace algnum {

// Depth-m point cloud approximating the tile of integer part N: one point per
// valid length-m fractional tail below the tree node N. Every point is within
// tile_tail_bound(ns, m) of the true tile.
struct TileCloud {
    LatticePoint base;
    int depth = 0;
    int color_index = 0;
    std::vector<std::complex<double>> points;
};

// digit_max * |alpha|^-depth / (|alpha| - 1)
double tile_tail_bound(const NumberSystem& ns, int depth);

TileCloud tile_cloud(const NumberSystem& ns, const LatticePoint& n, int depth,
                     size_t cap = 4000000);

// Color class of a tile from the leading denominator-prime digits of N
// (positions 1 and 2; position 0 is folded in when nonzero). Falls back to
// coordinate parity when the digit system at p does not exist.
int color_of(const NumberSystem& ns, const LatticePoint& n);

struct Window {
    double x0, x1, y0, y1;
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
};

// Binary PPM (P6) scatter raster of the clouds.
std::vector<std::uint8_t> render_ppm(const std::vector<TileCloud>& clouds, const Window& window,
                                     int width, int height);

// SVG 1.1 dot plot of the clouds.
std::string render_svg(const std::vector<TileCloud>& clouds, const Window& window, int width,
                       int height);

struct CoverageStats {
    size_t samples = 0;
    size_t covered = 0;  // sample within the tail bound of its own tile's cloud
    std::map<int, size_t> multiplicity_histogram;
    double hit_rate() const { return samples ? double(covered) / double(samples) : 0.0; }
    double multiplicity_one_rate() const {
        if (!samples) return 0.0;
        auto it = multiplicity_histogram.find(1);
        return it == multiplicity_histogram.end() ? 0.0 : double(it->second) / double(samples);
    }
};

// Sample the window uniformly; for each point, expand to `depth`, take the
// integer part N, and test membership in the cloud of N within the tail
// bound. Multiplicity counts the tiles whose clouds come within
// tail_bound/100 of the minimum distance (near-ties flag boundary points).
CoverageStats tiling_coverage_probe(const NumberSystem& ns, const Window& window,
                                    size_t samples, int depth, std::uint64_t seed = 20240901);

}  // namespace algnum
