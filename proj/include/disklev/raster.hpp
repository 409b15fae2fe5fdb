#ifndef DISKLEV_RASTER_HPP
#define DISKLEV_RASTER_HPP

#include <cstdint>
#include <filesystem>
#include <vector>

#include "disklev/disk_map.hpp"

namespace disklev {

/// Bitmask over an n x n pixel grid covering [-1,1]^2. Row 0 is the top of
/// the image (y = +1 edge); a pixel is set when its center lies inside the
/// unit disk and satisfies the sublevel test.
struct RasterGrid {
    int resolution = 0;
    std::vector<std::uint8_t> mask;  // row-major, 1 = set

    bool at(int ix, int iy) const {
        return mask[static_cast<std::size_t>(iy) * resolution + ix] != 0;
    }
    Complex pixel_center(int ix, int iy) const {
        const double d = 2.0 / resolution;
        return {-1.0 + (ix + 0.5) * d, 1.0 - (iy + 0.5) * d};
    }
};

RasterGrid rasterize_sublevel(const DiskMap& map, double t, int resolution);

/// Number of 4-connected components of set pixels.
int count_components(const RasterGrid& grid);

/// P5 binary graymap, maxval 255, 0 = outside, 255 = inside.
void write_pgm(const RasterGrid& grid, const std::filesystem::path& path);

/// 8-bit grayscale PNG with the same 0/255 convention.
void write_png(const RasterGrid& grid, const std::filesystem::path& path);

}  // namespace disklev

#endif
