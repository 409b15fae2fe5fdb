#include "disklev/raster.hpp"

#include <png.h>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

namespace disklev {

RasterGrid rasterize_sublevel(const DiskMap& map, double t, int resolution) {
    if (resolution < 64) throw std::invalid_argument("rasterize_sublevel: resolution must be >= 64");
    if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("rasterize_sublevel: t outside [0, 1]");

    RasterGrid grid;
    grid.resolution = resolution;
    grid.mask.assign(static_cast<std::size_t>(resolution) * resolution, 0);
    if (t == 0.0) return grid;

    for (int iy = 0; iy < resolution; ++iy) {
        for (int ix = 0; ix < resolution; ++ix) {
            const Complex z = grid.pixel_center(ix, iy);
            if (std::norm(z) >= 1.0) continue;
            if (map.modulus(z) < t) {
                grid.mask[static_cast<std::size_t>(iy) * resolution + ix] = 1;
            }
        }
    }
    return grid;
}

int count_components(const RasterGrid& grid) {
    if (grid.resolution <= 0 || grid.mask.empty()) {
        throw std::invalid_argument("count_components: empty grid");
    }
    const int n = grid.resolution;
    std::vector<std::uint8_t> seen(grid.mask.size(), 0);
    std::vector<std::pair<int, int>> stack;
    int components = 0;

    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            const std::size_t idx = static_cast<std::size_t>(iy) * n + ix;
            if (!grid.mask[idx] || seen[idx]) continue;
            ++components;
            seen[idx] = 1;
            stack.emplace_back(ix, iy);
            while (!stack.empty()) {
                const auto [x, y] = stack.back();
                stack.pop_back();
                const int nb[4][2] = {{x - 1, y}, {x + 1, y}, {x, y - 1}, {x, y + 1}};
                for (const auto& [nx, ny] : nb) {
                    if (nx < 0 || ny < 0 || nx >= n || ny >= n) continue;
                    const std::size_t nidx = static_cast<std::size_t>(ny) * n + nx;
                    if (grid.mask[nidx] && !seen[nidx]) {
                        seen[nidx] = 1;
                        stack.emplace_back(nx, ny);
                    }
                }
            }
        }
    }
    return components;
}

namespace {

class FileHandle {
public:
    FileHandle(const std::filesystem::path& path, const char* mode)
        : f_(std::fopen(path.string().c_str(), mode)) {
        if (!f_) throw std::runtime_error("cannot open " + path.string());
    }
    ~FileHandle() {
        if (f_) std::fclose(f_);
    }
    FileHandle(const FileHandle&) = delete;
    FileHandle& operator=(const FileHandle&) = delete;
    std::FILE* get() const { return f_; }

private:
    std::FILE* f_;
};

std::vector<std::uint8_t> gray_row(const RasterGrid& grid, int iy) {
    const int n = grid.resolution;
    std::vector<std::uint8_t> row(static_cast<std::size_t>(n));
    for (int ix = 0; ix < n; ++ix) {
        row[static_cast<std::size_t>(ix)] = grid.at(ix, iy) ? 255 : 0;
    }
    return row;
}

}  // namespace

void write_pgm(const RasterGrid& grid, const std::filesystem::path& path) {
    FileHandle f(path, "wb");
    const int n = grid.resolution;
    std::fprintf(f.get(), "P5\n%d %d\n255\n", n, n);
    for (int iy = 0; iy < n; ++iy) {
        const auto row = gray_row(grid, iy);
        if (std::fwrite(row.data(), 1, row.size(), f.get()) != row.size()) {
            throw std::runtime_error("short write to " + path.string());
        }
    }
}

void write_png(const RasterGrid& grid, const std::filesystem::path& path) {
    FileHandle f(path, "wb");
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw std::runtime_error("png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw std::runtime_error("png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw std::runtime_error("libpng error writing " + path.string());
    }
    png_init_io(png, f.get());
    const int n = grid.resolution;
    png_set_IHDR(png, info, static_cast<png_uint_32>(n), static_cast<png_uint_32>(n), 8,
                 PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int iy = 0; iy < n; ++iy) {
        auto row = gray_row(grid, iy);
        png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

}  // namespace disklev
