#include "disklev/disk_map.hpp"

#include <stdexcept>

namespace disklev {

double DiskMap::boundary_speed(double s, double step) const {
    if (!(step > 0.0)) throw std::invalid_argument("boundary_speed: step must be > 0");
    const Complex fp = eval(unit_circle_point(s + step));
    const Complex fm = eval(unit_circle_point(s - step));
    return std::abs(fp - fm) / (2.0 * step);
}

}  // namespace disklev
