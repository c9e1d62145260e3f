#include "prefopt/common.hpp"

#include <cstdio>

namespace prefopt {

std::string fmt_double(double v) {
    char buf[40];
    // %.17g always round-trips; try shorter forms first so CSVs stay readable.
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        double back = 0.0;
        std::sscanf(buf, "%lf", &back);
        if (back == v) return buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace prefopt
