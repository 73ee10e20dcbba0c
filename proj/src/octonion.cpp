#include "octolin/octonion.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

namespace octolin {

std::string to_string(const Octonion& p, int digits) {
    std::string out;
    char buf[64];
    for (int i = 0; i < 8; ++i) {
        const double c = p[i];
        if (c == 0.0) continue;
        const double mag = std::abs(c);
        if (out.empty()) {
            out += (c < 0) ? "-" : "";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        std::snprintf(buf, sizeof(buf), "%.*g", digits, mag);
        if (i == 0) {
            out += buf;
        } else if (mag == 1.0) {
            out += "e" + std::to_string(i);
        } else {
            out += buf;
            out += " e" + std::to_string(i);
        }
    }
    if (out.empty()) out = "0";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Octonion& p) {
    return os << to_string(p);
}

} // namespace octolin
