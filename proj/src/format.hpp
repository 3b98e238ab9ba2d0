#pragma once

#include <cstdio>
#include <string>

namespace genie {

// Shortest representation with 12 significant digits; round-trips all
// values the engine serializes (file loaders parse with strtod).
inline std::string fmt_g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace genie
