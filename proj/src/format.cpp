#include "ctxwit/format.hpp"

#include <charconv>
#include <cstdlib>

namespace ctxwit {

std::string fmt9(double value) {
    if (value == 0.0) {
        return "0";  // avoid "-0"
    }
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

double round9(double value) {
    return std::strtod(fmt9(value).c_str(), nullptr);
}

}  // namespace ctxwit
