#include "kct/types.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace kct {

dist_t tenths_from_minutes(double minutes) {
    return static_cast<dist_t>(std::llround(minutes * 10.0));
}

std::string minutes_str(dist_t tenths) {
    const bool neg = tenths < 0;
    const dist_t a = neg ? -tenths : tenths;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%s%lld.%lld", neg ? "-" : "",
                  static_cast<long long>(a / 10), static_cast<long long>(a % 10));
    return buf;
}

dist_t parse_minutes_exact(const std::string& text) {
    if (text.empty()) throw InputError("empty minute value");
    std::size_t i = 0;
    if (text[i] == '+') ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw InputError("bad minute value '" + text + "'");
    dist_t whole = 0;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
        whole = whole * 10 + (text[i] - '0');
        if (whole > 100'000'000) throw InputError("minute value out of range '" + text + "'");
    }
    dist_t tenth = 0;
    if (i < text.size()) {
        if (text[i] != '.') throw InputError("bad minute value '" + text + "'");
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw InputError("bad minute value '" + text + "'");
        tenth = text[i] - '0';
        ++i;
        // anything past the first fractional digit must be zero: the data
        // model has a fixed 0.1-minute resolution
        for (; i < text.size(); ++i) {
            if (text[i] != '0')
                throw InputError("minute value '" + text + "' is finer than the 0.1-minute resolution");
        }
    }
    return whole * 10 + tenth;
}

}  // namespace kct
