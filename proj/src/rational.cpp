#include "syllogist/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace syllogist {

namespace {

bool parse_int(const char*& p, const char* end, std::int64_t& out) {
    auto [next, ec] = std::from_chars(p, end, out);
    if (ec != std::errc{}) return false;
    p = next;
    return true;
}

} // namespace

Rational rational_from_string(const std::string& text) {
    const char* p = text.c_str();
    const char* end = p + text.size();
    while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;

    bool neg = false;
    if (p < end && (*p == '+' || *p == '-')) { neg = (*p == '-'); ++p; }

    std::int64_t int_part = 0;
    bool have_digits = false;
    while (p < end && std::isdigit(static_cast<unsigned char>(*p))) {
        int_part = int_part * 10 + (*p - '0');
        have_digits = true;
        ++p;
    }

    if (p < end && *p == '/') {
        ++p;
        std::int64_t d = 0;
        if (!have_digits || !parse_int(p, end, d) || d == 0 || p != end)
            raise(errc::syntax_error, "bad rational: " + text);
        return Rational(neg ? -int_part : int_part, d);
    }

    std::int64_t num = int_part;
    std::int64_t den = 1;
    if (p < end && *p == '.') {
        ++p;
        while (p < end && std::isdigit(static_cast<unsigned char>(*p))) {
            if (den > 1000000000000000LL)
                raise(errc::syntax_error, "too many decimal digits: " + text);
            num = num * 10 + (*p - '0');
            den *= 10;
            have_digits = true;
            ++p;
        }
    }
    if (!have_digits)
        raise(errc::syntax_error, "bad number: " + text);

    int exp10 = 0;
    if (p < end && (*p == 'e' || *p == 'E')) {
        ++p;
        std::int64_t e = 0;
        bool eneg = false;
        if (p < end && (*p == '+' || *p == '-')) { eneg = (*p == '-'); ++p; }
        if (!parse_int(p, end, e) || e > 18)
            raise(errc::syntax_error, "bad exponent: " + text);
        exp10 = static_cast<int>(eneg ? -e : e);
    }
    while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
    if (p != end)
        raise(errc::syntax_error, "trailing characters in number: " + text);

    for (; exp10 > 0; --exp10) num *= 10;
    for (; exp10 < 0; ++exp10) den *= 10;
    return Rational(neg ? -num : num, den);
}

Rational rational_from_double(double v) {
    if (!std::isfinite(v)) raise(errc::domain_error, "non-finite proportion");
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) raise(errc::domain_error, "unprintable double");
    std::string text(buf, ptr);
    int digits = 0;
    for (char c : text)
        if (std::isdigit(static_cast<unsigned char>(c))) ++digits;
    if (digits > 15) {
        // not a short decimal; round to 12 significant digits
        int n = std::snprintf(buf, sizeof buf, "%.12g", v);
        text.assign(buf, buf + n);
    }
    return rational_from_string(text);
}

} // namespace syllogist
