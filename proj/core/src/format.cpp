#include "pvfl/format.hpp"

#include <charconv>
#include <cmath>

#include "pvfl/errors.hpp"

namespace pvfl {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::string format_double(double value) {
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

double parse_double(std::string_view text) {
    const auto s = trim(text);
    // from_chars rejects a leading '+', accept it for convenience
    const auto body = (!s.empty() && s.front() == '+') ? s.substr(1) : s;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (body.empty() || ec != std::errc{} || ptr != body.data() + body.size() ||
        !std::isfinite(value)) {
        throw Error(ErrorCode::ParseError, "not a finite number: '" + std::string(text) + "'");
    }
    return value;
}

double parse_rate(std::string_view text) {
    const auto s = trim(text);
    if (s.empty() || s.back() != '%') return parse_double(s);

    // Shift the decimal exponent instead of dividing by 100 so "1.427%" and
    // "0.01427" round to the same double.
    const auto number = trim(s.substr(0, s.size() - 1));
    const auto e = number.find_first_of("eE");
    long exponent = -2;
    if (e != std::string_view::npos) {
        const auto exp_text = number.substr(e + 1);
        const auto body = (!exp_text.empty() && exp_text.front() == '+') ? exp_text.substr(1) : exp_text;
        long parsed = 0;
        const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), parsed);
        if (body.empty() || ec != std::errc{} || ptr != body.data() + body.size()) {
            throw Error(ErrorCode::ParseError, "bad exponent in '" + std::string(text) + "'");
        }
        exponent += parsed;
    }
    return parse_double(std::string(number.substr(0, e)) + "e" + std::to_string(exponent));
}

}  // namespace pvfl
