#include "chanspace/rational.hpp"

#include "chanspace/errors.hpp"

#include <algorithm>
#include <cctype>

namespace chanspace {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Plain decimal digit run -> Int. Avoids cpp_int's string constructor,
// which treats leading 0 / 0x as base prefixes.
Int digits_to_int(std::string_view digits, std::string_view original) {
    if (digits.empty()) throw ParseError("expected digits in '" + std::string(original) + "'");
    Int value = 0;
    for (char c : digits) {
        if (c < '0' || c > '9')
            throw ParseError("invalid character '" + std::string(1, c) + "' in '" +
                             std::string(original) + "'");
        value = value * 10 + (c - '0');
    }
    return value;
}

// sign is +1 or -1; consumed from the front if present.
int take_sign(std::string_view& s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        int sign = s.front() == '-' ? -1 : 1;
        s.remove_prefix(1);
        return sign;
    }
    return 1;
}

Rat parse_decimal(std::string_view s, std::string_view original) {
    int sign = take_sign(s);

    std::string_view mantissa = s;
    std::string_view exponent_part;
    auto epos = s.find_first_of("eE");
    if (epos != std::string_view::npos) {
        mantissa = s.substr(0, epos);
        exponent_part = s.substr(epos + 1);
    }

    std::string_view int_part = mantissa;
    std::string_view frac_part;
    auto dot = mantissa.find('.');
    if (dot != std::string_view::npos) {
        int_part = mantissa.substr(0, dot);
        frac_part = mantissa.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty())
        throw ParseError("no digits in '" + std::string(original) + "'");

    Int numerator = int_part.empty() ? Int(0) : digits_to_int(int_part, original);
    for (char c : frac_part) {
        if (c < '0' || c > '9')
            throw ParseError("invalid character '" + std::string(1, c) + "' in '" +
                             std::string(original) + "'");
        numerator = numerator * 10 + (c - '0');
    }

    Int denominator = 1;
    for (size_t i = 0; i < frac_part.size(); ++i) denominator *= 10;

    if (epos != std::string_view::npos) {
        std::string_view exp = exponent_part;
        int exp_sign = take_sign(exp);
        Int magnitude = digits_to_int(exp, original);
        if (magnitude > 4096) throw ParseError("exponent too large in '" + std::string(original) + "'");
        Int scale = 1;
        for (Int i = 0; i < magnitude; ++i) scale *= 10;
        if (exp_sign > 0)
            numerator *= scale;
        else
            denominator *= scale;
    }

    Rat value(numerator, denominator);
    if (sign < 0) value = -value;
    return value;
}

}  // namespace

Rat parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty number");

    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        std::string_view num = trim(s.substr(0, slash));
        std::string_view den = trim(s.substr(slash + 1));
        int num_sign = take_sign(num);
        int den_sign = take_sign(den);
        Int numerator = digits_to_int(num, text);
        Int denominator = digits_to_int(den, text);
        if (denominator == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        Rat value(numerator, denominator);
        if (num_sign * den_sign < 0) value = -value;
        return value;
    }
    return parse_decimal(s, text);
}

std::string fraction_string(const Rat& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

std::string decimal_string(const Rat& value, int digits) {
    Rat magnitude = value < 0 ? Rat(-value) : value;
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // round half away from zero
    Int scaled = (numerator(magnitude) * scale * 2 + denominator(magnitude)) /
                 (denominator(magnitude) * 2);
    Int whole = scaled / scale;
    std::string out = value < 0 && scaled != 0 ? "-" : "";
    out += whole.str();
    if (digits > 0) {
        std::string frac_digits = Int(scaled % scale).str();
        frac_digits.insert(frac_digits.begin(), digits - frac_digits.size(), '0');
        out += "." + frac_digits;
    }
    return out;
}

double to_double(const Rat& value) { return value.convert_to<double>(); }

Int pow2(unsigned exponent) { return Int(1) << exponent; }

Int nonempty_code_count(int n) { return pow2(static_cast<unsigned>(n)) - 1; }

}  // namespace chanspace
