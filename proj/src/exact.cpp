#include "cyclespec/exact.hpp"

#include <cmath>

#include "cyclespec/errors.hpp"

namespace cyclespec {

std::string to_string(const Rational& q) {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
    auto digits = [&](const std::string& s) {
        if (s.empty()) throw InvalidArgument("bad rational '" + text + "'");
        for (char c : s)
            if (c < '0' || c > '9') throw InvalidArgument("bad rational '" + text + "'");
        return BigInt(s);
    };
    if (auto slash = text.find('/'); slash != std::string::npos) {
        BigInt den = digits(text.substr(slash + 1));
        if (den == 0) throw InvalidArgument("zero denominator in '" + text + "'");
        return Rational(digits(text.substr(0, slash)), den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string frac = text.substr(dot + 1);
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
        BigInt whole = dot == 0 ? BigInt(0) : digits(text.substr(0, dot));
        return Rational(whole * scale + digits(frac), scale);
    }
    return Rational(digits(text));
}

bool meets_power_gate(std::uint64_t e, std::uint64_t n, const Rational& c, int k) {
    if (k < 1) throw InvalidArgument("k must be positive");
    const auto uk = static_cast<unsigned>(k);
    BigInt p = boost::multiprecision::numerator(c);
    BigInt q = boost::multiprecision::denominator(c);
    BigInt lhs = boost::multiprecision::pow(BigInt(e), uk) * boost::multiprecision::pow(q, uk);
    BigInt rhs = boost::multiprecision::pow(p, uk) * boost::multiprecision::pow(BigInt(n), uk + 1);
    return lhs >= rhs;
}

bool meets_root_threshold(std::uint64_t deg, std::uint64_t n, const Rational& c, int k) {
    if (k < 1) throw InvalidArgument("k must be positive");
    const auto uk = static_cast<unsigned>(k);
    BigInt p = boost::multiprecision::numerator(c);
    BigInt q = boost::multiprecision::denominator(c);
    return boost::multiprecision::pow(BigInt(deg), uk) * boost::multiprecision::pow(q, uk) >=
           boost::multiprecision::pow(p, uk) * BigInt(n);
}

double power_gate_value(std::uint64_t n, const Rational& c, int k) {
    return c.convert_to<double>() * std::pow(static_cast<double>(n), 1.0 + 1.0 / k);
}

}  // namespace cyclespec
