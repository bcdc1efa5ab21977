#include "ohmnet/rational.hpp"

#include "ohmnet/errors.hpp"

#include <cctype>

namespace ohmnet {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) {
        throw ParseError("empty rational literal");
    }
    auto is_integer = [](const std::string& s) {
        std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (start == s.size()) return false;
        for (std::size_t i = start; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        }
        return true;
    };

    std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer(text)) {
            throw ParseError("bad rational literal '" + text + "'");
        }
        return Rational(BigInt(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den)) {
        throw ParseError("bad rational literal '" + text + "'");
    }
    BigInt d(den);
    if (d == 0) {
        throw ParseError("zero denominator in '" + text + "'");
    }
    return make_rational(BigInt(num), d);
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int digits) {
    if (digits < 0) digits = 0;
    BigInt num = q.get_num();
    BigInt den = q.get_den();
    bool negative = num < 0;
    if (negative) num = -num;

    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // round half away from zero
    BigInt scaled = (num * scale * 2 + den) / (den * 2);

    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;

    std::string out = whole.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
    }
    if (negative && scaled != 0) out = "-" + out;
    return out;
}

} // namespace ohmnet
