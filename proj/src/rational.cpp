#include "benney/rational.hpp"

#include <cctype>

#include "benney/errors.hpp"

namespace benney {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string body = text;
    bool negative = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        negative = body[0] == '-';
        body = body.substr(1);
    }
    std::string num = body, den = "1";
    if (auto slash = body.find('/'); slash != std::string::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den) || den == "0")
        throw ParseError("malformed rational: '" + text + "'");
    Rational r(num + "/" + den);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

}  // namespace benney
