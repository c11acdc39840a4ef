#include "vpcremona/rational.hpp"

#include "vpcremona/error.hpp"

#include <cctype>

namespace vpcremona {

std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw InvalidArgument("empty rational literal");

    auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    const auto slash = text.find('/');
    std::string num(text.substr(0, slash));
    std::string den = slash == std::string_view::npos ? std::string("1") : std::string(text.substr(slash + 1));
    if (!valid_int(num) || !valid_int(den))
        throw InvalidArgument("malformed rational literal: " + std::string(text));
    if (num.front() == '+') num.erase(0, 1);

    const Integer d(den);
    if (d == 0) throw InvalidArgument("zero denominator in rational literal");
    Rational r(Integer(num), d);
    r.canonicalize();
    return r;
}

}  // namespace vpcremona
