#include "charcoords/rational.hpp"

#include "charcoords/errors.hpp"

#include <cctype>

namespace charcoords {

std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+'))
        i = 1;
    if (i == s.size())
        throw InputError("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw InputError("malformed rational: '" + std::string(whole) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(s, text));
    Integer num = parse_integer(trim(s.substr(0, slash)), text);
    Integer den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0)
        throw InputError("zero denominator: '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

double to_double(const Rational& r) { return r.get_d(); }

Rational random_rational(std::mt19937_64& rng, std::uint64_t bound) {
    std::uniform_int_distribution<std::uint64_t> pick(1, bound);
    std::uint64_t p = pick(rng);
    std::uint64_t q = pick(rng);
    Rational r(Integer(std::to_string(p)), Integer(std::to_string(q)));
    r.canonicalize();
    return r;
}

} // namespace charcoords
