#include "racgk/rational.hpp"

#include <cctype>

#include "racgk/error.hpp"

namespace racgk {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    const auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num_text) || !is_integer_literal(den_text) ||
        (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    Rational r(parse_integer(num_text), parse_integer(den_text));
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::optional<Rational> rational_sqrt(const Rational& x) {
    if (sgn(x) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) {
        return std::nullopt;
    }
    Rational r(sqrt(x.get_num()), sqrt(x.get_den()));
    r.canonicalize();
    return r;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace racgk
