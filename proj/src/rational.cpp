#include "biharmonic/rational.hpp"

namespace biharmonic {

std::string decimal_string(const Rational& q, unsigned digits, DecimalMode mode)
{
    const bool negative = sign(q) < 0;
    Rational a = rational_abs(q);
    // scaled = |q| * 10^digits, then cut to an integer
    Rational scaled = a * Rational(pow10(digits));
    Integer cut;
    if (mode == DecimalMode::truncate) {
        mpz_tdiv_q(cut.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    } else {
        scaled += Rational(1, 2);
        mpz_fdiv_q(cut.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    }
    std::string body = cut.get_str();
    if (body.size() <= digits)
        body.insert(0, digits + 1 - body.size(), '0');
    std::string out;
    if (negative && cut != 0)
        out += '-';
    if (digits == 0) {
        out += body;
    } else {
        out += body.substr(0, body.size() - digits);
        out += '.';
        out += body.substr(body.size() - digits);
    }
    return out;
}

Rational parse_rational(const std::string& text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        Rational r;
        if (r.set_str(text, 10) != 0)
            throw std::invalid_argument("bad rational literal: " + text);
        if (r.get_den() == 0)
            throw std::invalid_argument("zero denominator: " + text);
        r.canonicalize();
        return r;
    }
    std::string digitsPart = text.substr(dot + 1);
    std::string intPart = text.substr(0, dot);
    if (digitsPart.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad decimal literal: " + text);
    std::string joined = intPart + digitsPart;
    Rational r;
    if (r.set_str(joined.empty() ? "0" : joined, 10) != 0)
        throw std::invalid_argument("bad decimal literal: " + text);
    r /= Rational(pow10(static_cast<unsigned>(digitsPart.size())));
    r.canonicalize();
    return r;
}

} // namespace biharmonic
