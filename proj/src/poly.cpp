#include "biharmonic/poly.hpp"

#include <algorithm>
#include <sstream>

namespace biharmonic {

Poly::Poly(std::initializer_list<Rational> ascending_coeffs)
    : coeffs_(ascending_coeffs)
{
    normalize();
}

Poly::Poly(std::vector<Rational> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs))
{
    normalize();
}

Poly Poly::constant(const Rational& c)
{
    Poly p;
    if (sign(c) != 0)
        p.coeffs_ = {c};
    return p;
}

Poly Poly::variable()
{
    Poly p;
    p.coeffs_ = {Rational(0), Rational(1)};
    return p;
}

void Poly::normalize()
{
    while (!coeffs_.empty() && sign(coeffs_.back()) == 0)
        coeffs_.pop_back();
}

const Rational& Poly::lead() const
{
    if (is_zero())
        throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational Poly::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return Rational(0);
    return coeffs_[static_cast<size_t>(k)];
}

Poly Poly::operator-() const
{
    Poly r(*this);
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

Poly Poly::operator+(const Poly& rhs) const
{
    std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        out[i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i)
        out[i] += rhs.coeffs_[i];
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator*(const Poly& rhs) const
{
    if (is_zero() || rhs.is_zero())
        return Poly();
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return Poly(std::move(out));
}

Poly Poly::operator*(const Rational& s) const
{
    if (sign(s) == 0)
        return Poly();
    Poly r(*this);
    for (auto& c : r.coeffs_)
        c *= s;
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const
{
    if (divisor.is_zero())
        throw std::domain_error("zero divisor");
    Poly rem(*this);
    if (degree() < divisor.degree())
        return {Poly(), rem};
    std::vector<Rational> quot(static_cast<size_t>(degree() - divisor.degree()) + 1, Rational(0));
    const Rational inv_lead = Rational(1) / divisor.lead();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        Rational factor = rem.lead() * inv_lead;
        quot[static_cast<size_t>(shift)] = factor;
        // rem -= factor * X^shift * divisor
        std::vector<Rational> next(rem.coeffs_);
        for (size_t i = 0; i < divisor.coeffs_.size(); ++i)
            next[i + static_cast<size_t>(shift)] -= factor * divisor.coeffs_[i];
        rem = Poly(std::move(next));
    }
    return {Poly(std::move(quot)), rem};
}

Poly Poly::derivative() const
{
    if (degree() <= 0)
        return Poly();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(out));
}

Poly Poly::monic() const
{
    if (is_zero())
        return *this;
    return *this * (Rational(1) / lead());
}

Rational Poly::eval(const Rational& x) const
{
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

int Poly::sign_at_pos_inf() const
{
    return is_zero() ? 0 : sign(lead());
}

int Poly::sign_at_neg_inf() const
{
    if (is_zero())
        return 0;
    int s = sign(lead());
    return degree() % 2 == 0 ? s : -s;
}

Poly Poly::primitive_scaled() const
{
    if (is_zero())
        return *this;
    Integer den_lcm(1), num_gcd(0);
    for (const auto& c : coeffs_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
    Rational scale(den_lcm, num_gcd == 0 ? Integer(1) : num_gcd);
    scale.canonicalize();
    return *this * scale;
}

Integer Poly::root_bound() const
{
    if (degree() <= 0)
        return Integer(1);
    Rational best(0);
    for (int i = 0; i < degree(); ++i) {
        Rational r = rational_abs(coeff(i) / lead());
        if (r > best)
            best = r;
    }
    Rational bound = best + 1;
    Integer b = floor_int(bound) + 1;
    return b;
}

bool Poly::has_only_even_terms() const
{
    for (size_t i = 1; i < coeffs_.size(); i += 2)
        if (sign(coeffs_[i]) != 0)
            return false;
    return true;
}

Poly Poly::even_decimation() const
{
    if (!has_only_even_terms())
        throw std::domain_error("polynomial has odd-degree terms");
    std::vector<Rational> out((coeffs_.size() + 1) / 2, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); i += 2)
        out[i / 2] = coeffs_[i];
    return Poly(std::move(out));
}

Poly Poly::inflate_square() const
{
    if (is_zero())
        return Poly();
    std::vector<Rational> out(2 * coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        out[2 * i] = coeffs_[i];
    return Poly(std::move(out));
}

std::string Poly::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational c = coeff(k);
        if (sign(c) == 0)
            continue;
        Rational a = rational_abs(c);
        if (first) {
            if (sign(c) < 0)
                os << "-";
            first = false;
        } else {
            os << (sign(c) < 0 ? "-" : "+");
        }
        const bool unit = (a == 1);
        if (k == 0 || !unit)
            os << a.get_str();
        if (k > 0) {
            if (!unit)
                os << "*";
            os << var;
            if (k > 1)
                os << "^" << k;
        }
    }
    return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        throw std::domain_error("zero divisor");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x.divmod(y).second;
        x = y;
        y = r.primitive_scaled(); // positively rescaled: same root set
    }
    return x.monic();
}

std::pair<Poly, Poly> squarefree_part(const Poly& p)
{
    if (p.is_zero())
        throw std::domain_error("zero polynomial");
    if (p.degree() <= 0)
        return {p, Poly::constant(Rational(1))};
    Poly g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0)
        return {p, Poly::constant(Rational(1))};
    Poly sf = p.divmod(g).first;
    return {sf, g};
}

} // namespace biharmonic
