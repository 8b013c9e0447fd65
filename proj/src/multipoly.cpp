#include "biharmonic/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace biharmonic {

MultiPoly MultiPoly::constant(unsigned nvars, const Rational& c)
{
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(unsigned nvars, const Exponents& e, const Rational& c)
{
    if (e.size() != nvars)
        throw std::invalid_argument("exponent vector length mismatch");
    MultiPoly p(nvars);
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::variable(unsigned nvars, unsigned index)
{
    if (index >= nvars)
        throw std::invalid_argument("variable index out of range");
    Exponents e(nvars, 0);
    e[index] = 1;
    return monomial(nvars, e, Rational(1));
}

void MultiPoly::add_term(const Exponents& e, const Rational& c)
{
    if (sign(c) == 0)
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (sign(it->second) == 0)
            terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const
{
    if (nvars_ != rhs.nvars_)
        throw std::invalid_argument("variable count mismatch");
    MultiPoly r(*this);
    for (const auto& [e, c] : rhs.terms_)
        r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const { return *this + (-rhs); }

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const
{
    if (nvars_ != rhs.nvars_)
        throw std::invalid_argument("variable count mismatch");
    MultiPoly r(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : rhs.terms_) {
            Exponents e(nvars_);
            for (unsigned i = 0; i < nvars_; ++i)
                e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& s) const
{
    MultiPoly r(nvars_);
    if (sign(s) == 0)
        return r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, c * s);
    return r;
}

MultiPoly MultiPoly::partial(unsigned var) const
{
    if (var >= nvars_)
        throw std::invalid_argument("variable index out of range");
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0)
            continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * Rational(static_cast<long>(e[var])));
    }
    return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const
{
    if (point.size() != nvars_)
        throw std::invalid_argument("point dimension mismatch");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (unsigned i = 0; i < nvars_; ++i) {
            Rational power(1);
            for (unsigned k = 0; k < e[i]; ++k)
                power *= point[i];
            term *= power;
        }
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::permute_variables(const std::vector<unsigned>& perm) const
{
    if (perm.size() != nvars_)
        throw std::invalid_argument("permutation size mismatch");
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents pe(nvars_);
        for (unsigned i = 0; i < nvars_; ++i)
            pe[perm[i]] = e[i];
        r.add_term(pe, c);
    }
    return r;
}

unsigned MultiPoly::total_degree() const
{
    unsigned best = 0;
    for (const auto& [e, c] : terms_) {
        unsigned d = 0;
        for (unsigned v : e)
            d += v;
        best = std::max(best, d);
    }
    return best;
}

std::string MultiPoly::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    // reverse canonical term order, so leading exponents print first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (first) {
            if (sign(c) < 0)
                os << "-";
            first = false;
        } else {
            os << (sign(c) < 0 ? " - " : " + ");
        }
        Rational a = rational_abs(c);
        bool printed = false;
        if (a != 1) {
            os << a.get_str();
            printed = true;
        }
        for (unsigned i = 0; i < nvars_; ++i) {
            if (e[i] == 0)
                continue;
            if (printed)
                os << "*";
            os << "x" << (i + 1);
            if (e[i] > 1)
                os << "^" << e[i];
            printed = true;
        }
        if (!printed)
            os << a.get_str();
    }
    return os.str();
}

MultiPoly laplacian(const MultiPoly& p)
{
    MultiPoly r(p.nvars());
    for (unsigned i = 0; i < p.nvars(); ++i)
        r = r + p.partial(i).partial(i);
    return r;
}

} // namespace biharmonic
