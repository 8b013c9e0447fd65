#include "biharmonic/sturm.hpp"

#include <algorithm>
#include <cassert>

namespace biharmonic {

std::string Endpoint::to_string() const
{
    switch (kind) {
    case Kind::neg_inf:
        return "-inf";
    case Kind::pos_inf:
        return "+inf";
    default:
        return value.to_string();
    }
}

bool endpoint_less(const Endpoint& a, const Endpoint& b)
{
    using K = Endpoint::Kind;
    if (a.kind == K::neg_inf)
        return b.kind != K::neg_inf;
    if (a.kind == K::pos_inf)
        return false;
    if (b.kind == K::pos_inf)
        return true;
    if (b.kind == K::neg_inf)
        return false;
    return a.value < b.value;
}

SturmChain::SturmChain(const Poly& p)
{
    if (p.is_zero())
        throw std::domain_error("Sturm chain of the zero polynomial");
    seq_.push_back(p);
    Poly d = p.derivative();
    if (d.is_zero())
        return; // constant polynomial: chain is just [p]
    seq_.push_back(d);
    while (true) {
        const Poly& a = seq_[seq_.size() - 2];
        const Poly& b = seq_[seq_.size() - 1];
        Poly r = a.divmod(b).second;
        if (r.is_zero())
            break;
        seq_.push_back(-r);
    }
}

namespace {

template <typename SignAt>
int count_variations(const std::vector<Poly>& seq, SignAt&& sign_at)
{
    int variations = 0;
    int prev = 0;
    for (const Poly& p : seq) {
        int s = sign_at(p);
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++variations;
        prev = s;
    }
    return variations;
}

} // namespace

int SturmChain::variations_at(const Rational& x) const
{
    return count_variations(seq_, [&](const Poly& p) { return p.sign_at(x); });
}

int SturmChain::variations_at(const QuadExt& x) const
{
    if (x.is_rational())
        return variations_at(x.a());
    return count_variations(seq_, [&](const Poly& p) { return eval_at(p, x).sgn(); });
}

int SturmChain::variations_at(const Endpoint& e) const
{
    switch (e.kind) {
    case Endpoint::Kind::neg_inf:
        return count_variations(seq_, [](const Poly& p) { return p.sign_at_neg_inf(); });
    case Endpoint::Kind::pos_inf:
        return count_variations(seq_, [](const Poly& p) { return p.sign_at_pos_inf(); });
    default:
        return variations_at(e.value);
    }
}

namespace {

void require_not_root(const Poly& p, const Endpoint& e)
{
    if (!e.finite())
        return;
    if (eval_at(p, e.value).sgn() == 0)
        throw EndpointRootError("endpoint root; perturb or deflate (endpoint " +
                                e.value.to_string() + ")");
}

} // namespace

int count_roots(const Poly& p, const Endpoint& lo, const Endpoint& hi)
{
    if (p.is_zero())
        throw std::domain_error("root count of the zero polynomial");
    if (!endpoint_less(lo, hi))
        throw std::invalid_argument("empty interval");
    require_not_root(p, lo);
    require_not_root(p, hi);
    SturmChain chain(p);
    // V(lo) - V(hi) counts distinct roots in (lo, hi]; hi is not a root, so
    // the count is the open-interval count.
    return chain.variations_at(lo) - chain.variations_at(hi);
}

int count_interior_roots(const Poly& p, const Endpoint& lo, const Endpoint& hi)
{
    if (p.is_zero())
        throw std::domain_error("root count of the zero polynomial");
    if (!endpoint_less(lo, hi))
        throw std::invalid_argument("empty interval");
    auto roots = isolate_and_refine(p, Endpoint::neg_inf(), Endpoint::pos_inf(), 1);
    const Poly sf = squarefree_part(p).first;
    int inside = 0;
    for (const auto& root : roots) {
        if (root.exact) {
            QuadExt v(*root.exact);
            bool in = (!lo.finite() || v > lo.value) && (!hi.finite() || v < hi.value);
            inside += in ? 1 : 0;
            continue;
        }
        // interval endpoints are non-roots of p; shrink until decisively
        // inside, outside, or pinned onto a root at the boundary itself
        Rational a = root.low, b = root.high;
        while (true) {
            bool a_in = !lo.finite() || QuadExt(a) > lo.value;
            bool b_in = !hi.finite() || QuadExt(b) < hi.value;
            if (a_in && b_in) {
                ++inside;
                break;
            }
            bool whole_left = hi.finite() && QuadExt(a) >= hi.value;
            bool whole_right = lo.finite() && QuadExt(b) <= lo.value;
            if (whole_left || whole_right)
                break;
            // interval straddles a finite endpoint e; if e is the root it is
            // not interior (open interval), otherwise bisect past it
            const Endpoint& e = !a_in ? lo : hi;
            if (eval_at(sf, e.value).sgn() == 0) {
                // the single root in this interval is exactly the endpoint
                break;
            }
            Rational mid = (a + b) / 2;
            int sm = sf.sign_at(mid);
            if (sm == 0) {
                QuadExt v{mid};
                bool in = (!lo.finite() || v > lo.value) && (!hi.finite() || v < hi.value);
                inside += in ? 1 : 0;
                break;
            }
            if (sf.sign_at(a) == sm)
                a = mid;
            else
                b = mid;
        }
    }
    return inside;
}

namespace {

struct RationalInterval {
    Rational a, b; // open (a, b), p(a) != 0 != p(b)
    int count = 0;
};

/// All roots of the square-free polynomial `sf` isolated into disjoint open
/// rational intervals (or exact rational points), over the whole real line.
struct RawRoot {
    Rational a, b;
    std::optional<Rational> exact;
};

std::vector<Rational> rational_roots(const Poly& sf);

std::vector<RawRoot> isolate_squarefree(const Poly& sf, const SturmChain& chain)
{
    std::vector<RawRoot> found;
    if (sf.degree() <= 0)
        return found;
    Rational bound(sf.root_bound());
    Rational lo = -bound, hi = bound; // p(+-bound) != 0 by the Cauchy bound
    int total = chain.variations_at(lo) - chain.variations_at(hi);
    std::vector<RationalInterval> work;
    if (total > 0)
        work.push_back({lo, hi, total});
    while (!work.empty()) {
        RationalInterval cur = work.back();
        work.pop_back();
        if (cur.count == 1) {
            found.push_back({cur.a, cur.b, std::nullopt});
            continue;
        }
        Rational mid = (cur.a + cur.b) / 2;
        if (sf.sign_at(mid) == 0) {
            // exact rational root at the midpoint; carve it out
            found.push_back({mid, mid, mid});
            Rational delta = (cur.b - cur.a) / 4;
            while (true) {
                Rational l = mid - delta, r = mid + delta;
                if (sf.sign_at(l) != 0 && sf.sign_at(r) != 0 &&
                    chain.variations_at(l) - chain.variations_at(r) == 1)
                    break;
                delta /= 2;
            }
            Rational l = mid - delta, r = mid + delta;
            int left = chain.variations_at(cur.a) - chain.variations_at(l);
            int right = chain.variations_at(r) - chain.variations_at(cur.b);
            if (left > 0)
                work.push_back({cur.a, l, left});
            if (right > 0)
                work.push_back({r, cur.b, right});
        } else {
            int left = chain.variations_at(cur.a) - chain.variations_at(mid);
            int right = cur.count - left;
            if (left > 0)
                work.push_back({cur.a, mid, left});
            if (right > 0)
                work.push_back({mid, cur.b, right});
        }
    }
    // snap isolating intervals onto exact rational roots where possible
    for (const Rational& q : rational_roots(sf)) {
        for (auto& r : found) {
            if (!r.exact && r.a < q && q < r.b) {
                r.exact = q;
                r.a = r.b = q;
                break;
            }
        }
    }
    std::sort(found.begin(), found.end(),
              [](const RawRoot& x, const RawRoot& y) { return x.a < y.a; });
    return found;
}

/// Exact rational roots of a square-free polynomial with small integer
/// scaling, by the rational root theorem. Returns an empty list when the
/// divisor enumeration would be too large; snapping is then skipped and the
/// roots stay as (correct) isolating intervals.
std::vector<Rational> rational_roots(const Poly& sf)
{
    std::vector<Rational> out;
    Poly zp = sf.primitive_scaled();
    int low = 0;
    while (low <= zp.degree() && sign(zp.coeff(low)) == 0)
        ++low;
    if (low > 0)
        out.emplace_back(0);
    if (zp.degree() == low)
        return out;
    Integer a0 = abs(zp.coeff(low).get_num());
    Integer ad = abs(zp.lead().get_num());
    const Integer limit(1000000000000L);
    if (a0 > limit || ad > limit)
        return out;
    auto divisors = [](const Integer& n) {
        std::vector<Integer> ds;
        for (Integer f = 1; f * f <= n; ++f) {
            if (n % f == 0) {
                ds.push_back(f);
                ds.push_back(n / f);
            }
        }
        return ds;
    };
    for (const Integer& p : divisors(a0)) {
        for (const Integer& q : divisors(ad)) {
            Rational cand(p, q);
            cand.canonicalize();
            if (sf.sign_at(cand) == 0)
                out.push_back(cand);
            if (sf.sign_at(-cand) == 0)
                out.push_back(-cand);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// One bisection step keeping the sign change; lands exactly on rational
/// roots when the midpoint hits one.
bool bisect_step(const Poly& sf, RawRoot& r)
{
    if (r.exact)
        return false;
    Rational mid = (r.a + r.b) / 2;
    int sm = sf.sign_at(mid);
    if (sm == 0) {
        r.exact = mid;
        r.a = r.b = mid;
        return true;
    }
    if (sf.sign_at(r.a) == sm)
        r.a = mid;
    else
        r.b = mid;
    return true;
}

/// Shrinks the isolating interval inside (lo, hi) or drops it; exact because
/// endpoints are never roots.
bool filter_into(const Poly& sf, RawRoot& r, const Endpoint& lo, const Endpoint& hi)
{
    auto above_lo = [&](const Rational& x) {
        return !lo.finite() || QuadExt(x) > lo.value;
    };
    auto below_hi = [&](const Rational& x) {
        return !hi.finite() || QuadExt(x) < hi.value;
    };
    while (true) {
        if (r.exact) {
            return above_lo(*r.exact) && below_hi(*r.exact);
        }
        const bool a_in = above_lo(r.a), b_in = below_hi(r.b);
        if (a_in && b_in)
            return true;
        if (!above_lo(r.b) || !below_hi(r.a))
            return false; // entirely outside
        bisect_step(sf, r);
    }
}

/// Smallest display-switch point strictly greater than x. For truncation the
/// displayed string changes at the nonzero multiples of cell; for rounding at
/// the half-shifted multiples (k + 1/2)*cell.
std::optional<Rational> switch_point_after(const Rational& x, const Rational& cell,
                                           DecimalMode mode)
{
    if (mode == DecimalMode::truncate) {
        Integer k = floor_int(x / cell) + 1;
        if (k == 0)
            k = 1; // (-cell, cell) is a single display cell around zero
        return Rational(k) * cell;
    }
    Integer k = floor_int(x / cell - Rational(1, 2)) + 1;
    return (Rational(k) + Rational(1, 2)) * cell;
}

std::string decimal_of_root(const Poly& sf, RawRoot& r, unsigned digits, DecimalMode mode)
{
    if (r.exact)
        return decimal_string(*r.exact, digits, mode);
    // Shrink well below one display cell: then at most one switch point can
    // still sit inside the interval.
    Rational cell(Integer(1), pow10(digits));
    Rational target = cell / 10;
    while (r.b - r.a > target && !r.exact)
        bisect_step(sf, r);
    while (!r.exact) {
        auto c = switch_point_after(r.a, cell, mode);
        if (!c || *c >= r.b) {
            // the open interval renders as a single string
            return decimal_string((r.a + r.b) / 2, digits, mode);
        }
        int sb = sf.sign_at(*c);
        if (sb == 0) {
            r.exact = *c;
            r.a = r.b = *c;
            break;
        }
        if (sf.sign_at(r.a) == sb)
            r.a = *c;
        else
            r.b = *c;
    }
    return decimal_string(*r.exact, digits, mode);
}

bool root_of(const Poly& g_sf, const SturmChain& g_chain, const RawRoot& r)
{
    if (r.exact)
        return g_sf.sign_at(*r.exact) == 0;
    if (g_sf.sign_at(r.a) == 0 || g_sf.sign_at(r.b) == 0)
        return true; // treat conservatively; callers only use this as a flag
    return g_chain.variations_at(r.a) - g_chain.variations_at(r.b) > 0;
}

} // namespace

std::vector<IsolatedRoot> isolate_and_refine(const Poly& p, const Endpoint& lo,
                                             const Endpoint& hi, unsigned digits,
                                             DecimalMode mode)
{
    if (p.is_zero())
        throw std::domain_error("cannot isolate roots of the zero polynomial");
    if (digits < 1 || digits > 50)
        throw std::invalid_argument("precision digits must be in [1, 50]");
    if (!endpoint_less(lo, hi))
        throw std::invalid_argument("empty interval");
    require_not_root(p, lo);
    require_not_root(p, hi);

    auto [sf, gcd] = squarefree_part(p);
    SturmChain chain(sf);
    const bool has_multiple = gcd.degree() > 0;
    std::optional<Poly> gcd_sf;
    std::optional<SturmChain> gcd_chain;
    if (has_multiple) {
        gcd_sf = squarefree_part(gcd).first;
        gcd_chain.emplace(*gcd_sf);
    }

    std::vector<IsolatedRoot> out;
    for (RawRoot r : isolate_squarefree(sf, chain)) {
        if (!filter_into(sf, r, lo, hi))
            continue;
        IsolatedRoot root;
        root.simple = !has_multiple || !root_of(*gcd_sf, *gcd_chain, r);
        root.decimal = decimal_of_root(sf, r, digits, mode);
        root.low = r.a;
        root.high = r.b;
        root.exact = r.exact;
        out.push_back(std::move(root));
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.low < y.low; });
    return out;
}

Rational interior_sample(const Endpoint& lo, const Endpoint& hi)
{
    using K = Endpoint::Kind;
    if (lo.kind == K::neg_inf && hi.kind == K::pos_inf)
        return Rational(0);
    if (lo.kind == K::neg_inf)
        return hi.value.rational_below() - 1;
    if (hi.kind == K::pos_inf)
        return lo.value.rational_above() + 1;
    // both finite: nudge rational stand-ins together until strictly inside
    Rational gap(1, 2);
    while (true) {
        Rational a = lo.value.rational_above(gap);
        Rational b = hi.value.rational_below(gap);
        if (a < b) {
            Rational mid = (a + b) / 2;
            if (QuadExt(mid) > lo.value && QuadExt(mid) < hi.value)
                return mid;
        }
        gap /= 4;
    }
}

PositivityOutcome certify_positive(const Poly& p, const Endpoint& lo, const Endpoint& hi)
{
    if (p.is_zero())
        throw std::domain_error("cannot certify the zero polynomial");
    if (!endpoint_less(lo, hi))
        throw std::invalid_argument("empty interval");
    PositivityOutcome outcome;
    int count = count_roots(squarefree_part(p).first, lo, hi);
    Rational sample = interior_sample(lo, hi);
    outcome.sample_sign = p.sign_at(sample);
    if (count == 0 && outcome.sample_sign > 0) {
        outcome.positive = true;
        outcome.certificate = PositivityCertificate{p, lo, hi, 0, sample, +1};
        return outcome;
    }
    if (count > 0) {
        auto roots = isolate_and_refine(p, lo, hi, 6);
        if (!roots.empty())
            outcome.witness = roots.front();
    }
    return outcome;
}

IsolatedRoot refine_to_width(const Poly& p_squarefree, IsolatedRoot root, const Rational& width)
{
    RawRoot r{root.low, root.high, root.exact};
    while (!r.exact && r.b - r.a > width)
        bisect_step(p_squarefree, r);
    root.low = r.a;
    root.high = r.b;
    root.exact = r.exact;
    return root;
}

} // namespace biharmonic
