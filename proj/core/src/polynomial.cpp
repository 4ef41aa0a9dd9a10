#include "primcoh/polynomial.hpp"

#include "primcoh/errors.hpp"

#include <algorithm>
#include <sstream>

namespace primcoh {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[k];
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (int k = degree(); k >= 0; --k) acc = acc * x + coeffs_[k];
    return acc;
}

Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    // Lagrange basis, accumulated coefficient-wise.
    const int n = static_cast<int>(points.size());
    std::vector<Rational> acc(n, Rational(0));
    for (int i = 0; i < n; ++i) {
        // numerator polynomial prod_{j != i} (x - x_j)
        std::vector<Rational> num{Rational(1)};
        Rational denom = 1;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            denom *= points[i].first - points[j].first;
            std::vector<Rational> next(num.size() + 1, Rational(0));
            for (std::size_t k = 0; k < num.size(); ++k) {
                next[k + 1] += num[k];
                next[k] -= points[j].first * num[k];
            }
            num = std::move(next);
        }
        if (denom == 0) throw Error("interpolation nodes must be distinct");
        const Rational w = points[i].second / denom;
        for (std::size_t k = 0; k < num.size(); ++k) acc[k] += w * num[k];
    }
    return Polynomial(std::move(acc));
}

namespace {

// Sturm-chain real-root isolation over exact rationals. Bisection brackets
// every real root into width-< 1 intervals in O(log bound) steps, so integer
// roots are found by direct evaluation even when they are astronomically
// large (divisor scans of the trailing coefficient cannot do that).

using Coeffs = std::vector<Rational>; // ascending, trimmed

Coeffs trim(Coeffs c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

Coeffs derivative(const Coeffs& c) {
    Coeffs out;
    for (std::size_t k = 1; k < c.size(); ++k) out.push_back(Rational(k) * c[k]);
    return trim(std::move(out));
}

Rational eval(const Coeffs& c, const Rational& x) {
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Coeffs mod(Coeffs num, const Coeffs& den) {
    while (num.size() >= den.size()) {
        const Rational q = num.back() / den.back();
        const std::size_t shift = num.size() - den.size();
        for (std::size_t k = 0; k < den.size(); ++k) num[shift + k] -= q * den[k];
        num = trim(std::move(num));
        if (num.empty()) break;
    }
    return num;
}

std::vector<Coeffs> sturm_chain(const Coeffs& p) {
    std::vector<Coeffs> chain{p, derivative(p)};
    while (!chain.back().empty() && chain.back().size() > 1) {
        Coeffs r = mod(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

// Sign changes of the chain at x; counts distinct real roots via V(a) - V(b)
// for endpoints that are not roots of p.
int sign_changes(const std::vector<Coeffs>& chain, const Rational& x) {
    int changes = 0, prev = 0;
    for (const auto& c : chain) {
        const Rational v = eval(c, x);
        const int s = v == 0 ? 0 : (v < 0 ? -1 : 1);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

// A split point strictly inside (lo, hi) that is not a root of p; at most
// deg(p) points can fail, so some early candidate works.
Rational non_root_split(const Coeffs& p, const Rational& lo, const Rational& hi) {
    const int tries = static_cast<int>(p.size()) + 2;
    for (int k = 1; k < tries + 1; ++k) {
        const Rational x = lo + (hi - lo) * Rational(k, tries + 1);
        if (eval(p, x) != 0) return x;
    }
    throw Error("internal: no non-root split point found");
}

} // namespace

std::optional<Int> largest_nonnegative_integer_root(const Polynomial& p) {
    if (p.is_zero()) throw Error("zero polynomial has every integer as a root");

    Coeffs c(p.degree() + 1);
    for (int k = 0; k <= p.degree(); ++k) c[k] = p.coeff(k);

    // factor out x^v; 0 is a root iff v > 0
    std::size_t v = 0;
    while (v < c.size() && c[v] == 0) ++v;
    std::optional<Int> best;
    if (v > 0) best = 0;
    Coeffs q(c.begin() + v, c.end());
    if (q.size() <= 1) return best; // nonzero constant

    // Cauchy bound: all real roots lie in [-B, B]
    Rational maxc = 0;
    for (const auto& ck : q) {
        const Rational a = ck < 0 ? Rational(-ck) : ck;
        if (a > maxc) maxc = a;
    }
    const Rational lead = q.back() < 0 ? Rational(-q.back()) : q.back();
    const Rational bound = 1 + maxc / lead;
    const Int hi_int = numerator(bound) / denominator(bound) + 1;

    const auto chain = sturm_chain(q);
    auto record = [&](const Int& k) {
        if (k >= 1 && eval(q, Rational(k)) == 0 && (!best || k > *best)) best = k;
    };

    // bisect (lo, hi] intervals holding at least one distinct real root
    struct Interval {
        Rational lo, hi;
        int vlo, vhi;
    };
    std::vector<Interval> stack;
    {
        const Rational lo(1, 2), hi(Rational(hi_int) + Rational(1, 2));
        // endpoints are half-integers, adjusted if they happen to be roots
        Rational lo2 = lo, hi2 = hi;
        while (eval(q, lo2) == 0) lo2 -= Rational(1, 7);
        while (eval(q, hi2) == 0) hi2 += Rational(1, 7);
        stack.push_back({lo2, hi2, sign_changes(chain, lo2), sign_changes(chain, hi2)});
    }
    while (!stack.empty()) {
        const Interval it = stack.back();
        stack.pop_back();
        if (it.vlo - it.vhi <= 0) continue;
        if (it.hi - it.lo < 1) {
            // at most one integer in (lo, hi]: ceil(lo) when it lands inside
            const Int k = numerator(it.lo) >= 0
                              ? numerator(it.lo) / denominator(it.lo) + 1
                              : -((-numerator(it.lo)) / denominator(it.lo));
            if (Rational(k) > it.lo && Rational(k) <= it.hi) record(k);
            continue;
        }
        const Rational mid = non_root_split(q, it.lo, it.hi);
        const int vmid = sign_changes(chain, mid);
        stack.push_back({it.lo, mid, it.vlo, vmid});
        stack.push_back({mid, it.hi, vmid, it.vhi});
    }
    return best;
}

std::string to_string(const Polynomial& p, std::string_view var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational c = p.coeff(k);
        if (c == 0) continue;
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0 || mag != 1) {
            os << to_string(mag);
            if (k > 0) os << "*";
        }
        if (k > 0) {
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace primcoh
