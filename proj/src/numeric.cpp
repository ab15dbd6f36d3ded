#include "curvezeta/numeric.hpp"

#include "curvezeta/errors.hpp"

#include <cctype>

namespace curvezeta {

std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

Rational rational_from_string(const std::string& text) {
    auto fail = [&]() -> Rational {
        throw InputError("malformed rational: '" + text + "'");
    };
    if (text.empty())
        return fail();
    auto is_int = [](const std::string& t) {
        if (t.empty())
            return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size())
            return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                return false;
        return true;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text))
            return fail();
        return Rational(Int(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        return fail();
    Int d(den);
    if (d == 0)
        return fail();
    return Rational(Int(num), d);
}

bool integer_nth_root(const Int& a, int n, Int& root) {
    if (n < 1)
        return false;
    if (n == 1) {
        root = a;
        return true;
    }
    if (a < 0) {
        if (n % 2 == 0)
            return false;
        Int r;
        if (!integer_nth_root(-a, n, r))
            return false;
        root = -r;
        return true;
    }
    if (a == 0 || a == 1) {
        root = a;
        return true;
    }
    // Binary search on [1, 2^(bits/n + 1)].
    Int lo = 1;
    Int hi = Int(1) << (msb(a) / n + 1);
    while (lo <= hi) {
        Int mid = (lo + hi) / 2;
        Int p = pow(mid, static_cast<unsigned>(n));
        if (p == a) {
            root = mid;
            return true;
        }
        if (p < a)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return false;
}

bool rational_nth_root(const Rational& a, int n, Rational& root) {
    Int rn, rd;
    if (!integer_nth_root(numerator(a), n, rn))
        return false;
    if (!integer_nth_root(denominator(a), n, rd))
        return false;
    root = Rational(rn, rd);
    return true;
}

} // namespace curvezeta
