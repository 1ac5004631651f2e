#include "lch/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lch {

Laurent::Laurent(long c)
{
    if (c != 0)
        terms_.emplace_back(0, BigInt(c));
}

Laurent Laurent::monomial(BigInt c, int exponent)
{
    Laurent r;
    if (c != 0)
        r.terms_.emplace_back(exponent, std::move(c));
    return r;
}

bool Laurent::is_one() const
{
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

bool Laurent::is_unit() const
{
    return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
}

void Laurent::normalize()
{
    std::sort(terms_.begin(), terms_.end(),
              [](const Monomial& a, const Monomial& b) { return a.first < b.first; });
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (auto& m : terms_) {
        if (!out.empty() && out.back().first == m.first)
            out.back().second += m.second;
        else
            out.push_back(std::move(m));
        if (out.back().second == 0)
            out.pop_back();
    }
    terms_ = std::move(out);
}

Laurent Laurent::operator-() const
{
    Laurent r = *this;
    for (auto& m : r.terms_)
        m.second = -m.second;
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o)
{
    if (o.terms_.empty())
        return *this;
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    normalize();
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b)
{
    Laurent r;
    if (a.is_one())
        return b;
    if (b.is_one())
        return a;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.terms_.emplace_back(ea + eb, ca * cb);
    r.normalize();
    return r;
}

Laurent Laurent::substitute_t(int sign, int exponent_sign) const
{
    Laurent r;
    for (const auto& [e, c] : terms_) {
        BigInt v = c;
        if (sign < 0 && (e % 2 != 0))
            v = -v;
        r.terms_.emplace_back(e * exponent_sign, std::move(v));
    }
    r.normalize();
    return r;
}

bool Laurent::mod2_at_one() const
{
    BigInt sum = 0;
    for (const auto& m : terms_)
        sum += m.second;
    return (sum % 2) != 0;
}

std::string Laurent::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // Highest power first reads like the usual notation.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1)
            os << mag << '*';
        os << 't';
        if (e != 1)
            os << '^' << e;
    }
    return os.str();
}

}  // namespace lch
