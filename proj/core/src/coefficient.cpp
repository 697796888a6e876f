#include "jetcoh/coefficient.hpp"

#include "jetcoh/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace jetcoh {

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw InvalidArgument("empty rational literal");
    Rational r;
    if (r.set_str(std::string(text), 10) != 0) throw InvalidArgument("bad rational literal '" + std::string(text) + "'");
    if (r.get_den() == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

Coefficient::Coefficient(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

Coefficient Coefficient::lambda() { return from_coeffs({Rational(0), Rational(1)}); }

Coefficient Coefficient::from_coeffs(std::vector<Rational> coeffs) {
    Coefficient c;
    c.coeffs_ = std::move(coeffs);
    c.trim();
    return c;
}

void Coefficient::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Coefficient::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Coefficient::constant() const {
    if (!is_constant()) throw InvalidArgument("coefficient depends on lambda: " + to_string());
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Rational Coefficient::evaluate(const Rational& lam) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lam + *it;
    return acc;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    if (o.coeffs_.size() == 1) {
        for (auto& c : coeffs_) c *= o.coeffs_[0];
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Coefficient Coefficient::operator-() const {
    Coefficient r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

void Coefficient::divmod(const Coefficient& a, const Coefficient& b, Coefficient& q, Coefficient& r) {
    if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quot;
    const int db = b.degree();
    if (a.degree() >= db) quot.assign(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
    const Rational& lead = b.coeffs_.back();
    for (int d = a.degree(); d >= db; --d) {
        Rational c = rem[static_cast<std::size_t>(d)] / lead;
        quot[static_cast<std::size_t>(d - db)] = c;
        if (c == 0) continue;
        for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(d - db + i)] -= c * b.coeffs_[static_cast<std::size_t>(i)];
    }
    q = from_coeffs(std::move(quot));
    r = from_coeffs(std::move(rem));
}

Coefficient Coefficient::gcd(const Coefficient& a, const Coefficient& b) {
    Coefficient x = a, y = b;
    while (!y.is_zero()) {
        Coefficient q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    if (!x.is_zero()) {
        Rational lead = x.coeffs_.back();
        for (auto& c : x.coeffs_) c /= lead;
    }
    return x;
}

std::vector<Rational> Coefficient::rational_roots() const {
    std::set<Rational> roots;
    if (degree() < 1) return {};
    // Clear denominators, strip the λ^k factor, then apply the rational root test.
    mpz_class lcm = 1;
    for (const auto& c : coeffs_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : coeffs_) ints.push_back(mpz_class(c * lcm));
    std::size_t shift = 0;
    while (shift < ints.size() && ints[shift] == 0) ++shift;
    if (shift > 0) roots.insert(Rational(0));
    std::vector<mpz_class> p(ints.begin() + static_cast<long>(shift), ints.end());
    if (p.size() >= 2) {
        auto divisors = [](mpz_class n) {
            std::vector<mpz_class> ds;
            n = abs(n);
            for (mpz_class d = 1; d * d <= n; ++d) {
                if (n % d == 0) {
                    ds.push_back(d);
                    if (d * d != n) ds.push_back(n / d);
                }
            }
            return ds;
        };
        auto ps = divisors(p.front());
        auto qs = divisors(p.back());
        for (const auto& num : ps)
            for (const auto& den : qs)
                for (int sign : {1, -1}) {
                    Rational cand(sign * num, den);
                    cand.canonicalize();
                    Rational acc(0);
                    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * cand + Rational(*it);
                    if (acc == 0) roots.insert(cand);
                }
    }
    return {roots.begin(), roots.end()};
}

std::string Coefficient::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << "lam";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

}  // namespace jetcoh
