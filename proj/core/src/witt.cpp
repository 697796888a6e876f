#include "jetcoh/witt.hpp"

#include "jetcoh/error.hpp"
#include "jetcoh/linear_system.hpp"

#include <sstream>

namespace jetcoh {

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) c_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(int s, const Rational& c) {
    LaurentPoly p;
    if (c != 0) p.c_.emplace(s, c);
    return p;
}

Rational LaurentPoly::operator[](int s) const {
    auto it = c_.find(s);
    return it == c_.end() ? Rational(0) : it->second;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly out;
    for (const auto& [s, a] : c_)
        if (s != 0) out.c_.emplace(s - 1, a * s);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [s, a] : o.c_) {
        Rational& slot = c_[s];
        slot += a;
        if (slot == 0) c_.erase(s);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [s, a] : o.c_) {
        Rational& slot = c_[s];
        slot -= a;
        if (slot == 0) c_.erase(s);
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [s, x] : a.c_)
        for (const auto& [t, y] : b.c_) {
            Rational& slot = out.c_[s + t];
            slot += x * y;
            if (slot == 0) out.c_.erase(s + t);
        }
    return out;
}

LaurentPoly operator*(const Rational& k, const LaurentPoly& a) {
    LaurentPoly out;
    if (k == 0) return out;
    for (const auto& [s, x] : a.c_) out.c_.emplace(s, k * x);
    return out;
}

std::string LaurentPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [s, a] = *it;
        Rational mag = abs(a);
        if (first) os << (a < 0 ? "-" : "");
        else os << (a < 0 ? " - " : " + ");
        first = false;
        if (s == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << "z";
        if (s != 1) os << "^" << s;
    }
    return os.str();
}

std::string LaurentDensity::to_string() const {
    return "(" + coeff.to_string() + ")*dz^" + std::to_string(weight);
}

WittField WittField::basis(int m) { return WittField{LaurentPoly::monomial(m + 1)}; }

LaurentDensity laurent_action(const WittField& fld, const LaurentDensity& a) {
    return laurent_action(fld, a, Rational(a.weight));
}

LaurentDensity laurent_action(const WittField& fld, const LaurentDensity& a, const Rational& lambda) {
    return LaurentDensity{fld.coeff * a.coeff.derivative() + lambda * (fld.coeff.derivative() * a.coeff), a.weight};
}

WittField witt_bracket(const WittField& x, const WittField& y) {
    return WittField{x.coeff * y.coeff.derivative() - x.coeff.derivative() * y.coeff};
}

LaurentDensity evaluate_cochain(const Cochain2& c, const WittField& x, const WittField& y,
                                const std::optional<Rational>& lambda) {
    if (c.coeff.contains(Family::h) || c.coeff.contains(Family::hinv) || c.coeff.contains(Family::k))
        throw InvalidArgument("cochain has jets with no value on the punctured plane");
    Rational lam(0);
    if (c.coeff.lambda_degree() > 0) {
        if (lambda) lam = *lambda;
        else if (c.module_lambda.is_constant()) lam = c.module_lambda.constant();
        else throw InvalidArgument("cochain coefficients depend on lambda; a value is required");
    }
    std::vector<LaurentPoly> fx{x.coeff}, gy{y.coeff}, om{LaurentPoly::monomial(-1)};
    auto nth = [](std::vector<LaurentPoly>& seq, int n) -> const LaurentPoly& {
        while (static_cast<int>(seq.size()) <= n) seq.push_back(seq.back().derivative());
        return seq[static_cast<std::size_t>(n)];
    };
    LaurentPoly v = evaluate<LaurentPoly>(
        c.coeff,
        [&](JetSymbol s) -> LaurentPoly {
            switch (s.family) {
            case Family::f: return nth(fx, s.order);
            case Family::g: return nth(gy, s.order);
            case Family::w: return nth(om, s.order);
            default: return LaurentPoly();  // T = R = 0 in the global coordinate
            }
        },
        lam);
    return LaurentDensity{std::move(v), c.value_weight};
}

LaurentDensity evaluate_cochain(const Cochain2& c, int m, int n, const std::optional<Rational>& lambda) {
    return evaluate_cochain(c, WittField::basis(m), WittField::basis(n), lambda);
}

Rational residue_pair(const LaurentDensity& a, int cycle_index) {
    if (a.weight != 1) throw InvalidArgument("residue pairing needs a 1-form, got weight " + std::to_string(a.weight));
    switch (cycle_index) {
    case 0: return a.coeff[-1];
    case 1: return -a.coeff[-1];
    default: throw InvalidArgument("the punctured plane has cycles 0 and 1 only");
    }
}

Rational kn_value(int m, int n) {
    static const Cochain2 integrand{make_rational(1, 2) * det_expr(0, 3), 1, Coefficient(Rational(0))};
    return residue_pair(evaluate_cochain(integrand, m, n));
}

namespace {

// Value of c(L_m, L_n) as (coefficient, degree); degree is meaningless when the
// coefficient is zero.
struct GradedValue {
    Rational a;
    int degree = 0;
};

}  // namespace

Certificate nontriviality_certificate(const std::function<LaurentDensity(int, int)>& values, int weight,
                                      const std::optional<Rational>& lambda, int window, CertificateModule module) {
    if (window < 1) throw InvalidArgument("window must be positive");
    if (module == CertificateModule::density && !lambda)
        throw InvalidArgument("density-valued certificate needs a value of lambda");
    const int W = window;

    // collect values and detect the degree shift
    std::map<std::pair<int, int>, GradedValue> table;
    std::optional<int> shift;
    for (int m = -W; m <= W; ++m)
        for (int n = m + 1; n <= W; ++n) {
            if (std::abs(m + n) > W) continue;
            const LaurentDensity v = values(m, n);
            GradedValue g;
            if (module == CertificateModule::residue) {
                g.a = residue_pair(v);
                g.degree = 0;
                if (g.a != 0) {
                    const int d = -(m + n);
                    if (shift && *shift != d) throw InvalidArgument("cochain is not graded on the window");
                    shift = d;
                }
            } else {
                if (v.coeff.coeffs().size() > 1) throw InvalidArgument("cochain is not graded on the window");
                if (!v.coeff.is_zero()) {
                    const auto& [s, a] = *v.coeff.coeffs().begin();
                    const int d = s - (m + n);
                    if (shift && *shift != d) throw InvalidArgument("cochain is not graded on the window");
                    shift = d;
                    g.a = a;
                }
            }
            table.emplace(std::make_pair(m, n), std::move(g));
        }

    Certificate cert;
    cert.degree_shift = shift.value_or(module == CertificateModule::residue ? 0 : -weight);
    const int d = cert.degree_shift;
    const Rational lam = lambda.value_or(Rational(0));

    // unknown β_k, |k| <= W, at column k + W
    SparseLinearSystem sys(static_cast<std::size_t>(2 * W + 1));
    auto col = [&](int k) { return static_cast<std::size_t>(k + W); };
    for (const auto& [mn, g] : table) {
        const auto [m, n] = mn;
        std::vector<SparseLinearSystem::Entry> row;
        if (module == CertificateModule::residue) {
            // trivial action: δb(L_m, L_n) = -b([L_m, L_n]), b(L_k) a constant
            row.emplace_back(col(m + n), Rational(-(n - m)));
        } else {
            row.emplace_back(col(n), Rational(n + d) + lam * (m + 1));
            row.emplace_back(col(m), -(Rational(m + d) + lam * (n + 1)));
            row.emplace_back(col(m + n), Rational(-(n - m)));
        }
        sys.add_equation(std::move(row), g.a);
    }
    cert.unknowns = sys.unknowns();
    cert.equations = sys.equations();
    cert.nontrivial = sys.inconsistent();
    std::ostringstream os;
    os << "window " << W << ", degree shift " << d << ", " << cert.unknowns << " unknowns, " << cert.equations
       << " equations, rank " << sys.rank() << (cert.nontrivial ? ", infeasible" : ", feasible");
    cert.detail = os.str();
    return cert;
}

Certificate nontriviality_certificate(const Cochain2& c, const std::optional<Rational>& lambda, int window,
                                      CertificateModule module) {
    std::optional<Rational> lam = lambda;
    if (!lam && c.module_lambda.is_constant()) lam = c.module_lambda.constant();
    if (module == CertificateModule::residue) lam.reset();
    return nontriviality_certificate([&](int m, int n) { return evaluate_cochain(c, m, n, lam); }, c.value_weight,
                                     lam, window, module);
}

}  // namespace jetcoh
