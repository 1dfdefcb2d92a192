#include "gaugework/abelianize/abelian_set.hpp"
#include "gaugework/abelianize/so4_parts.hpp"

namespace gaugework::abelianize {

namespace {

using expr::indexed;
using expr::Monomial;

RationalFunction sym(std::string_view name) { return RationalFunction::symbol(Symbol(name)); }
RationalFunction q(int i) { return RationalFunction::symbol(indexed("q", i)); }
RationalFunction p(int i) { return RationalFunction::symbol(indexed("p", i)); }
RationalFunction L(int i) { return RationalFunction::symbol(indexed("L", i)); }

// Coefficient of eps^k in a polynomial.
RationalFunction eps_coefficient(const RationalFunction& f, std::uint32_t k) {
    Symbol eps("eps");
    if (!f.is_polynomial()) throw std::logic_error("eps expansion of a non-polynomial");
    auto parts = f.numerator().coefficients_over({eps});
    Monomial key = k == 0 ? Monomial() : Monomial::of(eps, k);
    auto it = parts.find(key);
    return it == parts.end() ? RationalFunction() : RationalFunction(it->second);
}

}  // namespace

LimitReport epsilon_limit_check() {
    LimitReport report;
    auto add = [&](std::string name, RationalFunction residual) { report.checks.push_back({std::move(name), std::move(residual)}); };

    RationalFunction d = q(1) * q(1) - q(4) * q(4);
    // C3, C6: cleared forms of the solved p3 and p6 constraints. K is their
    // common eps^0 factor at q1 = q4, M the eps^1 part of C3 + C6, S3 and S6
    // the boundary relations for p3 and p6.
    RationalFunction c3 = d * p(3) - (q(3) * q(1) - q(4) * q(6)) * p(1) - (q(6) * q(1) - q(4) * q(3)) * p(4) +
                          (q(1) * L(2) + q(4) * L(5));
    RationalFunction c6 = d * p(6) - (q(6) * q(1) - q(4) * q(3)) * p(1) - (q(3) * q(1) - q(4) * q(6)) * p(4) -
                          (q(1) * L(5) + q(4) * L(2));
    std::vector<RationalFunction> ls;
    for (int i = 1; i <= 6; ++i) ls.push_back(L(i));
    So4Parts parts = so4_parts(ls);
    add("cleared psi3 = D psi3", c3 - d * parts.psi3);
    add("cleared psi6 = D psi6", c6 - d * parts.psi6);

    RationalFunction eps = sym("eps");
    RationalFunction k = (q(3) - q(6)) * p(1) + (q(6) - q(3)) * p(4) - (L(2) + L(5));

    // q1 = q4 + eps
    {
        expr::Bindings shift{{indexed("q", 1), q(4) + eps}};
        RationalFunction c3s = c3.substitute(shift);
        RationalFunction c6s = c6.substitute(shift);
        RationalFunction q1s = q(4) + eps;
        RationalFunction first_order3 = RationalFunction(2) * eps * q1s * p(3) -
                                        ((q(3) * q1s - q(4) * q(6)) * p(1) + (q(6) * q1s - q(4) * q(3)) * p(4) -
                                         (q1s * L(2) + q(4) * L(5)));
        RationalFunction first_order6 = RationalFunction(2) * eps * q1s * p(6) -
                                        ((q(6) * q1s - q(4) * q(3)) * p(1) + (q(3) * q1s - q(4) * q(6)) * p(4) +
                                         (q1s * L(5) + q(4) * L(2)));
        add("C3 agrees to first order [eps^0]", eps_coefficient(c3s - first_order3, 0));
        add("C3 agrees to first order [eps^1]", eps_coefficient(c3s - first_order3, 1));
        add("C6 agrees to first order [eps^0]", eps_coefficient(c6s - first_order6, 0));
        add("C6 agrees to first order [eps^1]", eps_coefficient(c6s - first_order6, 1));
        add("eps^0 of C3 = -q4 * K", eps_coefficient(c3s, 0) + q(4) * k);
        add("eps^0 of C6 = q4 * K", eps_coefficient(c6s, 0) - q(4) * k);
        RationalFunction sum = c3s + c6s;
        add("C3 + C6 divisible by eps", eps_coefficient(sum, 0));
        RationalFunction a = eps_coefficient(sum, 1);
        RationalFunction m = RationalFunction(2) * q(4) * (p(3) + p(6)) -
                                ((q(3) + q(6)) * p(1) + (q(6) + q(3)) * p(4) - (L(2) - L(5)));
        add("(C3 + C6)/eps at eps=0 = M", a - m);
        RationalFunction s3 = q(4) * (p(3) + p(6)) - (q(3) * p(1) + q(6) * p(4) - L(2));
        RationalFunction s6 = q(4) * (p(6) + p(3)) - (q(6) * p(1) + q(3) * p(4) + L(5));
        add("M = 2 S3 + K", a - RationalFunction(2) * s3 - k);
        add("M = 2 S6 - K", a - RationalFunction(2) * s6 + k);
    }

    // q1 = -q4 + eps
    {
        expr::Bindings shift{{indexed("q", 1), -q(4) + eps}};
        RationalFunction c3s = c3.substitute(shift);
        RationalFunction c6s = c6.substitute(shift);
        RationalFunction km = (q(3) + q(6)) * (p(1) + p(4)) - (L(2) - L(5));
        add("mirror: eps^0 of C3 = q4 * K'", eps_coefficient(c3s, 0) - q(4) * km);
        add("mirror: eps^0 of C6 = q4 * K'", eps_coefficient(c6s, 0) - q(4) * km);
        RationalFunction diff = c3s - c6s;
        add("mirror: C3 - C6 divisible by eps", eps_coefficient(diff, 0));
        RationalFunction a = eps_coefficient(diff, 1);
        // Boundary relations for p3 and p6 at q1 = -q4.
        RationalFunction s3m = -q(4) * (p(3) - p(6)) - (q(3) * p(1) + q(6) * p(4) - L(2));
        RationalFunction s6m = -q(4) * (p(6) - p(3)) - (q(6) * p(1) + q(3) * p(4) + L(5));
        add("mirror: (C3 - C6)/eps = 2 S3' + K'", a - RationalFunction(2) * s3m - km);
        add("mirror: (C3 - C6)/eps = -2 S6' - K'", a + RationalFunction(2) * s6m + km);
    }
    return report;
}

}  // namespace gaugework::abelianize
