#include "copwin/symbolic.hpp"

#include "copwin/errors.hpp"

namespace copwin {

Ordinal eta_of_S(const Ordinal& alpha) {
    if (alpha.is_zero()) throw domain_error("S family index must be >= 1");
    if (alpha.is_limit()) return alpha;
    auto parts = split(alpha);
    // alpha = limit + k with k >= 1, i.e. the successor of limit + (k-1).
    return add(parts.limit_part, Ordinal(parts.finite_part - 1));
}

Ordinal rho_of_S(const Ordinal& alpha) {
    if (alpha.is_zero()) throw domain_error("S family index must be >= 1");
    if (alpha.is_finite()) {
        std::uint64_t n = alpha.finite_value() - 1;  // alpha = n + 1
        return n == 0 ? Ordinal(0) : Ordinal(2 * n - 1);
    }
    return add(eta_of_S(alpha), Ordinal::omega());
}

FamilyReport s_report(const Ordinal& alpha) {
    return FamilyReport{eta_of_S(alpha), rho_of_S(alpha), "contains the root"};
}

FamilyReport tomega_report() {
    return FamilyReport{Ordinal::omega(), Ordinal::omega(2), "r and all vertices x{i}.1"};
}

Ordinal eta_tomega_root() { return Ordinal::omega(); }

Ordinal eta_tomega_vertex(std::uint64_t i, std::uint64_t j) {
    if (j < 1 || j > i) throw domain_error("tomega vertex requires 0 < j <= i");
    return add(Ordinal::omega(), Ordinal(j - 1));
}

Ordinal rho_polat_generalized(std::uint64_t i, std::uint64_t j) {
    if (i < 1 || j < 1) throw domain_error("polat family requires i >= 1 and j >= 1");
    if (j == 1) return add(Ordinal::omega(), Ordinal(i));
    return add(Ordinal::omega(j), Ordinal(i + j));
}

FamilyReport polat_report(std::uint64_t i, std::uint64_t j) {
    FamilyReport report;
    report.rho = rho_polat_generalized(i, j);
    if (i == 1 && j == 1) {
        report.eta = Ordinal::omega();
        report.theta_description = "all x{m} and z";
    }
    return report;
}

Ordinal tree_rho_from_eta(const Ordinal& eta, bool finite_radius,
                          std::optional<std::int64_t> diameter_if_finite) {
    if (finite_radius) {
        if (!eta.is_finite()) throw domain_error("finite radius requires finite eta");
        if (!diameter_if_finite)
            throw domain_error("finite radius requires the diameter");
        if (*diameter_if_finite < 0) throw domain_error("diameter must be non-negative");
        return Ordinal(static_cast<std::uint64_t>(*diameter_if_finite));
    }
    if (eta.is_finite()) throw domain_error("infinite radius requires infinite eta");
    return add(eta, Ordinal::omega());
}

bool in_lambda_T(const Ordinal& a) {
    if (a.is_finite()) return true;
    // alpha + w for limit alpha: no finite part, trailing exponent exactly
    // one, and at least w*2 (the limit summand cannot be 0).
    if (split(a).finite_part != 0) return false;
    if (!(a.terms().back().exponent == Ordinal(1))) return false;
    return a >= Ordinal::omega(2);
}

bool in_upsilon(const Ordinal& a) {
    if (a.is_finite()) return true;
    if (in_lambda_T(a)) return true;
    // w*i + k with finite i >= 1 and finite k >= i.
    const auto& terms = a.terms();
    if (terms.size() > 2) return false;
    if (!(terms.front().exponent == Ordinal(1))) return false;
    std::uint64_t i = terms.front().coefficient;
    std::uint64_t k = 0;
    if (terms.size() == 2) {
        if (!terms.back().exponent.is_zero()) return false;
        k = terms.back().coefficient;
    }
    return k >= i;
}

}  // namespace copwin
