#include "pinturan/bounds.hpp"

#include "pinturan/errors.hpp"

#include <array>
#include <cmath>
#include <numeric>

namespace pinturan {

namespace {

// psi(1 + x) = sum_{k >= 2} (-1)^k x^(k-2) / (k (k - 1))
constexpr int kSeriesTerms = 24;

double psi_series(double x) {
    double sum = 0.0;
    for (int k = kSeriesTerms + 1; k >= 2; --k) sum = sum * x + ((k % 2 == 0) ? 1.0 : -1.0) / (k * (k - 1.0));
    return sum;
}

} // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const auto g = std::gcd(num, den);
    return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

double psi(double d) {
    if (!std::isfinite(d) || d < 0.0) throw DomainError("psi is defined on [0, inf), got " + std::to_string(d));
    if (d == 0.0) return 1.0;
    if (d == 1.0) return 0.5;
    const double x = d - 1.0;
    if (std::abs(x) < kPsiSeriesRadius) return psi_series(x);
    return (d * std::log1p(x) - x) / (x * x);
}

std::int64_t mantel_slack(const Graph& p) {
    return static_cast<std::int64_t>(mantel_number(p.order())) - static_cast<std::int64_t>(p.edge_count()) -
           static_cast<std::int64_t>(count_cherries(p));
}

namespace {

std::int64_t checked_slack(const Graph& p) {
    if (p.order() < 2) throw DomainError("gamma needs n >= 2, got n = " + std::to_string(p.order()));
    const auto slack = mantel_slack(p);
    if (slack <= 0)
        throw PreconditionViolated("e(P) + N(S2,P) is not below floor(n^2/4) (deficit " + std::to_string(-slack) + ")",
                                   -slack);
    return slack;
}

} // namespace

double gamma(const Graph& p) {
    const auto slack = checked_slack(p);
    const double n = static_cast<double>(p.order());
    return n * (n - 2.0) / static_cast<double>(slack);
}

double psi_argument(const Graph& p) {
    const auto slack = checked_slack(p);
    const double e = static_cast<double>(p.edge_count());
    return 2.0 * e * static_cast<double>(p.order() - 2) / static_cast<double>(slack);
}

Rational upper_bound(const Graph& p, std::size_t alpha) {
    return Rational::make(static_cast<std::int64_t>(p.order() * alpha), 2);
}

double lower_bound(const Graph& p) {
    const auto arg = psi_argument(p);
    return static_cast<double>(mantel_slack(p)) * psi(arg);
}

void validate(const ConstraintParams& params) {
    if (!(params.beta1 > 0.0)) throw DomainError("beta1 must be positive");
    if (!(params.beta2 > 0.0 && params.beta2 < 0.25)) throw DomainError("beta2 must lie in (0, 1/4)");
}

namespace {

struct ConstraintSides {
    double alpha_limit;
    bool degree_side;
};

ConstraintSides constraint_sides(const Graph& p, const ConstraintParams& params) {
    validate(params);
    const auto n = static_cast<double>(p.order());
    if (p.order() == 0) throw DomainError("constrained graphs need d(P) > 1, got empty vertex set");
    const double d = 2.0 * static_cast<double>(p.edge_count()) / n;
    if (!(d > 1.0)) throw DomainError("constrained graphs need d(P) > 1, got " + std::to_string(d));
    const auto summary = degree_summary(p);
    const double lhs = static_cast<double>(p.edge_count()) * static_cast<double>(summary.max);
    return {params.beta1 * n * std::log(d) / d, lhs <= (0.25 - params.beta2) * n * n};
}

} // namespace

bool is_constrained(const Graph& p, const ConstraintParams& params, std::size_t alpha) {
    const auto sides = constraint_sides(p, params);
    return static_cast<double>(alpha) <= sides.alpha_limit && sides.degree_side;
}

bool check_constrained(const Graph& p, const ConstraintParams& params, std::uint64_t mis_budget) {
    const auto sides = constraint_sides(p, params);
    if (!sides.degree_side) return false;
    const auto mis = max_independent_set(p, mis_budget);
    if (static_cast<double>(mis.upper_bound) <= sides.alpha_limit) return true;
    if (static_cast<double>(mis.size) > sides.alpha_limit) return false;
    throw Error("independence number interval [" + std::to_string(mis.size) + ", " + std::to_string(mis.upper_bound) +
                "] straddles the constraint threshold");
}

BoundsReport compute_bounds(const Graph& p, std::uint64_t mis_budget) {
    if (const auto t = find_triangle(p)) throw NotTriangleFree(*t);
    BoundsReport r;
    r.n = p.order();
    r.e_p = p.edge_count();
    r.cherries = count_cherries(p);
    r.d_p = r.n == 0 ? Rational{0, 1} : Rational::make(static_cast<std::int64_t>(2 * r.e_p), static_cast<std::int64_t>(r.n));

    const auto mis = max_independent_set(p, mis_budget);
    r.alpha_lo = mis.size;
    r.alpha_hi = mis.upper_bound;
    r.alpha_exact = mis.exact;
    r.upper_bound = upper_bound(p, r.alpha_hi);

    const auto slack = mantel_slack(p);
    if (r.n >= 3 && slack > 0) {
        r.gamma = gamma(p);
        r.psi_arg = psi_argument(p);
        r.lower_bound = lower_bound(p);
        r.lower_bound_defined = true;
    } else {
        r.deficit = -slack;
    }
    return r;
}

} // namespace pinturan
