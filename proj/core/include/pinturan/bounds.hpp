#pragma once

#include "pinturan/graph.hpp"
#include "pinturan/mis.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace pinturan {

/// Non-negative fraction in lowest terms.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
    bool operator==(const Rational&) const = default;
};

/// psi(d) = (d ln d - d + 1) / (d - 1)^2 with psi(0) = 1 and psi(1) = 1/2.
/// Near d = 1 the value is taken from its Taylor series in d - 1.
double psi(double d);

/// Radius in |d - 1| below which psi switches to the series.
inline constexpr double kPsiSeriesRadius = 0.1;

/// floor(n^2/4) - e(P) - N(S2, P); negative when the lower bound is undefined.
std::int64_t mantel_slack(const Graph& p);

/// n(n-2) / (floor(n^2/4) - e(P) - N(S2, P)). Throws DomainError for n < 2 and
/// PreconditionViolated when e(P) + N(S2, P) >= floor(n^2/4).
double gamma(const Graph& p);

/// gamma(P) * d(P), evaluated as 2 e(P)(n-2) / slack to stay exact at e(P) = 0.
double psi_argument(const Graph& p);

/// n * alpha / 2. Valid for any alpha >= alpha(P).
Rational upper_bound(const Graph& p, std::size_t alpha);

/// slack * psi(gamma(P) d(P)); same preconditions as gamma().
double lower_bound(const Graph& p);

struct ConstraintParams {
    double beta1 = 1.0;
    double beta2 = 0.1;
};

void validate(const ConstraintParams& params);

/// alpha(P) <= beta1 n ln d / d and e(P) Delta(P) <= (1/4 - beta2) n^2 with alpha supplied exactly.
/// Requires d(P) > 1.
bool is_constrained(const Graph& p, const ConstraintParams& params, std::size_t alpha);
/// Same, computing alpha with the exact solver. Throws Error if the budget leaves the answer undecided.
bool check_constrained(const Graph& p, const ConstraintParams& params, std::uint64_t mis_budget);

struct BoundsReport {
    std::size_t n = 0;
    std::uint64_t e_p = 0;
    std::uint64_t cherries = 0;
    std::size_t alpha_lo = 0;
    std::size_t alpha_hi = 0;
    bool alpha_exact = false;
    Rational d_p;
    std::optional<double> gamma;
    std::optional<double> psi_arg;
    /// n * alpha_hi / 2.
    Rational upper_bound;
    std::optional<double> lower_bound;
    bool lower_bound_defined = false;
    /// e + N - floor(n^2/4) when the lower bound is undefined.
    std::int64_t deficit = 0;
};

/// All bound quantities for a triangle-free P. Throws NotTriangleFree otherwise.
BoundsReport compute_bounds(const Graph& p, std::uint64_t mis_budget = kDefaultMisBudget);

} // namespace pinturan
