// Copyright 2026 The ceqec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ceqec {
namespace analytics {

struct MemoryCurvePoint {
    double steps = 0.0;     // T
    double eps_base = 0.0;  // unprotected failure probability
    double eps = 0.0;       // eight-qubit-code failure probability
    double bound = 0.0;     // 28 eps_base^2
};

struct CrossoverReport {
    double t_star_bound = 0.0; // closed form log(27/28)/log(1-delta)
    double t_star_exact = 0.0; // eps(T) = eps_base(T) with the exact binomial
    double eps_at_exact = 0.0; // shared failure probability at the crossing
};

struct TwirledRate {
    double q = 0.0;       // exact, Eq. (1-q)^n = (1-l) cos^2n t + l (1-p)^n
    double q_upper = 0.0; // (1-l) sin^2 t + l p
};

struct OverheadBracket {
    long long t_floor = 0;
    long long t_ceil = 0;
    long long t = 0; // smallest feasible integer
};

struct OverheadPoint {
    double lambda = 0.0;
    double q = 0.0;
    double q_upper = 0.0;
    double t_generic = 0.0; // NaN marks a threshold violation
    double t_ce = 0.0;
};

class ThresholdViolation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// eps_base after T steps of per-step damping delta: 1 - (1-delta)^T,
/// evaluated in log space so tiny delta*T stays accurate.
inline double eps_base_of(double delta, double steps) {
    if (delta < 0.0 || delta >= 1.0 || steps < 0.0) {
        throw std::invalid_argument("eps_base_of: need 0 <= delta < 1 and T >= 0");
    }
    return -std::expm1(steps * std::log1p(-delta));
}

/// Failure probability of the eight-qubit code when at least two of the
/// eight damping channels err: the upper binomial tail, summed term by term
/// to avoid the catastrophic cancellation of 1 - P0 - P1.
inline double eps_exact(double eps_base) {
    if (eps_base < 0.0 || eps_base > 1.0) {
        throw std::invalid_argument("eps_exact: eps_base outside [0,1]");
    }
    static const double kChoose8[9] = {1, 8, 28, 56, 70, 56, 28, 8, 1};
    const double x = eps_base;
    const double y = 1.0 - x;
    double acc = 0.0;
    for (int k = 8; k >= 2; --k) {
        acc += kChoose8[k] * std::pow(x, k) * std::pow(y, 8 - k);
    }
    return acc;
}

inline MemoryCurvePoint memory_failure(double delta, double steps) {
    MemoryCurvePoint p;
    p.steps = steps;
    p.eps_base = eps_base_of(delta, steps);
    p.eps = eps_exact(p.eps_base);
    p.bound = 28.0 * p.eps_base * p.eps_base;
    return p;
}

/// T with eps_base(T) = target.
inline double timesteps_for_eps_base(double delta, double target) {
    if (target <= 0.0 || target >= 1.0) {
        throw std::invalid_argument("timesteps_for_eps_base: target outside (0,1)");
    }
    return std::log1p(-target) / std::log1p(-delta);
}

/// T with 28 eps_base(T)^2 = target (the conservative bound-based inversion).
inline double timesteps_for_bound(double delta, double target) {
    return timesteps_for_eps_base(delta, std::sqrt(target / 28.0));
}

/// T with eps(T) = target using the exact binomial, by bisection in eps_base.
inline double timesteps_for_eps_exact(double delta, double target) {
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (eps_exact(mid) < target ? lo : hi) = mid;
    }
    return timesteps_for_eps_base(delta, 0.5 * (lo + hi));
}

inline CrossoverReport memory_crossover(double delta) {
    if (delta <= 0.0 || delta >= 1.0) {
        throw std::invalid_argument("memory_crossover: delta outside (0,1)");
    }
    CrossoverReport rep;
    rep.t_star_bound = std::log(27.0 / 28.0) / std::log1p(-delta);
    // eps(T) = eps_base(T) recast in eps_base: the unique root of
    // eps_exact(x) = x on (0, 1/2).
    double lo = 1e-12;
    double hi = 0.5;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (eps_exact(mid) < mid ? lo : hi) = mid;
    }
    rep.eps_at_exact = 0.5 * (lo + hi);
    rep.t_star_exact = timesteps_for_eps_base(delta, rep.eps_at_exact);
    return rep;
}

/// Depolarizing rate of the Clifford-twirled mixed channel, with its
/// concavity upper bound. Equality holds at n = 1.
inline TwirledRate twirled_q(double lambda, double p, double theta, int n) {
    if (lambda < 0.0 || lambda > 1.0 || p < 0.0 || p > 1.0 || n < 1) {
        throw std::invalid_argument("twirled_q: parameters out of range");
    }
    const double c2 = std::cos(theta) * std::cos(theta);
    const double s2 = std::sin(theta) * std::sin(theta);
    const double no_error =
        (1.0 - lambda) * std::pow(c2, n) + lambda * std::pow(1.0 - p, n);
    TwirledRate r;
    r.q = 1.0 - std::pow(no_error, 1.0 / n);
    r.q_upper = (1.0 - lambda) * s2 + lambda * p;
    if (r.q > r.q_upper + 1e-12) {
        throw std::logic_error("twirled_q: sandwich bound violated");
    }
    return r;
}

/// Logical failure of the t-error generic code family at rate q:
/// F_t q^(t+1) with F_t = q_th^(-t), i.e. q (q/q_th)^t.
inline double generic_logical_failure(double q, double q_th, long long t) {
    return q * std::pow(q / q_th, static_cast<double>(t));
}

/// Smallest t with F_t q^(t+1) <= p_fail, plus the floor/ceil bracket of
/// c / log(q_th/q) where c = log(q/p_fail).
inline OverheadBracket overhead_generic(double q, double q_th, double p_fail) {
    if (!(q > 0.0) || !(q < q_th)) {
        throw ThresholdViolation("overhead_generic: need 0 < q < q_th");
    }
    if (!(p_fail > 0.0) || !(p_fail <= q)) {
        throw std::invalid_argument("overhead_generic: need 0 < p_fail <= q");
    }
    const double c = std::log(q / p_fail);
    const double x = c / std::log(q_th / q);
    OverheadBracket out;
    out.t_floor = static_cast<long long>(std::floor(x));
    out.t_ceil = static_cast<long long>(std::ceil(x));
    long long t = std::max(out.t_floor, 0LL);
    while (generic_logical_failure(q, q_th, t) > p_fail) {
        ++t;
    }
    while (t > 0 && generic_logical_failure(q, q_th, t - 1) <= p_fail) {
        --t;
    }
    out.t = t;
    return out;
}

/// Logical failure of the t-error constant-excitation family against the
/// mixed channel: eta_t = lambda (1-(1-p)^2) (p/p_th)^t.
inline double ce_logical_failure(double lambda, double p, double p_th, long long t) {
    return lambda * (1.0 - (1.0 - p) * (1.0 - p)) * std::pow(p / p_th, static_cast<double>(t));
}

/// Smallest non-negative t with eta_t <= p_fail; zero when the dual-rail
/// code alone already suffices.
inline long long overhead_ce(double lambda, double p, double p_th, double p_fail) {
    if (!(p > 0.0) || !(p < p_th)) {
        throw ThresholdViolation("overhead_ce: need 0 < p < p_th");
    }
    if (lambda < 0.0 || lambda > 1.0) {
        throw std::invalid_argument("overhead_ce: lambda outside [0,1]");
    }
    if (!(p_fail > 0.0) || !(p_fail < p)) {
        throw std::invalid_argument("overhead_ce: need 0 < p_fail < p");
    }
    if (lambda == 0.0) {
        return 0;
    }
    const double c_prime = std::log(p / p_fail);
    const double x =
        (c_prime + std::log(lambda) + std::log(2.0 - p)) / std::log(p_th / p);
    long long t = (x > 0.0) ? static_cast<long long>(std::ceil(x)) : 0;
    while (ce_logical_failure(lambda, p, p_th, t) > p_fail) {
        ++t;
    }
    while (t > 0 && ce_logical_failure(lambda, p, p_th, t - 1) <= p_fail) {
        --t;
    }
    return t;
}

struct OverheadCurveParams {
    double p = 0.0005;
    double theta = 0.0;     // coherent angle; sin^2(theta) is the dephasing rate
    double q_th = 0.01;
    double p_th = 0.005;
    double p_fail = 1e-12;
    int exact_q_n = 0;      // 0: use the n-free upper bound as the generic rate
    double t_cap = std::numeric_limits<double>::infinity();
};

/// One overhead point per lambda. Threshold violations are marked with NaN
/// in the affected column rather than aborting the curve.
inline std::vector<OverheadPoint> overhead_curve(const std::vector<double> &lambdas,
                                                 const OverheadCurveParams &prm) {
    std::vector<OverheadPoint> out;
    out.reserve(lambdas.size());
    for (double lambda : lambdas) {
        OverheadPoint pt;
        pt.lambda = lambda;
        const TwirledRate r = twirled_q(lambda, prm.p, prm.theta,
                                        prm.exact_q_n > 0 ? prm.exact_q_n : 1);
        pt.q = r.q;
        pt.q_upper = r.q_upper;
        const double q_used = prm.exact_q_n > 0 ? r.q : r.q_upper;
        try {
            double t = static_cast<double>(overhead_generic(q_used, prm.q_th, prm.p_fail).t);
            pt.t_generic = std::min(t, prm.t_cap);
        } catch (const ThresholdViolation &) {
            pt.t_generic = std::numeric_limits<double>::quiet_NaN();
        }
        try {
            pt.t_ce = static_cast<double>(overhead_ce(lambda, prm.p, prm.p_th, prm.p_fail));
        } catch (const ThresholdViolation &) {
            pt.t_ce = std::numeric_limits<double>::quiet_NaN();
        }
        out.push_back(pt);
    }
    return out;
}

/// Locale-independent formatting: '.' decimal point, 17 significant digits.
inline std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void write_memory_curve_csv(std::ostream &os, double delta, long long t_max) {
    os << "T,eps_base,eps,bound\n";
    for (long long t = 0; t <= t_max; ++t) {
        const MemoryCurvePoint p = memory_failure(delta, static_cast<double>(t));
        os << t << ',' << csv_number(p.eps_base) << ',' << csv_number(p.eps) << ','
           << csv_number(p.bound) << '\n';
    }
}

inline void write_overhead_curve_csv(std::ostream &os,
                                     const std::vector<OverheadPoint> &points) {
    os << "lambda,q,q_upper,t_generic,t_ce\n";
    for (const auto &pt : points) {
        os << csv_number(pt.lambda) << ',' << csv_number(pt.q) << ','
           << csv_number(pt.q_upper) << ',' << csv_number(pt.t_generic) << ','
           << csv_number(pt.t_ce) << '\n';
    }
}

} // namespace analytics
} // namespace ceqec
