#include <algorithm>
#include <cmath>
#include <string>

#include "apsp/apsp.hpp"
#include "descent.hpp"

namespace apsp {

namespace {

std::size_t ceil_pow(double base, double exponent) {
    const double x = std::pow(std::max(base, 1.0), exponent);
    return static_cast<std::size_t>(std::ceil(x - 1e-9));
}

/// Applies the branch overrides on top of the cost comparison.
bool choose_matrix(const Policy& policy, std::size_t D, bool applicable, double sparse_cost, double matrix_cost) {
    if (!applicable) {
        return false;
    }
    switch (policy.branch) {
    case Branch::Sparse:
        return false;
    case Branch::Matrix:
        return true;
    case Branch::Auto:
        break;
    }
    if (policy.switch_D) {
        return D >= *policy.switch_D;
    }
    return matrix_cost < sparse_cost;
}

void combine_min(Dense<dist_t>& acc, const Dense<dist_t>& est) {
    acc = acc.cwiseMin(est);
}

} // namespace

std::vector<std::size_t> degree_classes(std::size_t n) {
    std::vector<std::size_t> out;
    if (n == 0) {
        return out;
    }
    std::size_t D = 1;
    out.push_back(D);
    while (D < n) {
        D *= 2;
        out.push_back(D);
    }
    return out;
}

ClassPlan plan_plus2_class(std::size_t n, std::size_t D, const Policy& policy) {
    ClassPlan plan;
    plan.D = D;
    const double omega = policy.model.omega();
    const double nd = static_cast<double>(n);
    const double Dd = static_cast<double>(D);

    if (policy.d) {
        plan.d = *policy.d;
    } else if (D <= 2) {
        plan.d = 1;
    } else {
        plan.d = std::clamp<std::size_t>(ceil_pow(nd / Dd, (omega - 1.0) / (5.0 - omega)), 2, D - 1);
    }
    const double dd = static_cast<double>(plan.d);
    plan.q = policy.q ? *policy.q
                      : std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(
                                                     std::pow(std::max(nd / (Dd * dd), 1.0), (3.0 - omega) / 2.0))));
    const double qd = static_cast<double>(plan.q);

    plan.sparse_cost = nd * nd * std::sqrt(Dd);
    if (policy.variant == Plus2Variant::Grouped) {
        const double clusters = nd / dd;
        plan.matrix_cost = nd * nd * dd + clusters * clusters * (nd / Dd) + qd * policy.model.predict(nd, nd / Dd, nd) +
                           clusters * clusters * policy.model.predict(dd, nd / (Dd * qd), dd);
    } else {
        plan.matrix_cost = nd * nd * dd + (nd / dd) * policy.model.predict(nd, nd / Dd, dd);
    }
    const bool applicable = D >= 2 && plan.d >= 1 && plan.d < D && plan.d <= n && plan.q >= 1;
    plan.matrix = choose_matrix(policy, D, applicable, plan.sparse_cost, plan.matrix_cost);
    return plan;
}

double plus2k_balance_exponent(std::size_t k, const MMCostModel& model) {
    if (k < 2) {
        throw InputError("plus2k_balance_exponent: k must be >= 2");
    }
    const double kk = static_cast<double>(k);
    auto gap = [&](double x) {
        return model.exponent(1.0 - (kk - 1.0) * x / (kk + 1.0), 1.0 - x, kk * x / (kk + 1.0)) - (1.0 + x);
    };
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (gap(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

ClassPlan plan_plus2k_class(std::size_t n, std::size_t k, std::size_t D, const Policy& policy) {
    ClassPlan plan;
    plan.D = D;
    const double x = plus2k_balance_exponent(k, policy.model);
    const double kk = static_cast<double>(k);
    const double nd = static_cast<double>(n);
    const double Dd = static_cast<double>(D);

    plan.delta = policy.delta ? *policy.delta
                              : std::min(D, std::max<std::size_t>(2, ceil_pow(nd, (kk - 1.0) * x / (kk + 1.0))));
    if (policy.d) {
        plan.d = *policy.d;
    } else {
        plan.d = D <= 2 ? 1 : std::clamp<std::size_t>(ceil_pow(nd, kk * x / (kk + 1.0)), 2, D - 1);
    }
    const double dd = static_cast<double>(plan.d);
    const double deltad = static_cast<double>(plan.delta);

    plan.sparse_cost = nd * nd * std::pow(Dd, 1.0 / (kk + 1.0));
    plan.matrix_cost = nd * nd * std::pow(deltad, 1.0 / (kk - 1.0)) + nd * nd * dd / deltad +
                       (nd / dd) * policy.model.predict(nd / deltad, nd / Dd, dd);
    const bool applicable = D >= 2 && plan.d >= 1 && plan.d < D && plan.d <= n && plan.delta >= 1 &&
                            plan.delta <= D && plan.delta <= n;
    plan.matrix = choose_matrix(policy, D, applicable, plan.sparse_cost, plan.matrix_cost);
    return plan;
}

EstimateMatrix plus2_apsp(const Graph& g, const Policy& policy, DriverTrace* trace) {
    const std::size_t n = g.num_vertices();
    EstimateMatrix out = DistanceMatrix::square(n);
    for (std::size_t D : degree_classes(n)) {
        if (D > g.max_degree()) {
            break;
        }
        const ClassPlan plan = plan_plus2_class(n, D, policy);
        if (!plan.matrix) {
            combine_min(out.values, sparse_restricted_apsp(restrict_to_max_degree(g, 2 * D), 2 * D, 1).values);
        } else if (policy.variant == Plus2Variant::Grouped) {
            combine_min(out.values, plus2_grouped(g, D, plan.d, plan.q, policy.seed + D).values);
        } else {
            combine_min(out.values, plus2_percluster(g, D, plan.d).values);
        }
        if (trace) {
            trace->classes.push_back(plan);
        }
    }
    detail::finalize_estimates(out.values);
    return out;
}

EstimateMatrix plus2k_apsp(const Graph& g, std::size_t k, const Policy& policy, DriverTrace* trace) {
    if (k < 2) {
        throw InputError("plus2k_apsp: k must be >= 2 (got k=" + std::to_string(k) + ")");
    }
    const std::size_t n = g.num_vertices();
    EstimateMatrix out = DistanceMatrix::square(n);
    for (std::size_t D : degree_classes(n)) {
        if (D > g.max_degree()) {
            break;
        }
        const ClassPlan plan = plan_plus2k_class(n, k, D, policy);
        if (plan.matrix) {
            const HittingSet u = greedy_hitting_set(g, plan.delta);
            const EstimateMatrix from_u = plus2_from_subset(g, u.vertices, D, plan.d);
            combine_min(out.values, generalize_to_k(g, u.vertices, plan.delta, from_u, k, D).values);
        } else {
            combine_min(out.values, sparse_restricted_apsp(restrict_to_max_degree(g, 2 * D), 2 * D, k).values);
        }
        if (trace) {
            trace->classes.push_back(plan);
        }
    }
    detail::finalize_estimates(out.values);
    return out;
}

} // namespace apsp
