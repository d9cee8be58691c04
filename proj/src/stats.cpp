#include "graphlim/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace graphlim {

MeanStdErr mean_stderr(const std::vector<double>& xs) {
    MeanStdErr r;
    r.count = static_cast<long long>(xs.size());
    if (xs.empty()) return r;
    double sum = 0;
    for (double x : xs) sum += x;
    r.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0;
        for (double x : xs) ss += (x - r.mean) * (x - r.mean);
        r.std_error = std::sqrt(ss / (static_cast<double>(xs.size() - 1) * static_cast<double>(xs.size())));
    }
    return r;
}

namespace {

double gamma_p_series(double a, double x) {
    double ap = a, sum = 1.0 / a, del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_contfrac(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i <= 500; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

} // namespace

double gamma_q(double a, double x) {
    if (x < 0 || a <= 0) throw std::invalid_argument("gamma_q domain");
    if (x == 0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_contfrac(a, x);
}

double chi_square_sf(double stat, int dof) {
    if (dof <= 0) throw std::invalid_argument("chi_square_sf needs dof >= 1");
    if (stat <= 0) return 1.0;
    return gamma_q(dof / 2.0, stat / 2.0);
}

double chi_square_stat(const std::vector<long long>& observed, const std::vector<double>& expected) {
    if (observed.size() != expected.size()) throw std::invalid_argument("chi_square_stat size mismatch");
    double stat = 0;
    for (size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0) {
            if (observed[i] != 0) return std::numeric_limits<double>::infinity();
            continue;
        }
        const double d = static_cast<double>(observed[i]) - expected[i];
        stat += d * d / expected[i];
    }
    return stat;
}

} // namespace graphlim
