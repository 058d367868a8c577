#include "polyneq/circle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_map>
#include <vector>

namespace polyneq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kGoldenWidth = 1e-14;
constexpr std::size_t kMinMaxGrid = 1024;
constexpr std::size_t kMaxGridPerDegree = 128;
constexpr std::size_t kMinPointwiseGrid = 4096;
constexpr std::size_t kPointwiseGridPerDegree = 256;
constexpr std::size_t kPointwiseCandidates = 8;

// Unit-circle nodes. Key (N, false) holds e^{2 pi i m / N}, m < N; key
// (N, true) holds the odd nodes of the N grid, e^{2 pi i (2m+1) / N}, m < N/2.
struct NodeTable {
    std::vector<double> c;
    std::vector<double> s;
};

const NodeTable& nodes(std::size_t n, bool odd)
{
    thread_local std::unordered_map<std::size_t, NodeTable> cache;
    const std::size_t key = 2 * n + (odd ? 1 : 0);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    NodeTable t;
    const std::size_t count = odd ? n / 2 : n;
    t.c.resize(count);
    t.s.resize(count);
    for (std::size_t m = 0; m < count; ++m) {
        const double idx = odd ? static_cast<double>(2 * m + 1) : static_cast<double>(m);
        const double theta = kTwoPi * idx / static_cast<double>(n);
        t.c[m] = std::cos(theta);
        t.s[m] = std::sin(theta);
    }
    return cache.emplace(key, std::move(t)).first->second;
}

// Coefficients b_j = a_j r^j, trimmed to the effective degree.
std::vector<Complex> circle_coeffs(const Polynomial& q, double r)
{
    const int m = q.effective_degree();
    std::vector<Complex> b(q.coeffs().begin(), q.coeffs().begin() + (m + 1));
    double rj = 1.0;
    for (auto& c : b) {
        c *= rj;
        rj *= r;
    }
    return b;
}

// Horner over a block of nodes at once, structure-of-arrays so the inner loop
// vectorizes.
void eval_nodes(std::span<const Complex> b, const NodeTable& t, double* re, double* im)
{
    constexpr std::size_t kBlock = 256;
    const std::size_t count = t.c.size();
    const double* cs = t.c.data();
    const double* sn = t.s.data();
    const double top_re = b.back().real();
    const double top_im = b.back().imag();
    for (std::size_t base = 0; base < count; base += kBlock) {
        const std::size_t len = std::min(kBlock, count - base);
        double* ar = re + base;
        double* ai = im + base;
        const double* c = cs + base;
        const double* s = sn + base;
        for (std::size_t m = 0; m < len; ++m) {
            ar[m] = top_re;
            ai[m] = top_im;
        }
        for (std::size_t j = b.size() - 1; j-- > 0;) {
            const double br = b[j].real();
            const double bi = b[j].imag();
            for (std::size_t m = 0; m < len; ++m) {
                const double xr = ar[m] * c[m] - ai[m] * s[m] + br;
                const double xi = ar[m] * s[m] + ai[m] * c[m] + bi;
                ar[m] = xr;
                ai[m] = xi;
            }
        }
    }
}

// Per-thread buffer that only ever grows, so repeated calls do not reallocate
// or zero-fill.
double* scratch(std::vector<double>& buf, std::size_t count)
{
    if (buf.size() < count)
        buf.resize(count);
    return buf.data();
}

void abs2_nodes(std::span<const Complex> b, const NodeTable& t, double* out)
{
    const std::size_t count = t.c.size();
    thread_local std::vector<double> im_buf;
    double* im = scratch(im_buf, count);
    eval_nodes(b, t, out, im);
    for (std::size_t m = 0; m < count; ++m)
        out[m] = out[m] * out[m] + im[m] * im[m];
}

Complex eval_unit(std::span<const Complex> b, double theta)
{
    const double zr = std::cos(theta);
    const double zi = std::sin(theta);
    double re = b.back().real();
    double im = b.back().imag();
    for (std::size_t j = b.size() - 1; j-- > 0;) {
        const double t = re * zr - im * zi + b[j].real();
        im = re * zi + im * zr + b[j].imag();
        re = t;
    }
    return {re, im};
}

struct Extremum {
    double value;
    double theta;
};

// Golden-section search for the minimum of f on [lo, hi].
template <class F>
Extremum golden_min(F&& f, double lo, double hi)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > kGoldenWidth) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
        if (!(x1 < x2))
            break;
    }
    return f1 <= f2 ? Extremum{f1, x1} : Extremum{f2, x2};
}

double wrap_angle(double theta)
{
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0)
        t += kTwoPi;
    if (t >= kTwoPi)
        t = 0.0;
    return t;
}

// Best of the samples and the refined admissible local maxima of f (= |q|^2).
Extremum refine_maxima(std::span<const Complex> b, const std::vector<double>& f, int degree)
{
    const std::size_t n = f.size();
    const double h = kTwoPi / static_cast<double>(n);
    std::size_t arg = 0;
    for (std::size_t m = 1; m < n; ++m)
        if (f[m] > f[arg])
            arg = m;
    Extremum best{f[arg], h * static_cast<double>(arg)};

    const double half = 0.5 * h;
    const double deg = static_cast<double>(degree);
    const double threshold = f[arg] * (1.0 - 0.5 * deg * deg * half * half - 1e-12);

    auto objective = [&](double theta) { return -std::norm(eval_unit(b, theta)); };
    auto refine = [&](std::size_t m) {
        const double center = h * static_cast<double>(m);
        const Extremum e = golden_min(objective, center - h, center + h);
        if (-e.value > best.value)
            best = {-e.value, e.theta};
    };

    bool any = false;
    for (std::size_t m = 0; m < n; ++m) {
        const double prev = f[m == 0 ? n - 1 : m - 1];
        const double next = f[m + 1 == n ? 0 : m + 1];
        if (f[m] > prev && f[m] >= next && f[m] >= threshold) {
            refine(m);
            any = true;
        }
    }
    if (!any && f[arg] > 0.0)
        refine(arg);
    return best;
}

std::size_t pointwise_grid(int degree)
{
    return std::max(kMinPointwiseGrid, kPointwiseGridPerDegree * static_cast<std::size_t>(std::max(degree, 1)));
}

// Shared driver for the pointwise minima: sample values on the grid, keep the
// admissible ones, refine the smallest admissible local minima. The objective
// returns +inf off the admissible set.
template <class Objective>
PointwiseMinimum grid_minimum(const std::vector<double>& values, const std::vector<bool>& admissible,
                              Objective&& objective)
{
    const std::size_t n = values.size();
    const double h = kTwoPi / static_cast<double>(n);
    constexpr double inf = std::numeric_limits<double>::infinity();
    auto at = [&](std::size_t m) { return admissible[m] ? values[m] : inf; };

    PointwiseMinimum out;
    out.grid_size = n;
    out.admissible = static_cast<std::size_t>(std::count(admissible.begin(), admissible.end(), true));
    if (out.admissible == 0)
        throw NoAdmissibleSamples("no admissible samples on the circle");

    std::vector<std::pair<double, std::size_t>> minima;
    std::size_t arg = n;
    for (std::size_t m = 0; m < n; ++m) {
        if (!admissible[m])
            continue;
        if (arg == n || values[m] < values[arg])
            arg = m;
        const std::size_t prev = m == 0 ? n - 1 : m - 1;
        const std::size_t next = m + 1 == n ? 0 : m + 1;
        if (values[m] < at(prev) && values[m] <= at(next))
            minima.emplace_back(values[m], m);
    }
    out.value = values[arg];
    out.theta = h * static_cast<double>(arg);
    if (minima.empty())
        minima.emplace_back(values[arg], arg);
    const std::size_t keep = std::min(kPointwiseCandidates, minima.size());
    std::partial_sort(minima.begin(), minima.begin() + static_cast<std::ptrdiff_t>(keep), minima.end());
    for (std::size_t c = 0; c < keep; ++c) {
        const double center = h * static_cast<double>(minima[c].second);
        const Extremum e = golden_min(objective, center - h, center + h);
        if (e.value < out.value) {
            out.value = e.value;
            out.theta = e.theta;
        }
    }
    out.theta = wrap_angle(out.theta);
    return out;
}

} // namespace

MaxModEstimate max_modulus(const Polynomial& q, double r)
{
    if (!(r > 0.0) || !std::isfinite(r))
        throw ContractError("max_modulus: radius must be positive and finite");
    const int degree = q.effective_degree();
    MaxModEstimate est;
    est.grid_size = kMinMaxGrid;
    est.refined = true;
    if (degree <= 0) {
        est.value = degree < 0 ? 0.0 : std::abs(q[0]);
        return est;
    }

    const std::vector<Complex> b = circle_coeffs(q, r);
    std::size_t n = std::max(kMinMaxGrid, kMaxGridPerDegree * static_cast<std::size_t>(degree));
    thread_local std::vector<double> f, f2, odd;
    f.resize(n);
    abs2_nodes(b, nodes(n, false), f.data());
    Extremum best = refine_maxima(b, f, degree);

    est.refined = false;
    est.rel_gap = std::numeric_limits<double>::infinity();
    for (int d = 0; d < kMaxModDoublings; ++d) {
        const std::size_t n2 = 2 * n;
        odd.resize(n);
        abs2_nodes(b, nodes(n2, true), odd.data());
        f2.resize(n2);
        for (std::size_t m = 0; m < n; ++m) {
            f2[2 * m] = f[m];
            f2[2 * m + 1] = odd[m];
        }
        f.swap(f2);
        n = n2;
        // The refined value already dominates every old sample; only a new
        // sample above it can move the estimate.
        const double odd_max = *std::max_element(odd.begin(), odd.begin() + static_cast<std::ptrdiff_t>(n / 2));
        const Extremum next = odd_max > best.value ? refine_maxima(b, f, degree) : best;
        const double prev_value = std::sqrt(best.value);
        const double next_value = std::sqrt(std::max(next.value, best.value));
        est.rel_gap = std::abs(next_value - prev_value) / std::max(next_value, std::numeric_limits<double>::min());
        if (next.value > best.value)
            best = next;
        if (est.rel_gap < kMaxModConvergence) {
            est.refined = true;
            break;
        }
    }
    est.value = std::sqrt(best.value);
    est.arg_theta = wrap_angle(best.theta);
    est.grid_size = n;
    return est;
}

PointwiseMinimum pointwise_ratio_min(const Polynomial& num, const Polynomial& den, double r, double floor_frac)
{
    if (!(r > 0.0) || !std::isfinite(r))
        throw ContractError("pointwise_ratio_min: radius must be positive and finite");
    if (den.is_zero())
        throw ContractError("pointwise_ratio_min: denominator is identically zero");
    const int degree = std::max(num.effective_degree(), den.effective_degree());
    const std::size_t n = pointwise_grid(degree);
    if (num.is_zero()) {
        PointwiseMinimum out;
        out.grid_size = n;
        out.admissible = n;
        return out;
    }
    const auto bn = circle_coeffs(num, r);
    const auto bd = circle_coeffs(den, r);
    const NodeTable& t = nodes(n, false);
    std::vector<double> fn(n), fd(n);
    abs2_nodes(bn, t, fn.data());
    abs2_nodes(bd, t, fd.data());
    const double fd_max = *std::max_element(fd.begin(), fd.end());
    const double floor2 = floor_frac * floor_frac * fd_max;

    std::vector<bool> admissible(n);
    std::vector<double> ratio(n);
    for (std::size_t m = 0; m < n; ++m) {
        admissible[m] = fd[m] >= floor2 && fd[m] > 0.0;
        ratio[m] = admissible[m] ? fn[m] / fd[m] : 0.0;
    }
    auto objective = [&](double theta) {
        const double d = std::norm(eval_unit(bd, theta));
        if (!(d >= floor2) || d == 0.0)
            return std::numeric_limits<double>::infinity();
        return std::norm(eval_unit(bn, theta)) / d;
    };
    PointwiseMinimum out = grid_minimum(ratio, admissible, objective);
    out.value = std::sqrt(out.value);
    return out;
}

PointwiseMinimum pointwise_dubinin_min(const Polynomial& p, double r, double floor_frac)
{
    if (!(r > 0.0) || !std::isfinite(r))
        throw ContractError("pointwise_dubinin_min: radius must be positive and finite");
    if (p.effective_degree() < 1)
        throw ContractError("pointwise_dubinin_min: degree must be at least 1");
    const std::size_t n = pointwise_grid(p.effective_degree());
    const auto b = circle_coeffs(p, r);
    // z P'(z) at z = r e^{i theta} has coefficients j b_j in the unit variable.
    std::vector<Complex> zb(b.size());
    for (std::size_t j = 0; j < b.size(); ++j)
        zb[j] = static_cast<double>(j) * b[j];

    const NodeTable& t = nodes(n, false);
    std::vector<double> pr(n), pi(n), dr(n), di(n);
    eval_nodes(b, t, pr.data(), pi.data());
    eval_nodes(zb, t, dr.data(), di.data());
    double p_max = 0.0;
    std::vector<double> mod2(n);
    for (std::size_t m = 0; m < n; ++m) {
        mod2[m] = pr[m] * pr[m] + pi[m] * pi[m];
        p_max = std::max(p_max, mod2[m]);
    }
    const double floor2 = floor_frac * floor_frac * p_max;
    std::vector<bool> admissible(n);
    std::vector<double> q(n);
    for (std::size_t m = 0; m < n; ++m) {
        admissible[m] = mod2[m] >= floor2 && mod2[m] > 0.0;
        // Re(zP' conj(P)) / |P|^2
        q[m] = admissible[m] ? (dr[m] * pr[m] + di[m] * pi[m]) / mod2[m] : 0.0;
    }
    auto objective = [&](double theta) {
        const Complex v = eval_unit(b, theta);
        const double m2 = std::norm(v);
        if (!(m2 >= floor2) || m2 == 0.0)
            return std::numeric_limits<double>::infinity();
        const Complex w = eval_unit(zb, theta);
        return (w.real() * v.real() + w.imag() * v.imag()) / m2;
    };
    return grid_minimum(q, admissible, objective);
}

PointwiseMinimum pointwise_root_min(const RootForm& roots, std::span<const double> weights, RootQuantity q,
                                    double r, double floor_frac)
{
    if (!(r > 0.0) || !std::isfinite(r))
        throw ContractError("pointwise_root_min: radius must be positive and finite");
    const auto z = roots.roots();
    if (z.empty())
        throw ContractError("pointwise_root_min: degree must be at least 1");
    if (weights.size() != z.size())
        throw ContractError("pointwise_root_min: one weight per zero required");
    const double lead2 = std::norm(roots.leading());
    const bool dubinin = q == RootQuantity::DubininReal;

    // Fills |P|^2 and the quantity on points (xr, xi), in fixed-size blocks
    // held on the stack so the inner loop vectorizes.
    auto evaluate = [&](std::size_t len, const double* xr, const double* xi, double* mod2, double* value) {
        constexpr std::size_t kBlock = 256;
        for (std::size_t base = 0; base < len; base += kBlock) {
            const std::size_t cnt = std::min(kBlock, len - base);
            double x[kBlock], y[kBlock], m2[kBlock], sr[kBlock], si[kBlock];
            for (std::size_t m = 0; m < cnt; ++m) {
                x[m] = xr[base + m];
                y[m] = xi[base + m];
                m2[m] = lead2;
                sr[m] = 0.0;
                si[m] = 0.0;
            }
            for (std::size_t j = 0; j < z.size(); ++j) {
                const double zr = z[j].real();
                const double zi = z[j].imag();
                const double w = weights[j];
                for (std::size_t m = 0; m < cnt; ++m) {
                    const double dr = x[m] - zr;
                    const double di = y[m] - zi;
                    const double d2 = dr * dr + di * di;
                    const double inv = w / d2;
                    m2[m] *= d2;
                    // w / d = w conj(d) / |d|^2
                    sr[m] += dr * inv;
                    si[m] -= di * inv;
                }
            }
            for (std::size_t m = 0; m < cnt; ++m) {
                mod2[base + m] = m2[m];
                value[base + m] = dubinin ? x[m] * sr[m] - y[m] * si[m] : std::sqrt(sr[m] * sr[m] + si[m] * si[m]);
            }
        }
    };

    const std::size_t n = pointwise_grid(static_cast<int>(z.size()));
    const NodeTable& t = nodes(n, false);
    thread_local std::vector<double> xr_buf, xi_buf, mod2_buf;
    double* xr = scratch(xr_buf, n);
    double* xi = scratch(xi_buf, n);
    double* mod2 = scratch(mod2_buf, n);
    std::vector<double> value(n);
    for (std::size_t m = 0; m < n; ++m) {
        xr[m] = r * t.c[m];
        xi[m] = r * t.s[m];
    }
    evaluate(n, xr, xi, mod2, value.data());
    const double mod2_max = *std::max_element(mod2, mod2 + n);
    const double floor2 = floor_frac * floor_frac * mod2_max;
    std::vector<bool> admissible(n);
    for (std::size_t m = 0; m < n; ++m)
        admissible[m] = mod2[m] >= floor2 && mod2[m] > 0.0 && std::isfinite(value[m]);
    auto objective = [&](double theta) {
        const double pr = r * std::cos(theta);
        const double pi = r * std::sin(theta);
        double m2 = 0.0, v = 0.0;
        evaluate(1, &pr, &pi, &m2, &v);
        if (!(m2 >= floor2) || m2 == 0.0 || !std::isfinite(v))
            return std::numeric_limits<double>::infinity();
        return v;
    };
    return grid_minimum(value, admissible, objective);
}

double growth_factor(const Polynomial& p, double R)
{
    if (!(R >= 1.0) || !std::isfinite(R))
        throw ContractError("growth_factor: R must be >= 1");
    if (p.is_zero())
        throw ContractError("growth_factor: zero polynomial");
    return max_modulus(p, R).value / max_modulus(p, 1.0).value;
}

CheckReport boundary_growth_check(const RootForm& r, double k, const Tolerances& tol)
{
    Witness w;
    w.roots = r;
    w.k = k;
    if (!(k >= 1.0))
        return hypothesis_failed(InequalityId::LEMMA3_13, Sense::Lower, "k-range: k >= 1 required", std::move(w));
    if (!zeros_in_disk(r, k))
        return hypothesis_failed(InequalityId::LEMMA3_13, Sense::Lower, "zeros: all zeros must lie in |z| <= k",
                                 std::move(w));
    const Polynomial p = from_roots(r);
    const MaxModEstimate outer = max_modulus(p, k);
    const MaxModEstimate unit = max_modulus(p, 1.0);
    const double kn = std::pow(k, r.degree());
    const double bound = 2.0 * kn / (1.0 + kn) * unit.value;
    w.theta = outer.arg_theta;
    return make_report(InequalityId::LEMMA3_13, Sense::Lower, outer.value, bound, outer.value, std::move(w), tol);
}

} // namespace polyneq
