#include "polyneq/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace polyneq {

RootForm::RootForm(Complex leading, std::vector<Complex> roots)
    : leading_(leading), roots_(std::move(roots))
{
    if (!is_finite(leading_) || leading_ == Complex{})
        throw ContractError("root form needs a finite nonzero leading coefficient");
    for (const auto& z : roots_)
        if (!is_finite(z))
            throw ContractError("root form contains a non-finite root");
}

Polynomial from_roots(const RootForm& r)
{
    std::vector<Complex> a{r.leading()};
    a.reserve(r.roots().size() + 1);
    for (const Complex z : r.roots()) {
        // multiply by (x - z): new_j = a_{j-1} - z a_j
        a.push_back(a.back());
        for (std::size_t j = a.size() - 2; j > 0; --j)
            a[j] = a[j - 1] - z * a[j];
        a[0] = -z * a[0];
    }
    return Polynomial(std::move(a));
}

double normalized_residual(const Polynomial& p, std::span<const Complex> roots)
{
    const double an = std::abs(p.leading());
    const int n = p.degree();
    double worst = 0.0;
    for (const Complex z : roots) {
        const double scale = an * std::pow(std::max(1.0, std::abs(z)), n);
        worst = std::max(worst, std::abs(eval(p, z)) / scale);
    }
    return worst;
}

RootFindError::RootFindError(RootForm best, double residual, int iterations)
    : std::runtime_error([&] {
          std::ostringstream os;
          os << "find_roots: no convergence after " << iterations
             << " iterations (normalized residual " << residual << ")";
          return os.str();
      }()),
      best_(std::move(best)), residual_(residual), iterations_(iterations)
{
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Horner value, derivative, and a running bound on the rounding error of the
// value (Higham, Accuracy and Stability, sec. 5.1).
struct HornerResult {
    Complex value;
    Complex slope;
    double error_bound;
};

HornerResult horner_with_bound(std::span<const Complex> a, Complex z)
{
    Complex v = a.back();
    Complex d{};
    double mu = std::abs(v) / 2.0;
    const double az = std::abs(z);
    for (std::size_t j = a.size() - 1; j-- > 0;) {
        d = d * z + v;
        v = v * z + a[j];
        mu = mu * az + std::abs(v);
    }
    return {v, d, kEps * (2.0 * mu - std::abs(v))};
}

std::vector<Complex> initial_guesses(std::span<const Complex> a)
{
    const std::size_t n = a.size() - 1;
    const double radius = std::pow(std::abs(a.front() / a.back()), 1.0 / static_cast<double>(n));
    // golden-angle spiral keeps the guesses off any symmetry axis of the input
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    std::vector<Complex> z(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n)
            + golden * static_cast<double>(j + 1) / static_cast<double>(n) + 0.4;
        z[j] = std::polar(radius, theta);
    }
    return z;
}

struct AberthResult {
    std::vector<Complex> roots;
    int iterations;
};

AberthResult aberth(std::span<const Complex> a)
{
    const std::size_t n = a.size() - 1;
    std::vector<Complex> z = initial_guesses(a);
    std::vector<bool> done(n, false);
    int iter = 0;
    for (; iter < kAberthMaxIterations; ++iter) {
        bool all_done = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (done[j])
                continue;
            const auto h = horner_with_bound(a, z[j]);
            if (std::abs(h.value) <= h.error_bound) {
                done[j] = true;
                continue;
            }
            all_done = false;
            if (h.slope == Complex{}) {
                // stationary point: nudge off it
                z[j] += std::polar(std::max(1.0, std::abs(z[j])) * 1e-3, 0.7 * static_cast<double>(j + 1));
                continue;
            }
            const Complex ratio = h.value / h.slope;
            Complex repulsion{};
            for (std::size_t i = 0; i < n; ++i)
                if (i != j)
                    repulsion += 1.0 / (z[j] - z[i]);
            const Complex step = ratio / (1.0 - ratio * repulsion);
            if (!is_finite(step))
                continue;
            z[j] -= step;
            if (std::abs(step) <= kEps * std::abs(z[j]))
                done[j] = true;
        }
        if (all_done)
            break;
    }
    return {std::move(z), iter};
}

// Newton inclusion radius: the disk |w - z| <= n |p(z)/p'(z)| holds a zero.
double inclusion_radius(std::span<const Complex> a, Complex z)
{
    const auto h = horner_with_bound(a, z);
    const double n = static_cast<double>(a.size() - 1);
    const double floor_radius = n * kEps * std::max(1.0, std::abs(z));
    if (h.slope == Complex{})
        return std::numeric_limits<double>::infinity();
    return std::max(floor_radius, n * std::abs(h.value / h.slope));
}

// A zero of multiplicity m is a simple zero of the (m-1)-th derivative, so
// Newton on that derivative recovers it to full precision.
Complex polish_multiple(const Polynomial& p, Complex z, std::size_t m)
{
    Polynomial q = p;
    for (std::size_t i = 1; i < m && q.degree() > 1; ++i)
        q = derivative(q);
    const auto b = q.coeffs();
    double best = std::abs(horner_with_bound(b, z).value);
    for (int it = 0; it < 20; ++it) {
        const auto h = horner_with_bound(b, z);
        if (h.slope == Complex{} || std::abs(h.value) <= h.error_bound)
            break;
        const Complex next = z - h.value / h.slope;
        const double v = std::abs(horner_with_bound(b, next).value);
        if (!is_finite(next) || !(v < best))
            break;
        z = next;
        best = v;
    }
    return z;
}

void collapse_clusters(const Polynomial& p, std::vector<Complex>& z)
{
    const std::size_t n = z.size();
    if (n < 2)
        return;
    const auto a = p.coeffs();
    std::vector<double> rad(n);
    for (std::size_t j = 0; j < n; ++j)
        rad[j] = inclusion_radius(a, z[j]);

    // union-find over overlapping inclusion disks
    std::vector<std::size_t> parent(n);
    for (std::size_t j = 0; j < n; ++j)
        parent[j] = j;
    auto find = [&](std::size_t j) {
        while (parent[j] != j)
            j = parent[j] = parent[parent[j]];
        return j;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(z[i] - z[j]) <= rad[i] + rad[j])
                parent[find(i)] = find(j);

    for (std::size_t root = 0; root < n; ++root) {
        if (find(root) != root)
            continue;
        std::vector<std::size_t> members;
        for (std::size_t j = 0; j < n; ++j)
            if (find(j) == root)
                members.push_back(j);
        if (members.size() < 2)
            continue;
        Complex centroid{};
        std::vector<Complex> cluster;
        for (const auto j : members) {
            centroid += z[j];
            cluster.push_back(z[j]);
        }
        centroid /= static_cast<double>(members.size());
        centroid = polish_multiple(p, centroid, members.size());
        const double before = normalized_residual(p, cluster);
        const Complex one[] = {centroid};
        const double after = normalized_residual(p, one);
        if (after <= before)
            for (const auto j : members)
                z[j] = centroid;
    }
}

} // namespace

RootForm find_roots(const Polynomial& p, double tol)
{
    require_proper(p, "find_roots");
    if (p.degree() < 1)
        throw ContractError("find_roots: degree must be at least 1");

    const auto coeffs = p.coeffs();
    std::size_t zeros_at_origin = 0;
    while (coeffs[zeros_at_origin] == Complex{})
        ++zeros_at_origin;

    std::vector<Complex> roots(zeros_at_origin, Complex{});
    int iterations = 0;
    const std::span<const Complex> reduced = coeffs.subspan(zeros_at_origin);
    if (reduced.size() > 1) {
        auto result = aberth(reduced);
        iterations = result.iterations;
        collapse_clusters(Polynomial(std::vector<Complex>(reduced.begin(), reduced.end())), result.roots);
        roots.insert(roots.end(), result.roots.begin(), result.roots.end());
    }

    RootForm form(p.leading(), std::move(roots));
    const double residual = normalized_residual(p, form.roots());
    if (!(residual <= tol))
        throw RootFindError(std::move(form), residual, iterations);
    return form;
}

bool zeros_in_disk(const RootForm& r, double k, double tol)
{
    if (!(k > 0.0))
        throw ContractError("zeros_in_disk: k must be positive");
    const double limit = k * (1.0 + tol);
    return std::all_of(r.roots().begin(), r.roots().end(),
                       [&](Complex z) { return std::abs(z) <= limit; });
}

} // namespace polyneq
