#include "ipmkit/regression.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "ipmkit/errors.hpp"

namespace ipmkit::regression {

namespace {

struct Elimination {
    std::vector<double> solution;
    double pivot_ratio = 1.0;  // max/min scaled pivot across the elimination
};

// Gaussian elimination with scaled partial pivoting on a flat row-major
// square matrix. Pivots are compared against the infinity norm of their
// original row so that regressors of very different magnitudes do not trip
// the singularity check. Inputs are consumed.
Elimination eliminate(std::vector<double> a, std::vector<double> b, std::size_t p) {
    std::vector<double> scale(p, 0.0);
    for (std::size_t r = 0; r < p; ++r) {
        for (std::size_t c = 0; c < p; ++c) scale[r] = std::max(scale[r], std::fabs(a[r * p + c]));
        if (scale[r] == 0.0) throw SingularSystemError("matrix has an all-zero row", r);
    }

    double min_pivot = 0.0;
    double max_pivot = 0.0;
    for (std::size_t col = 0; col < p; ++col) {
        std::size_t pivot_row = col;
        double best = std::fabs(a[col * p + col]) / scale[col];
        for (std::size_t r = col + 1; r < p; ++r) {
            const double cand = std::fabs(a[r * p + col]) / scale[r];
            if (cand > best) {
                best = cand;
                pivot_row = r;
            }
        }
        if (!(best > kPivotTolerance))
            throw SingularSystemError("singular system: pivot below tolerance", col);
        if (pivot_row != col) {
            for (std::size_t c = 0; c < p; ++c) std::swap(a[col * p + c], a[pivot_row * p + c]);
            std::swap(b[col], b[pivot_row]);
            std::swap(scale[col], scale[pivot_row]);
        }
        min_pivot = (col == 0) ? best : std::min(min_pivot, best);
        max_pivot = std::max(max_pivot, best);

        const double pivot = a[col * p + col];
        for (std::size_t r = col + 1; r < p; ++r) {
            const double factor = a[r * p + col] / pivot;
            if (factor == 0.0) continue;
            a[r * p + col] = 0.0;
            for (std::size_t c = col + 1; c < p; ++c) a[r * p + c] -= factor * a[col * p + c];
            b[r] -= factor * b[col];
        }
    }

    Elimination out;
    out.solution.resize(p);
    for (std::size_t ri = p; ri-- > 0;) {
        long double acc = b[ri];
        for (std::size_t c = ri + 1; c < p; ++c)
            acc -= static_cast<long double>(a[ri * p + c]) * out.solution[c];
        out.solution[ri] = static_cast<double>(acc / a[ri * p + ri]);
    }
    out.pivot_ratio = max_pivot / min_pivot;
    return out;
}

void require_finite(std::span<const double> values, const char* what) {
    for (double v : values) {
        if (!std::isfinite(v))
            throw ValidationError(std::string(what) + " contains a non-finite value");
    }
}

}  // namespace

DesignMatrix build_design_matrix(const std::vector<std::vector<double>>& regressor_rows) {
    if (regressor_rows.empty()) throw ValidationError("design matrix needs at least one row");
    const std::size_t k = regressor_rows.front().size();
    DesignMatrix m;
    m.rows_ = regressor_rows.size();
    m.cols_ = k + 1;
    m.cells_.reserve(m.rows_ * m.cols_);
    for (std::size_t r = 0; r < regressor_rows.size(); ++r) {
        const auto& row = regressor_rows[r];
        if (row.size() != k)
            throw ValidationError("ragged feature rows: row " + std::to_string(r) + " has " +
                                  std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(k));
        require_finite(row, "feature row");
        m.cells_.push_back(1.0);
        m.cells_.insert(m.cells_.end(), row.begin(), row.end());
    }
    return m;
}

SumsOfSquares sums_of_squares(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw ValidationError("sums_of_squares: mismatched sample lengths");
    if (x.empty()) throw ValidationError("sums_of_squares: empty samples");
    require_finite(x, "x sample");
    require_finite(y, "y sample");

    const std::size_t n = x.size();
    long double sum_x = 0.0L;
    long double sum_y = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        sum_x += x[i];
        sum_y += y[i];
    }
    const long double mean_x = sum_x / static_cast<long double>(n);
    const long double mean_y = sum_y / static_cast<long double>(n);

    long double sxx = 0.0L;
    long double syy = 0.0L;
    long double sxy = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        const long double dx = x[i] - mean_x;
        const long double dy = y[i] - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    return {static_cast<double>(sxx), static_cast<double>(syy), static_cast<double>(sxy)};
}

std::vector<double> solve_linear_system(const std::vector<std::vector<double>>& a,
                                        const std::vector<double>& b) {
    const std::size_t p = a.size();
    if (p == 0) throw ValidationError("empty system");
    if (b.size() != p) throw ValidationError("right-hand side length does not match matrix");
    std::vector<double> flat;
    flat.reserve(p * p);
    for (const auto& row : a) {
        if (row.size() != p) throw ValidationError("matrix is not square");
        require_finite(row, "matrix row");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    require_finite(b, "right-hand side");
    return eliminate(std::move(flat), b, p).solution;
}

FitReport fit_least_squares(const DesignMatrix& x, std::span<const double> y) {
    const std::size_t n = x.observations();
    const std::size_t p = x.coefficient_count();
    if (y.size() != n)
        throw ValidationError("fit_least_squares: " + std::to_string(y.size()) +
                              " targets for " + std::to_string(n) + " observations");
    require_finite(y, "target vector");

    // Normal equations, accumulated in extended precision.
    std::vector<double> xtx(p * p, 0.0);
    std::vector<double> xty(p, 0.0);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = i; j < p; ++j) {
            long double acc = 0.0L;
            for (std::size_t r = 0; r < n; ++r)
                acc += static_cast<long double>(x(r, i)) * x(r, j);
            xtx[i * p + j] = xtx[j * p + i] = static_cast<double>(acc);
        }
        long double acc = 0.0L;
        for (std::size_t r = 0; r < n; ++r) acc += static_cast<long double>(x(r, i)) * y[r];
        xty[i] = static_cast<double>(acc);
    }

    Elimination solved = eliminate(xtx, xty, p);
    std::vector<long double> beta(solved.solution.begin(), solved.solution.end());

    // Two refinement passes against the original data keep square systems at
    // interpolation accuracy even when (XtX) is poorly scaled.
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<long double> row_residual(n);
        for (std::size_t r = 0; r < n; ++r) {
            long double acc = y[r];
            for (std::size_t c = 0; c < p; ++c)
                acc -= static_cast<long double>(x(r, c)) * beta[c];
            row_residual[r] = acc;
        }
        std::vector<double> gradient(p, 0.0);
        bool all_zero = true;
        for (std::size_t c = 0; c < p; ++c) {
            long double acc = 0.0L;
            for (std::size_t r = 0; r < n; ++r)
                acc += static_cast<long double>(x(r, c)) * row_residual[r];
            gradient[c] = static_cast<double>(acc);
            if (gradient[c] != 0.0) all_zero = false;
        }
        if (all_zero) break;
        Elimination correction = eliminate(xtx, gradient, p);
        for (std::size_t c = 0; c < p; ++c) beta[c] += correction.solution[c];
    }

    FitReport report;
    report.coefficients.assign(beta.begin(), beta.end());
    report.residuals.resize(n);
    long double ssr = 0.0L;
    for (std::size_t r = 0; r < n; ++r) {
        long double acc = y[r];
        for (std::size_t c = 0; c < p; ++c)
            acc -= static_cast<long double>(x(r, c)) * report.coefficients[c];
        report.residuals[r] = static_cast<double>(acc);
        ssr += acc * acc;
    }
    report.sum_squared_residuals = static_cast<double>(ssr);
    report.exact_interpolation = (n == p);
    report.condition_warning = solved.pivot_ratio > kConditionRatioLimit;
    report.r_squared = r_squared(report, y);
    return report;
}

std::optional<double> r_squared(const FitReport& report, std::span<const double> y) {
    if (y.size() != report.residuals.size())
        throw ValidationError("r_squared: target length does not match fit");
    const std::size_t n = y.size();
    long double sum = 0.0L;
    long double energy = 0.0L;
    for (double v : y) {
        sum += v;
        energy += static_cast<long double>(v) * v;
    }
    const long double mean = sum / static_cast<long double>(n);
    long double syy = 0.0L;
    for (double v : y) {
        const long double d = v - mean;
        syy += d * d;
    }
    // Zero-variance guard: a target that is constant to rounding error has no
    // meaningful coefficient of determination.
    if (syy <= 0.0L || syy <= energy * 1e-14L) return std::nullopt;
    return static_cast<double>(1.0L - report.sum_squared_residuals / syy);
}

}  // namespace ipmkit::regression
