#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace ipmkit::regression {

// A pivot is declared singular when its magnitude, relative to the largest
// magnitude in its own row, falls to this tolerance or below.
inline constexpr double kPivotTolerance = 1e-10;

// Ratio of largest to smallest accepted (scaled) pivot above which a fit is
// flagged as poorly conditioned.
inline constexpr double kConditionRatioLimit = 1e8;

// Observation matrix with a leading intercept column of ones. Row-major.
class DesignMatrix {
public:
    std::size_t observations() const noexcept { return rows_; }
    std::size_t coefficient_count() const noexcept { return cols_; }  // regressors + 1

    double operator()(std::size_t row, std::size_t col) const {
        return cells_[row * cols_ + col];
    }
    std::span<const double> row(std::size_t r) const {
        return {cells_.data() + r * cols_, cols_};
    }

    friend DesignMatrix build_design_matrix(const std::vector<std::vector<double>>& regressor_rows);

private:
    DesignMatrix() = default;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> cells_;
};

// Prepends the intercept column. Rows must be non-empty, rectangular, finite.
DesignMatrix build_design_matrix(const std::vector<std::vector<double>>& regressor_rows);

struct SumsOfSquares {
    double sxx = 0.0;
    double syy = 0.0;
    double sxy = 0.0;
};

// Corrected sums of squares and cross products over paired samples.
SumsOfSquares sums_of_squares(std::span<const double> x, std::span<const double> y);

struct FitReport {
    std::vector<double> coefficients;  // beta0..betak
    std::vector<double> residuals;     // y_i - yhat_i
    double sum_squared_residuals = 0.0;
    std::optional<double> r_squared;   // empty when the target has zero variance
    bool exact_interpolation = false;  // square system solved exactly
    bool condition_warning = false;
};

// Solves A x = b by Gaussian elimination with scaled partial pivoting.
// Throws SingularSystemError naming the first column whose pivot fails.
std::vector<double> solve_linear_system(const std::vector<std::vector<double>>& a,
                                        const std::vector<double>& b);

// Ordinary least squares through the normal equations (XtX) beta = Xt y.
FitReport fit_least_squares(const DesignMatrix& x, std::span<const double> y);

// Coefficient of determination, 1 - SSres/Syy; empty when Syy is zero.
std::optional<double> r_squared(const FitReport& report, std::span<const double> y);

}  // namespace ipmkit::regression
