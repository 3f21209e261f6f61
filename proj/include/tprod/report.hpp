#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tprod {

struct ResidualCheck {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Named residuals of the defining identities of one computation. The report passes exactly
/// when every check passes.
class ResidualReport {
public:
    ResidualReport() = default;
    explicit ResidualReport(std::string operation) : operation_(std::move(operation)) {}

    /// Adds a check that passes when residual <= tolerance. A NaN residual fails.
    void add(std::string name, double residual, double tolerance);
    /// Appends the checks of another report, prefixing their names.
    void merge(const ResidualReport& other, const std::string& prefix = {});

    const std::string& operation() const { return operation_; }
    const std::vector<ResidualCheck>& checks() const { return checks_; }
    const ResidualCheck* find(const std::string& name) const;
    /// Residual of a named check; throws std::out_of_range when absent.
    double residual(const std::string& name) const;
    bool pass() const;
    double seconds() const { return seconds_; }
    void set_seconds(double s) { seconds_ = s; }

private:
    std::string operation_;
    std::vector<ResidualCheck> checks_;
    double seconds_ = 0.0;
};

/// Uniform tolerance override (the CLI's --tol). When set, every check uses this value in
/// place of its default.
struct ToleranceOverride {
    std::optional<double> value;
    double operator()(double fallback) const { return value ? *value : fallback; }
};

} // namespace tprod
