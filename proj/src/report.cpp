#include "tprod/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tprod {

void ResidualReport::add(std::string name, double residual, double tolerance) {
    const double r = std::isnan(residual) ? residual : std::abs(residual);
    checks_.push_back({std::move(name), r, tolerance, !std::isnan(r) && r <= tolerance});
}

void ResidualReport::merge(const ResidualReport& other, const std::string& prefix) {
    for (const auto& c : other.checks()) {
        checks_.push_back({prefix + c.name, c.residual, c.tolerance, c.pass});
    }
}

const ResidualCheck* ResidualReport::find(const std::string& name) const {
    auto it = std::find_if(checks_.begin(), checks_.end(),
                           [&](const ResidualCheck& c) { return c.name == name; });
    return it == checks_.end() ? nullptr : &*it;
}

double ResidualReport::residual(const std::string& name) const {
    if (const auto* c = find(name)) {
        return c->residual;
    }
    throw std::out_of_range("no check named " + name + " in report " + operation_);
}

bool ResidualReport::pass() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const ResidualCheck& c) { return c.pass; });
}

} // namespace tprod
