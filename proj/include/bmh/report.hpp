// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bmh/report.hpp
//! Check results shared by the verification suites.
//---------------------------------------------------------------------------//
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace bmh {

//! One evaluated identity or inequality. For inequalities lhs >= rhs is
//! expected; slack is (lhs - rhs) relative to the larger magnitude.
struct CheckResult {
    std::string id;
    double lhs = 0;
    double rhs = 0;
    double slack = 0;
    double tol = 0;
    std::string status;   //!< "pass", "fail" or "report" (measured, not asserted)
    std::string flag;     //!< e.g. "equality(ball)"

    bool failed() const { return status == "fail"; }
};

inline double relative_slack(double lhs, double rhs) {
    double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return (lhs - rhs) / scale;
}

inline CheckResult inequality_check(std::string id, double lhs, double rhs, double tol) {
    double s = relative_slack(lhs, rhs);
    return {std::move(id), lhs, rhs, s, tol, s >= -tol ? "pass" : "fail", ""};
}

inline CheckResult identity_check(std::string id, double lhs, double rhs, double tol) {
    double s = relative_slack(lhs, rhs);
    return {std::move(id), lhs, rhs, s, tol, std::abs(s) <= tol ? "pass" : "fail", ""};
}

//! Absolute deviation against a bound, e.g. a grid residual.
inline CheckResult bound_check(std::string id, double value, double bound) {
    return {std::move(id), value, bound, bound - value, bound, value <= bound ? "pass" : "fail", ""};
}

inline CheckResult measured(std::string id, double value, double reference = 0) {
    return {std::move(id), value, reference, relative_slack(value, reference), 0, "report", ""};
}

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;
    //! Ordered so that serialization is deterministic.
    std::map<std::string, std::string> environment;

    bool passed() const {
        return std::none_of(checks.begin(), checks.end(),
                            [](const CheckResult& c) { return c.failed(); });
    }
    int failures() const {
        return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                              [](const CheckResult& c) { return c.failed(); }));
    }
    void add(CheckResult c) { checks.push_back(std::move(c)); }
    void add(const std::vector<CheckResult>& cs) { checks.insert(checks.end(), cs.begin(), cs.end()); }
};

} // namespace bmh
