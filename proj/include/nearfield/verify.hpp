#pragma once

// Self-check suite behind `nearfield verify`: disk sandwich bounds, limit
// recombination, sum vs integral, closed form vs quadrature, CAP/SPD scaling and
// the reported ratio anchors.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "nearfield/field_kernels.hpp"

namespace nearfield {

struct VerifyOptions {
    double rel_tol = 1e-11;  // quadrature tolerance for the gain integrals
    /// Deliberate fault: multiply every use of this kernel order in the oracle
    /// checks by (1 + perturb_amount). Used to confirm the suite can fail.
    std::optional<KernelOrder> perturb_order;
    double perturb_amount = 1e-3;
};

struct VerifyCheck {
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_passed() const;
    std::vector<int> orders_covered;
};

VerifyReport run_verify(const VerifyOptions& options = {});

nlohmann::json to_json(const VerifyReport& report);

}  // namespace nearfield
