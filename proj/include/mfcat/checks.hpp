#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mfcat/mf_core.hpp"

namespace mfcat {

enum class Status { Pass, Fail, FalseAtBound };
const char* status_name(Status s);

struct CaseReport {
    std::string check;
    int d = 0;
    std::vector<std::pair<std::string, std::string>> params;  // in insertion order
    Status status = Status::Fail;
    std::string witness;  // serialised homotopy or exact scalar
    std::string scalar;
    std::string note;
    int degree_bound = 0;
    long runtime_ms = 0;
};

struct CheckDef {
    std::string name;
    std::string summary;
    std::function<std::vector<CaseReport>(int d, const SolveOptions& opt)> run;
    int min_d = 3;
};

// Every named check, in a fixed order.
const std::vector<CheckDef>& check_registry();
const CheckDef* find_check(const std::string& name);

// Checks on the permutation-type category, appended to the registry.
void add_perm_checks(std::vector<CheckDef>& reg);
// Temperley-Lieb, V_d and equivalence checks.
void add_ring_checks(std::vector<CheckDef>& reg);

}  // namespace mfcat
