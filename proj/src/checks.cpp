#include "mfcat/checks.hpp"

namespace mfcat {

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::FalseAtBound: return "false-at-bound";
    }
    return "fail";
}

const std::vector<CheckDef>& check_registry() {
    static const std::vector<CheckDef> reg = [] {
        std::vector<CheckDef> r;
        add_perm_checks(r);
        add_ring_checks(r);
        return r;
    }();
    return reg;
}

const CheckDef* find_check(const std::string& name) {
    for (auto& c : check_registry())
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace mfcat
