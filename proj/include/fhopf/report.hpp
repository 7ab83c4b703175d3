#ifndef FHOPF_REPORT_HPP
#define FHOPF_REPORT_HPP

#include <string>
#include <vector>

namespace fhopf {

/// Outcome of one named identity.
struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Ordered list of checks; a report passes when every check passes.
class Report {
   public:
    Report() = default;

    void add(std::string name, bool passed, std::string detail = {}) {
        checks_.push_back({std::move(name), passed, std::move(detail)});
    }
    /// Appends the checks of `other`, prefixing their names.
    void merge(const Report& other, const std::string& prefix = {}) {
        for (const Check& c : other.checks_) checks_.push_back({prefix + c.name, c.passed, c.detail});
    }

    bool passed() const {
        for (const Check& c : checks_)
            if (!c.passed) return false;
        return true;
    }
    const Check* first_failure() const {
        for (const Check& c : checks_)
            if (!c.passed) return &c;
        return nullptr;
    }
    const Check* find(const std::string& name) const {
        for (const Check& c : checks_)
            if (c.name == name) return &c;
        return nullptr;
    }
    const std::vector<Check>& checks() const { return checks_; }

   private:
    std::vector<Check> checks_;
};

}  // namespace fhopf

#endif  // FHOPF_REPORT_HPP
