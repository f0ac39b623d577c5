#include "sll/report.hpp"

#include <sstream>

namespace sll {

std::string to_string(ClauseStatus s) {
    switch (s) {
        case ClauseStatus::pass: return "pass";
        case ClauseStatus::fail: return "fail";
        case ClauseStatus::inapplicable: return "inapplicable";
    }
    return "?";
}

void TheoremReport::check(const std::string& id, bool ok, const std::string& detail_on_fail) {
    clauses_.push_back(Clause{id, ok ? ClauseStatus::pass : ClauseStatus::fail,
                              ok ? std::string{} : detail_on_fail});
}

void TheoremReport::mark_inapplicable(const std::string& id, const std::string& why) {
    clauses_.push_back(Clause{id, ClauseStatus::inapplicable, why});
}

bool TheoremReport::all_passed() const {
    return failure_count() == 0;
}

std::size_t TheoremReport::failure_count() const {
    std::size_t n = 0;
    for (const auto& c : clauses_) {
        if (c.status == ClauseStatus::fail) ++n;
    }
    return n;
}

const Clause* TheoremReport::find(const std::string& id) const {
    for (const auto& c : clauses_) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

std::string TheoremReport::summary() const {
    std::ostringstream os;
    os << name_ << ": ";
    std::size_t pass = 0, fail = 0, na = 0;
    for (const auto& c : clauses_) {
        switch (c.status) {
            case ClauseStatus::pass: ++pass; break;
            case ClauseStatus::fail: ++fail; break;
            case ClauseStatus::inapplicable: ++na; break;
        }
    }
    os << pass << " pass, " << fail << " fail, " << na << " inapplicable";
    if (fail > 0) {
        for (const auto& c : clauses_) {
            if (c.status == ClauseStatus::fail) {
                os << "\n  FAIL " << c.id << (c.detail.empty() ? "" : ": " + c.detail);
            }
        }
    }
    return os.str();
}

}  // namespace sll
