#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sll {

enum class ClauseStatus { pass, fail, inapplicable };

std::string to_string(ClauseStatus s);

/// One checked identity. `id` is a stable machine-readable tag; `detail`
/// carries witness data on failure (the offending n and the unequal
/// subspaces) or a short note for inapplicable clauses.
struct Clause {
    std::string id;
    ClauseStatus status = ClauseStatus::pass;
    std::string detail;
};

/// Result of one verifier: a named bundle of clauses. Failures are data, not
/// errors; preconditions that do not hold raise exceptions instead.
class TheoremReport {
public:
    explicit TheoremReport(std::string name) : name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }
    const std::vector<Clause>& clauses() const noexcept { return clauses_; }

    void check(const std::string& id, bool ok, const std::string& detail_on_fail = "");
    void mark_inapplicable(const std::string& id, const std::string& why);
    void append(Clause clause) { clauses_.push_back(std::move(clause)); }

    bool all_passed() const;  // inapplicable clauses do not count as failures
    std::size_t failure_count() const;
    const Clause* find(const std::string& id) const;

    std::string summary() const;

private:
    std::string name_;
    std::vector<Clause> clauses_;
};

}  // namespace sll
