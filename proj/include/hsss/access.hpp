#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace hsss {

// Partition of the participants into live groups, keyed by basis index b.
// The dealer holds s*_0 outside any group, so group indices start at 1.
// Members of a revoked group stay registered (they are not foreign ids)
// but cover nothing in the access predicate.
class GroupAssignment {
public:
    GroupAssignment() = default;

    // Auto-assigns participant ids P1..Pn, filling groups 1..t in order.
    static GroupAssignment from_sizes(const std::vector<std::size_t>& group_sizes);

    void add_group(std::size_t b, std::vector<std::string> members);
    void remove_group(std::size_t b);

    bool has_group(std::size_t b) const { return groups_.count(b) != 0; }
    const std::vector<std::string>& members(std::size_t b) const;
    const std::map<std::size_t, std::vector<std::string>>& groups() const { return groups_; }

    bool known(const std::string& participant) const;
    // Group index of a participant, or 0 if its group was revoked.
    // Throws ForeignParticipantError for ids never registered.
    std::size_t group_of(const std::string& participant) const;

    std::size_t group_count() const { return groups_.size(); }
    std::size_t participant_count() const;
    std::vector<std::size_t> group_sizes() const;

private:
    std::map<std::size_t, std::vector<std::string>> groups_;
    std::map<std::string, std::size_t> participant_to_group_;
    std::set<std::string> former_; // members of revoked groups
};

// True iff the subset contains at least one member of every live group.
bool is_authorized(const std::set<std::string>& subset, const GroupAssignment& ga);

// True iff authorized and removing any single member breaks authorization.
bool is_minimal_authorized(const std::set<std::string>& subset, const GroupAssignment& ga);

// Product of the live group sizes.
std::uint64_t count_minimal_authorized(const GroupAssignment& ga);

} // namespace hsss
