#include "hsss/access.hpp"

#include "hsss/error.hpp"

namespace hsss {

GroupAssignment GroupAssignment::from_sizes(const std::vector<std::size_t>& group_sizes)
{
    if (group_sizes.empty())
        throw ConfigError("at least one group is required");
    GroupAssignment ga;
    std::size_t next_id = 1;
    for (std::size_t b = 1; b <= group_sizes.size(); ++b) {
        std::size_t n_b = group_sizes[b - 1];
        if (n_b == 0)
            throw ConfigError("group " + std::to_string(b) + " has zero members");
        std::vector<std::string> members;
        members.reserve(n_b);
        for (std::size_t i = 0; i < n_b; ++i)
            members.push_back("P" + std::to_string(next_id++));
        ga.add_group(b, std::move(members));
    }
    return ga;
}

void GroupAssignment::add_group(std::size_t b, std::vector<std::string> members)
{
    if (b == 0)
        throw ConfigError("group index 0 is reserved for the dealer");
    if (members.empty())
        throw ConfigError("group " + std::to_string(b) + " has zero members");
    if (groups_.count(b))
        throw ConfigError("group " + std::to_string(b) + " already exists");
    std::set<std::string> batch;
    for (const auto& id : members)
        if (participant_to_group_.count(id) || !batch.insert(id).second)
            throw ConfigError("participant " + id + " already assigned");
    for (const auto& id : members) {
        participant_to_group_[id] = b;
        former_.erase(id);
    }
    groups_[b] = std::move(members);
}

void GroupAssignment::remove_group(std::size_t b)
{
    auto it = groups_.find(b);
    if (it == groups_.end())
        throw UnknownIndexError("no live group " + std::to_string(b));
    for (const auto& id : it->second) {
        participant_to_group_.erase(id);
        former_.insert(id);
    }
    groups_.erase(it);
}

const std::vector<std::string>& GroupAssignment::members(std::size_t b) const
{
    auto it = groups_.find(b);
    if (it == groups_.end())
        throw UnknownIndexError("no live group " + std::to_string(b));
    return it->second;
}

bool GroupAssignment::known(const std::string& participant) const
{
    return participant_to_group_.count(participant) != 0 || former_.count(participant) != 0;
}

std::size_t GroupAssignment::group_of(const std::string& participant) const
{
    auto it = participant_to_group_.find(participant);
    if (it != participant_to_group_.end())
        return it->second;
    if (former_.count(participant))
        return 0;
    throw ForeignParticipantError(participant);
}

std::size_t GroupAssignment::participant_count() const
{
    return participant_to_group_.size();
}

std::vector<std::size_t> GroupAssignment::group_sizes() const
{
    std::vector<std::size_t> sizes;
    sizes.reserve(groups_.size());
    for (const auto& [b, members] : groups_)
        sizes.push_back(members.size());
    return sizes;
}

bool is_authorized(const std::set<std::string>& subset, const GroupAssignment& ga)
{
    std::set<std::size_t> covered;
    for (const auto& id : subset) {
        std::size_t b = ga.group_of(id); // throws on foreign ids
        if (b != 0)
            covered.insert(b);
    }
    return covered.size() == ga.group_count();
}

bool is_minimal_authorized(const std::set<std::string>& subset, const GroupAssignment& ga)
{
    if (!is_authorized(subset, ga))
        return false;
    for (const auto& id : subset) {
        std::set<std::string> reduced = subset;
        reduced.erase(id);
        if (is_authorized(reduced, ga))
            return false;
    }
    return true;
}

std::uint64_t count_minimal_authorized(const GroupAssignment& ga)
{
    std::uint64_t product = 1;
    for (const auto& [b, members] : ga.groups())
        product *= members.size();
    return product;
}

} // namespace hsss
