#include "hsss/dealer.hpp"

#include <algorithm>
#include <sstream>

#include "hsss/error.hpp"
#include "parse_util.hpp"

namespace hsss {

const char* role_name(Role r)
{
    switch (r) {
    case Role::Dealer: return "dealer";
    case Role::Group: return "group";
    case Role::Controlling: return "controlling";
    }
    throw Error("unreachable role");
}

Role role_from_name(const std::string& name)
{
    if (name == "dealer") return Role::Dealer;
    if (name == "group") return Role::Group;
    if (name == "controlling") return Role::Controlling;
    throw FormatError("unknown basis role '" + name + "'");
}

const BasisEntry& DealerState::entry(std::size_t index) const
{
    auto it = std::lower_bound(basis.begin(), basis.end(), index,
                               [](const BasisEntry& e, std::size_t i) { return e.index < i; });
    if (it == basis.end() || it->index != index)
        throw UnknownIndexError("no live basis share with index " + std::to_string(index));
    return *it;
}

bool DealerState::has_entry(std::size_t index) const
{
    auto it = std::lower_bound(basis.begin(), basis.end(), index,
                               [](const BasisEntry& e, std::size_t i) { return e.index < i; });
    return it != basis.end() && it->index == index;
}

std::vector<Share> DealerState::basis_shares() const
{
    std::vector<Share> shares;
    shares.reserve(basis.size());
    for (const BasisEntry& e : basis)
        shares.push_back(e.share);
    return shares;
}

std::vector<Share> DealerState::combiner_shares() const
{
    std::vector<Share> shares;
    for (const BasisEntry& e : basis)
        if (e.role != Role::Group)
            shares.push_back(e.share);
    return shares;
}

std::size_t DealerState::live_group_count() const
{
    std::size_t n = 0;
    for (const BasisEntry& e : basis)
        if (e.role == Role::Group)
            ++n;
    return n;
}

SecretKey DealerState::key_for(std::size_t secret_index) const
{
    if (secret_index >= secret_digests.size())
        throw UnknownIndexError("unknown secret index " + std::to_string(secret_index));
    return derive_key(secret_digests[secret_index], basis_shares());
}

bool PublicBundle::contains_share_hash(const Digest& d) const
{
    return std::binary_search(share_hashes.begin(), share_hashes.end(), d);
}

namespace {

Share sample_share(const DealerState& state, Rng& rng)
{
    for (;;) {
        Share s{rng.bytes(kShareLen)};
        bool collision = false;
        for (const BasisEntry& e : state.basis)
            if (!e.share.empty() && e.share == s) {
                collision = true;
                break;
            }
        if (!collision)
            return s;
    }
}

// Every basis-changing operation requires the caller to still hold the
// secrets: each must hash to the recorded q_j.
void require_secrets(const DealerState& state, const std::vector<Bytes>& secrets,
                     const char* op)
{
    if (secrets.size() != state.secret_digests.size())
        throw ConfigError(std::string(op) + " refused: expected " +
                          std::to_string(state.secret_digests.size()) + " secrets, got " +
                          std::to_string(secrets.size()));
    for (std::size_t j = 0; j < secrets.size(); ++j)
        if (hash(secrets[j]) != state.secret_digests[j])
            throw ConfigError(std::string(op) + " refused: secret " + std::to_string(j) +
                              " does not match its recorded digest");
}

// Derives every key from the current basis and seals the secrets fresh.
SetupResult finalize(DealerState state, const std::vector<Bytes>& secrets, Rng& rng)
{
    VaultFile vault;
    vault.epoch = state.epoch;
    std::vector<Share> shares = state.basis_shares();
    for (std::size_t j = 0; j < secrets.size(); ++j) {
        SecretKey k = derive_key(state.secret_digests[j], shares);
        vault.entries.push_back(seal(j, secrets[j], k, rng));
    }
    PublicBundle bundle = make_bundle(state);
    return SetupResult{std::move(state), std::move(bundle), std::move(vault)};
}

} // namespace

PublicBundle make_bundle(const DealerState& state)
{
    PublicBundle bundle;
    bundle.threshold = state.threshold;
    bundle.epoch = state.epoch;
    for (const BasisEntry& e : state.basis)
        bundle.share_hashes.push_back(hash(e.share.bytes));
    std::sort(bundle.share_hashes.begin(), bundle.share_hashes.end());
    for (const Digest& q : state.secret_digests)
        bundle.secret_hashes.push_back(hash(q));
    return bundle;
}

SetupResult setup(std::size_t t, const std::vector<std::size_t>& group_sizes,
                  const std::vector<Bytes>& secrets, Rng& rng, const SetupOptions& options)
{
    if (t < 1)
        throw ConfigError("threshold must be at least 1");
    if (group_sizes.size() != t)
        throw ConfigError("expected " + std::to_string(t) + " group sizes, got " +
                          std::to_string(group_sizes.size()));
    if (secrets.empty())
        throw ConfigError("at least one secret is required");
    for (std::size_t j = 0; j < secrets.size(); ++j)
        if (secrets[j].empty())
            throw ConfigError("secret " + std::to_string(j) + " is empty");

    DealerState state;
    state.threshold = t;
    state.epoch = 0;
    state.groups = GroupAssignment::from_sizes(group_sizes);

    Share dealer_share;
    if (!options.neutral_dealer)
        dealer_share = sample_share(state, rng);
    state.basis.push_back(BasisEntry{0, Role::Dealer, std::move(dealer_share)});
    for (std::size_t b = 1; b <= t; ++b)
        state.basis.push_back(BasisEntry{b, Role::Group, sample_share(state, rng)});
    state.next_index = t + 1;

    for (const Bytes& s : secrets)
        state.secret_digests.push_back(hash(s));

    return finalize(std::move(state), secrets, rng);
}

std::map<std::string, Share> distribute(const DealerState& state)
{
    std::map<std::string, Share> out;
    for (const auto& [b, members] : state.groups.groups()) {
        const Share& share = state.entry(b).share;
        for (const std::string& id : members)
            out[id] = share;
    }
    return out;
}

SetupResult refresh(const DealerState& state, const std::vector<Bytes>& secrets, Rng& rng)
{
    require_secrets(state, secrets, "refresh");
    DealerState next = state;
    next.epoch++;
    for (BasisEntry& e : next.basis)
        if (!e.share.empty())
            e.share = sample_share(next, rng); // neutral dealer stays neutral
    return finalize(std::move(next), secrets, rng);
}

SetupResult refresh_share(const DealerState& state, std::size_t b,
                          const std::vector<Bytes>& secrets, Rng& rng)
{
    require_secrets(state, secrets, "refresh-share");
    state.entry(b); // throws on a dead index
    DealerState next = state;
    next.epoch++;
    for (BasisEntry& e : next.basis)
        if (e.index == b)
            e.share = sample_share(next, rng);
    return finalize(std::move(next), secrets, rng);
}

SetupResult revoke(const DealerState& state, std::size_t b, const std::vector<Bytes>& secrets,
                   Rng& rng)
{
    if (b == 0)
        throw ConfigError("the dealer share is refreshed, not revoked");
    const BasisEntry& target = state.entry(b); // throws if already revoked
    if (state.threshold <= 1)
        throw ConfigError("revocation would leave an empty basis");
    require_secrets(state, secrets, "revoke");

    DealerState next = state;
    next.epoch++;
    next.threshold--;
    std::erase_if(next.basis, [b](const BasisEntry& e) { return e.index == b; });
    if (target.role == Role::Group)
        next.groups.remove_group(b);
    next.controlling.erase(b);
    return finalize(std::move(next), secrets, rng);
}

SetupResult swap_in_controlling(const DealerState& state, std::size_t revoked_b,
                                const std::vector<Bytes>& secrets, Rng& rng)
{
    if (revoked_b == 0 || revoked_b >= state.next_index)
        throw UnknownIndexError("index " + std::to_string(revoked_b) +
                                " was never a basis share");
    if (state.has_entry(revoked_b))
        throw ConfigError("basis share " + std::to_string(revoked_b) +
                          " is still live; revoke it first");
    require_secrets(state, secrets, "swap-in-controlling");

    DealerState next = state;
    next.epoch++;
    next.threshold++;
    std::size_t idx = next.next_index++;
    next.basis.push_back(BasisEntry{idx, Role::Controlling, sample_share(next, rng)});
    next.controlling.insert(idx);
    return finalize(std::move(next), secrets, rng);
}

SetupResult add_controlling_share(const DealerState& state, const std::vector<Bytes>& secrets,
                                  Rng& rng)
{
    require_secrets(state, secrets, "add-controlling");
    DealerState next = state;
    next.epoch++;
    next.threshold++;
    std::size_t idx = next.next_index++;
    next.basis.push_back(BasisEntry{idx, Role::Controlling, sample_share(next, rng)});
    next.controlling.insert(idx);
    return finalize(std::move(next), secrets, rng);
}

SetupResult retire_controlling_share(const DealerState& state, std::size_t b,
                                     const std::vector<Bytes>& secrets, Rng& rng)
{
    state.entry(b);
    if (!state.controlling.count(b))
        throw ConfigError("basis share " + std::to_string(b) + " is not a controlling share");
    if (state.threshold <= 1)
        throw ConfigError("retiring would leave an empty basis");
    require_secrets(state, secrets, "retire-controlling");

    DealerState next = state;
    next.epoch++;
    next.threshold--;
    std::erase_if(next.basis, [b](const BasisEntry& e) { return e.index == b; });
    next.controlling.erase(b);
    return finalize(std::move(next), secrets, rng);
}

SetupResult add_group_share(const DealerState& state, const std::vector<std::string>& members,
                            const std::vector<Bytes>& secrets, Rng& rng)
{
    require_secrets(state, secrets, "add-group");
    DealerState next = state;
    next.epoch++;
    next.threshold++;
    std::size_t idx = next.next_index++;
    next.groups.add_group(idx, members);
    next.basis.push_back(BasisEntry{idx, Role::Group, sample_share(next, rng)});
    return finalize(std::move(next), secrets, rng);
}

SetupResult update_secret(const DealerState& state, const VaultFile& vault, std::size_t j,
                          const Bytes& new_secret, Rng& rng)
{
    if (j >= state.secret_digests.size())
        throw UnknownIndexError("unknown secret index " + std::to_string(j));
    if (new_secret.empty())
        throw ConfigError("secret " + std::to_string(j) + " is empty");
    if (vault.entries.size() != state.secret_digests.size())
        throw ConfigError("vault does not match dealer state");

    DealerState next = state;
    next.epoch++;
    next.secret_digests[j] = hash(new_secret);

    VaultFile next_vault = vault;
    next_vault.epoch = next.epoch;
    SecretKey k = derive_key(next.secret_digests[j], next.basis_shares());
    next_vault.entries[j] = seal(j, new_secret, k, rng);

    PublicBundle bundle = make_bundle(next);
    return SetupResult{std::move(next), std::move(bundle), std::move(next_vault)};
}

std::string dealer_state_to_string(const DealerState& state)
{
    std::ostringstream out;
    out << "HSSS-DEALER v1\n";
    out << "hash " << kHashAlgId << "\n";
    out << "t " << state.threshold << "\n";
    out << "epoch " << state.epoch << "\n";
    for (const BasisEntry& e : state.basis)
        out << "basis " << e.index << ' ' << role_name(e.role) << ' ' << share_to_hex(e.share)
            << "\n";
    for (const auto& [b, members] : state.groups.groups()) {
        out << "group " << b << ' ';
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i)
                out << ',';
            out << members[i];
        }
        out << "\n";
    }
    for (std::size_t j = 0; j < state.secret_digests.size(); ++j)
        out << "q " << j << ' ' << digest_to_hex(state.secret_digests[j]) << "\n";
    return out.str();
}

DealerState dealer_state_from_string(const std::string& text)
{
    using detail::expect_field;
    using detail::parse_u64;

    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "HSSS-DEALER v1")
        throw FormatError("dealer state: bad or missing version line");
    if (expect_field(in, "hash", "dealer state") != kHashAlgId)
        throw FormatError("dealer state: unsupported hash algorithm");

    DealerState state;
    state.threshold = parse_u64(expect_field(in, "t", "dealer state"), "dealer state");
    state.epoch = parse_u64(expect_field(in, "epoch", "dealer state"), "dealer state");

    std::size_t expected_q = 0;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "basis") {
            BasisEntry e;
            std::string role, share_hex;
            if (!(ls >> e.index >> role >> share_hex))
                throw FormatError("dealer state: malformed basis line");
            e.role = role_from_name(role);
            e.share = share_from_hex(share_hex);
            if (!state.basis.empty() && e.index <= state.basis.back().index)
                throw FormatError("dealer state: basis indices must ascend");
            if (e.role == Role::Controlling)
                state.controlling.insert(e.index);
            state.basis.push_back(std::move(e));
        } else if (tag == "group") {
            std::size_t b = 0;
            std::string members_csv;
            if (!(ls >> b >> members_csv))
                throw FormatError("dealer state: malformed group line");
            std::vector<std::string> members;
            std::istringstream ms(members_csv);
            std::string id;
            while (std::getline(ms, id, ','))
                members.push_back(id);
            state.groups.add_group(b, std::move(members));
        } else if (tag == "q") {
            std::size_t j = 0;
            std::string digest_hex;
            if (!(ls >> j >> digest_hex))
                throw FormatError("dealer state: malformed q line");
            if (j != expected_q++)
                throw FormatError("dealer state: q indices must be 0,1,2,...");
            state.secret_digests.push_back(digest_from_hex(digest_hex));
        } else {
            throw FormatError("dealer state: unexpected line '" + line + "'");
        }
    }

    if (state.basis.empty() || state.basis.front().index != 0 ||
        state.basis.front().role != Role::Dealer)
        throw FormatError("dealer state: basis index 0 must be the dealer share");
    if (state.basis.size() != state.threshold + 1)
        throw FormatError("dealer state: basis must have t+1 entries");
    if (state.secret_digests.empty())
        throw FormatError("dealer state: at least one q line required");
    for (const BasisEntry& e : state.basis) {
        if (e.role == Role::Group && !state.groups.has_group(e.index))
            throw FormatError("dealer state: group basis share " + std::to_string(e.index) +
                              " has no group line");
    }
    for (const auto& [b, members] : state.groups.groups())
        if (!state.has_entry(b) || state.entry(b).role != Role::Group)
            throw FormatError("dealer state: group " + std::to_string(b) +
                              " has no matching basis share");
    state.next_index = state.basis.back().index + 1;
    return state;
}

std::string bundle_to_string(const PublicBundle& bundle)
{
    std::ostringstream out;
    out << "HSSS-PUBLIC v1\n";
    out << "hash " << bundle.hash_alg << "\n";
    out << "t " << bundle.threshold << "\n";
    out << "epoch " << bundle.epoch << "\n";
    for (const Digest& g : bundle.share_hashes)
        out << "g " << digest_to_hex(g) << "\n";
    for (std::size_t j = 0; j < bundle.secret_hashes.size(); ++j)
        out << "r " << j << ' ' << digest_to_hex(bundle.secret_hashes[j]) << "\n";
    return out.str();
}

PublicBundle bundle_from_string(const std::string& text)
{
    using detail::expect_field;
    using detail::parse_u64;

    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "HSSS-PUBLIC v1")
        throw FormatError("bundle: bad or missing version line");

    PublicBundle bundle;
    bundle.hash_alg = expect_field(in, "hash", "bundle");
    if (bundle.hash_alg != kHashAlgId)
        throw FormatError("bundle: unsupported hash algorithm");
    bundle.threshold = parse_u64(expect_field(in, "t", "bundle"), "bundle");
    bundle.epoch = parse_u64(expect_field(in, "epoch", "bundle"), "bundle");

    std::size_t expected_r = 0;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "g") {
            std::string hex;
            if (!(ls >> hex))
                throw FormatError("bundle: malformed g line");
            Digest d = digest_from_hex(hex);
            if (!bundle.share_hashes.empty() && !(bundle.share_hashes.back() < d))
                throw FormatError("bundle: g lines must be in ascending hex order");
            bundle.share_hashes.push_back(d);
        } else if (tag == "r") {
            std::size_t j = 0;
            std::string hex;
            if (!(ls >> j >> hex))
                throw FormatError("bundle: malformed r line");
            if (j != expected_r++)
                throw FormatError("bundle: r indices must be 0,1,2,...");
            bundle.secret_hashes.push_back(digest_from_hex(hex));
        } else {
            throw FormatError("bundle: unexpected line '" + line + "'");
        }
    }
    if (bundle.share_hashes.size() != bundle.threshold + 1)
        throw FormatError("bundle: expected t+1 g lines");
    return bundle;
}

} // namespace hsss
