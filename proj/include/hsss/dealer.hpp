#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hsss/access.hpp"
#include "hsss/bytes.hpp"
#include "hsss/hashcore.hpp"
#include "hsss/rng.hpp"
#include "hsss/vault.hpp"

namespace hsss {

enum class Role { Dealer, Group, Controlling };

const char* role_name(Role r);
Role role_from_name(const std::string& name);

struct BasisEntry {
    std::size_t index = 0;
    Role role = Role::Group;
    Share share;

    bool operator==(const BasisEntry&) const = default;
};

// Private dealer material. Basis indices are stable identifiers: once an
// index is revoked it is never handed out again, so audit trails stay
// unambiguous. The high-water mark is reconstructed from the surviving
// indices when a state file is loaded.
struct DealerState {
    std::size_t threshold = 0; // t; the basis always has t+1 entries
    std::uint64_t epoch = 0;
    std::vector<BasisEntry> basis; // ascending index; index 0 is the dealer
    GroupAssignment groups;        // live groups, keyed by basis index
    std::vector<Digest> secret_digests; // q_j
    std::set<std::size_t> controlling;  // dealer-held indices beyond index 0
    std::size_t next_index = 0;

    const BasisEntry& entry(std::size_t index) const;
    bool has_entry(std::size_t index) const;
    std::vector<Share> basis_shares() const;
    // Shares the combiner contributes at recovery: s*_0 plus all
    // dealer-held controlling shares.
    std::vector<Share> combiner_shares() const;
    std::size_t live_group_count() const;
    SecretKey key_for(std::size_t secret_index) const;
};

// Published verification material: g* (sorted share hashes) and r*
// (double secret hashes, indexed by secret).
struct PublicBundle {
    std::string hash_alg = kHashAlgId;
    std::size_t threshold = 0;
    std::uint64_t epoch = 0;
    std::vector<Digest> share_hashes;  // g*, ascending digest order
    std::vector<Digest> secret_hashes; // r*, index order

    bool contains_share_hash(const Digest& d) const;
    bool operator==(const PublicBundle&) const = default;
};

struct SetupResult {
    DealerState state;
    PublicBundle bundle;
    VaultFile vault;
};

struct SetupOptions {
    // When set, s*_0 is the empty share: the dealer is neutral and its
    // share drops out of every key computation.
    bool neutral_dealer = false;
};

// Generates the t+1 share basis, derives every k_j, seals the secrets and
// builds the verification bundle. Group b receives basis index b.
SetupResult setup(std::size_t t, const std::vector<std::size_t>& group_sizes,
                  const std::vector<Bytes>& secrets, Rng& rng,
                  const SetupOptions& options = {});

// Participant -> share. The dealer share and controlling shares are never
// distributed.
std::map<std::string, Share> distribute(const DealerState& state);

// Proactive refresh: an entirely new basis, epoch + 1, vault re-sealed.
// r* is untouched when the secrets are unchanged.
SetupResult refresh(const DealerState& state, const std::vector<Bytes>& secrets, Rng& rng);

// Replaces only s*_b; every key changes because xi changed.
SetupResult refresh_share(const DealerState& state, std::size_t b,
                          const std::vector<Bytes>& secrets, Rng& rng);

// Removes s*_b from the basis and decrements the threshold. Members of a
// revoked group become unable to contribute.
SetupResult revoke(const DealerState& state, std::size_t b,
                   const std::vector<Bytes>& secrets, Rng& rng);

// Fills the slot left by a revocation with a fresh dealer-held controlling
// share, restoring the pre-revocation threshold and |g*|.
SetupResult swap_in_controlling(const DealerState& state, std::size_t revoked_b,
                                const std::vector<Bytes>& secrets, Rng& rng);

// Mints an extra dealer-held basis share; t and |g*| grow by one.
SetupResult add_controlling_share(const DealerState& state, const std::vector<Bytes>& secrets,
                                  Rng& rng);

// Revokes a controlling share; t and |g*| shrink by one.
SetupResult retire_controlling_share(const DealerState& state, std::size_t b,
                                     const std::vector<Bytes>& secrets, Rng& rng);

// Admits a new group of participants with a freshly minted share.
SetupResult add_group_share(const DealerState& state, const std::vector<std::string>& members,
                            const std::vector<Bytes>& secrets, Rng& rng);

// Re-keys secret j only: q_j, r_j and the vault entry change, the basis and
// g* do not. Other vault entries are untouched byte-for-byte.
SetupResult update_secret(const DealerState& state, const VaultFile& vault, std::size_t j,
                          const Bytes& new_secret, Rng& rng);

PublicBundle make_bundle(const DealerState& state);

std::string dealer_state_to_string(const DealerState& state);
DealerState dealer_state_from_string(const std::string& text);
std::string bundle_to_string(const PublicBundle& bundle);
PublicBundle bundle_from_string(const std::string& text);

} // namespace hsss
