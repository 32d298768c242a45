#include "hsss/recovery.hpp"

#include <algorithm>

#include "hsss/error.hpp"

namespace hsss {

bool validate_share(const Share& share, const PublicBundle& bundle)
{
    return bundle.contains_share_hash(hash(share.bytes));
}

Bytes recover(const RecoveryRequest& req, const DealerState& state, const PublicBundle& bundle,
              const VaultFile& vault)
{
    if (state.epoch != bundle.epoch || state.epoch != vault.epoch)
        throw EpochMismatchError("state epoch " + std::to_string(state.epoch) +
                                 ", bundle epoch " + std::to_string(bundle.epoch) +
                                 ", vault epoch " + std::to_string(vault.epoch));
    std::size_t j = req.secret_index;
    const VaultEntry* entry = nullptr;
    for (const VaultEntry& e : vault.entries)
        if (e.index == j)
            entry = &e;
    if (j >= state.secret_digests.size() || entry == nullptr)
        throw UnknownIndexError("unknown secret index " + std::to_string(j));

    for (const auto& [participant, share] : req.submitted)
        if (!validate_share(share, bundle))
            throw InvalidShareError(participant);

    std::vector<Share> submitted;
    submitted.reserve(req.submitted.size());
    for (const auto& [participant, share] : req.submitted)
        submitted.push_back(share);
    std::vector<Share> distinct = order_shares(std::move(submitted));

    // Participants must cover every live group; the dealer-held shares are
    // added by the combiner below.
    std::size_t need = state.live_group_count();
    if (distinct.size() < need)
        throw InsufficientSharesError(distinct.size(), need);
    if (distinct.size() > need)
        throw ExcessSharesError(distinct.size(), need);

    std::vector<Share> basis = distinct;
    for (Share& s : state.combiner_shares())
        basis.push_back(std::move(s));

    SecretKey k = derive_key(state.secret_digests[j], basis);
    return open_entry(*entry, k);
}

bool verify_recovered_secret(const Bytes& secret, std::size_t j, const PublicBundle& bundle)
{
    if (j >= bundle.secret_hashes.size())
        throw UnknownIndexError("unknown secret index " + std::to_string(j));
    return hash(hash(secret)) == bundle.secret_hashes[j];
}

} // namespace hsss
