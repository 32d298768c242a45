#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hsss/bytes.hpp"
#include "hsss/dealer.hpp"
#include "hsss/hashcore.hpp"
#include "hsss/vault.hpp"

namespace hsss {

struct RecoveryRequest {
    std::size_t secret_index = 0;
    std::vector<std::pair<std::string, Share>> submitted; // (participant, share)
};

// True iff hash(share) is in the published verification set g*.
bool validate_share(const Share& share, const PublicBundle& bundle);

// Combiner-side recovery:
//   1. every submitted share must be in g* (InvalidShareError names the sender),
//   2. the distinct non-empty shares must number exactly the live group count
//      (InsufficientSharesError / ExcessSharesError report have vs need),
//   3. the combiner completes the basis with the dealer share and all
//      controlling shares, derives k_j and opens vault entry j.
// A failed vault tag (AuthenticationError) signals a state/bundle mismatch;
// no plaintext is released on any failure path.
Bytes recover(const RecoveryRequest& req, const DealerState& state, const PublicBundle& bundle,
              const VaultFile& vault);

// True iff h(h(secret)) equals r*[j].
bool verify_recovered_secret(const Bytes& secret, std::size_t j, const PublicBundle& bundle);

} // namespace hsss
