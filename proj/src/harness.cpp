#include "hsss/harness.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hsss/dealer.hpp"
#include "hsss/error.hpp"
#include "hsss/hashcore.hpp"
#include "hsss/recovery.hpp"
#include "hsss/rng.hpp"

namespace hsss {

namespace {

constexpr const char* kCombiner = "D";

std::string share_tag(const Bytes& payload) {
    // 16 hex chars of the payload's hash: enough to correlate transcript
    // lines without reproducing secret material.
    return hex_encode(hash(payload).bytes).substr(0, 16);
}

Share flip_first_bit(Share s) {
    if (s.bytes.empty()) {
        s.bytes.assign(kShareLen, 0);
    }
    s.bytes[0] ^= 0x01;
    return s;
}

const char* fault_name(FaultKind kind) {
    switch (kind) {
    case FaultKind::DealerCorrupt: return "dealer-corrupt";
    case FaultKind::ParticipantCorrupt: return "participant-corrupt";
    case FaultKind::ParticipantStale: return "participant-stale";
    }
    throw ConfigError("unreachable fault kind");
}

FaultKind fault_from_name(const std::string& name) {
    if (name == "dealer-corrupt") return FaultKind::DealerCorrupt;
    if (name == "participant-corrupt") return FaultKind::ParticipantCorrupt;
    if (name == "participant-stale") return FaultKind::ParticipantStale;
    throw FormatError("unknown fault kind: " + name);
}

// Event emission helpers keep the line grammar in one place.
void emit_message(Transcript& t, MessageKind kind, std::string from, std::string to,
                  std::string detail, Bytes payload = {}) {
    t.events.push_back({TranscriptEvent::Type::Message, kind, std::move(from), std::move(to),
                        std::move(detail), std::move(payload)});
}

void emit_decision(Transcript& t, bool accepted, std::string party, std::string detail) {
    t.events.push_back({accepted ? TranscriptEvent::Type::Accept : TranscriptEvent::Type::Reject,
                        MessageKind::Rejection, std::move(party), "", std::move(detail), {}});
}

} // namespace

const char* message_kind_name(MessageKind kind) {
    switch (kind) {
    case MessageKind::ShareDelivery: return "ShareDelivery";
    case MessageKind::BundlePublish: return "BundlePublish";
    case MessageKind::RecoveryRequest: return "RecoveryRequest";
    case MessageKind::ShareSubmission: return "ShareSubmission";
    case MessageKind::SecretDelivery: return "SecretDelivery";
    case MessageKind::Rejection: return "Rejection";
    }
    throw ConfigError("unreachable message kind");
}

Scenario scenario_from_string(const std::string& text) {
    Scenario s;
    bool saw_groups = false;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string key;
        fields >> key;
        if (key == "groups") {
            std::string csv;
            if (!(fields >> csv)) throw FormatError("groups directive needs a size list");
            s.group_sizes.clear();
            std::istringstream sizes(csv);
            std::string item;
            while (std::getline(sizes, item, ',')) {
                std::size_t pos = 0;
                unsigned long v = 0;
                try {
                    v = std::stoul(item, &pos);
                } catch (const std::exception&) {
                    throw FormatError("bad group size: " + item);
                }
                if (pos != item.size() || v == 0) throw FormatError("bad group size: " + item);
                s.group_sizes.push_back(v);
            }
            if (s.group_sizes.empty()) throw FormatError("groups directive needs a size list");
            saw_groups = true;
        } else if (key == "secrets") {
            if (!(fields >> s.secret_count) || s.secret_count == 0)
                throw FormatError("secrets directive needs a positive count");
        } else if (key == "seed") {
            if (!(fields >> s.seed)) throw FormatError("seed directive needs an integer");
        } else if (key == "fault") {
            std::string kind, pid;
            if (!(fields >> kind >> pid)) throw FormatError("fault directive needs kind and participant");
            s.faults.push_back({fault_from_name(kind), pid});
        } else {
            throw FormatError("unknown scenario directive: " + key);
        }
        std::string extra;
        if (fields >> extra) throw FormatError("trailing tokens on scenario line: " + line);
    }
    if (!saw_groups) throw FormatError("scenario is missing a groups directive");
    return s;
}

std::string scenario_to_string(const Scenario& scenario) {
    std::ostringstream out;
    out << "groups ";
    for (std::size_t i = 0; i < scenario.group_sizes.size(); ++i) {
        if (i) out << ',';
        out << scenario.group_sizes[i];
    }
    out << '\n';
    out << "secrets " << scenario.secret_count << '\n';
    out << "seed " << scenario.seed << '\n';
    for (const Fault& f : scenario.faults)
        out << "fault " << fault_name(f.kind) << ' ' << f.participant << '\n';
    return out.str();
}

std::string TranscriptEvent::to_line() const {
    std::ostringstream out;
    switch (type) {
    case Type::Message:
        out << "msg " << message_kind_name(kind) << ' ' << from << "->" << to;
        if (!detail.empty()) out << ' ' << detail;
        if (!payload.empty()) out << " payload=" << share_tag(payload);
        break;
    case Type::Accept:
        out << "accept " << from << ' ' << detail;
        break;
    case Type::Reject:
        out << "reject " << from << ' ' << detail;
        break;
    }
    return out.str();
}

std::string Transcript::to_string() const {
    std::string out;
    for (const TranscriptEvent& e : events) {
        out += e.to_line();
        out += '\n';
    }
    return out;
}

Transcript run_scenario(const Scenario& scenario) {
    Transcript t;
    SeededRng rng(scenario.seed);

    std::vector<Bytes> secrets;
    secrets.reserve(scenario.secret_count);
    for (std::size_t j = 0; j < scenario.secret_count; ++j) secrets.push_back(rng.bytes(32));

    SetupResult deal = setup(scenario.group_sizes.size(), scenario.group_sizes, secrets, rng);

    // Participants in group order; the order fixes the transcript.
    std::vector<std::string> participants;
    for (const auto& [b, members] : deal.state.groups.groups())
        participants.insert(participants.end(), members.begin(), members.end());

    std::map<std::string, FaultKind> fault_of;
    for (const Fault& f : scenario.faults) {
        if (!deal.state.groups.known(f.participant))
            throw ConfigError("fault names unknown participant: " + f.participant);
        if (!fault_of.emplace(f.participant, f.kind).second)
            throw ConfigError("duplicate fault for participant: " + f.participant);
    }
    bool any_stale = std::any_of(scenario.faults.begin(), scenario.faults.end(),
                                 [](const Fault& f) { return f.kind == FaultKind::ParticipantStale; });

    std::map<std::string, Share> held;    // share each participant currently holds
    std::map<std::string, bool> verified; // outcome of its g* check

    auto deliver_round = [&](bool corrupt_faults_active) {
        for (const std::string& pid : participants)
            emit_message(t, MessageKind::BundlePublish, kCombiner, pid,
                         "epoch=" + std::to_string(deal.state.epoch) +
                             " t=" + std::to_string(deal.state.threshold));
        std::map<std::string, Share> handed = distribute(deal.state);
        for (const std::string& pid : participants) {
            Share s = handed.at(pid);
            auto f = fault_of.find(pid);
            if (corrupt_faults_active && f != fault_of.end() && f->second == FaultKind::DealerCorrupt)
                s = flip_first_bit(s);
            emit_message(t, MessageKind::ShareDelivery, kCombiner, pid, "", s.bytes);
            held[pid] = s;
            bool ok = validate_share(s, deal.bundle);
            verified[pid] = ok;
            std::string suffix = " epoch=" + std::to_string(deal.state.epoch);
            emit_decision(t, ok, pid,
                          ok ? "share-valid" + suffix
                             : "share-invalid reason=not-in-gstar" + suffix);
        }
    };

    deliver_round(/*corrupt_faults_active=*/true);

    // A stale-submission fault only means something after a refresh; run one
    // and let everyone except the faulty participant move to the new epoch.
    std::map<std::string, Share> previous_epoch = held;
    if (any_stale) {
        deal = refresh(deal.state, secrets, rng);
        deliver_round(/*corrupt_faults_active=*/false);
    }

    for (std::size_t j = 0; j < scenario.secret_count; ++j) {
        // One representative per live group: scripted faults take precedence
        // so they actually manifest, otherwise the first member whose share
        // passed its own check.
        std::vector<std::string> subset;
        for (const auto& [b, members] : deal.state.groups.groups()) {
            std::string chosen;
            for (const std::string& pid : members) {
                auto f = fault_of.find(pid);
                if (f != fault_of.end() && f->second != FaultKind::DealerCorrupt) {
                    chosen = pid;
                    break;
                }
                if (chosen.empty() && verified.at(pid)) chosen = pid;
            }
            if (!chosen.empty()) subset.push_back(chosen);
        }

        std::size_t need = deal.state.live_group_count();
        if (subset.empty()) {
            emit_decision(t, false, kCombiner,
                          "recovery j=" + std::to_string(j) +
                              " reason=insufficient-shares have=0 need=" + std::to_string(need));
            continue;
        }

        emit_message(t, MessageKind::RecoveryRequest, subset.front(), kCombiner,
                     "j=" + std::to_string(j));

        RecoveryRequest req;
        req.secret_index = j;
        for (const std::string& pid : subset) {
            Share s = held.at(pid);
            auto f = fault_of.find(pid);
            if (f != fault_of.end() && f->second == FaultKind::ParticipantCorrupt)
                s = flip_first_bit(s);
            else if (f != fault_of.end() && f->second == FaultKind::ParticipantStale)
                s = previous_epoch.at(pid);
            emit_message(t, MessageKind::ShareSubmission, pid, kCombiner, "j=" + std::to_string(j),
                         s.bytes);
            bool ok = validate_share(s, deal.bundle);
            emit_decision(t, ok, kCombiner,
                          ok ? "submission-from=" + pid
                             : "submission-from=" + pid + " reason=not-in-gstar");
            if (ok) req.submitted.emplace_back(pid, s);
        }

        try {
            Bytes secret = recover(req, deal.state, deal.bundle, deal.vault);
            for (const std::string& pid : subset) {
                emit_message(t, MessageKind::SecretDelivery, kCombiner, pid,
                             "j=" + std::to_string(j), secret);
                bool ok = verify_recovered_secret(secret, j, deal.bundle);
                emit_decision(t, ok, pid,
                              ok ? "secret-valid j=" + std::to_string(j)
                                 : "secret-invalid j=" + std::to_string(j));
            }
        } catch (const InsufficientSharesError& e) {
            emit_decision(t, false, kCombiner,
                          "recovery j=" + std::to_string(j) + " reason=insufficient-shares have=" +
                              std::to_string(e.have) + " need=" + std::to_string(e.need));
        } catch (const ExcessSharesError& e) {
            emit_decision(t, false, kCombiner,
                          "recovery j=" + std::to_string(j) + " reason=excess-shares have=" +
                              std::to_string(e.have) + " need=" + std::to_string(e.need));
        }
    }

    return t;
}

CheckResult transcript_check(const Transcript& transcript, const Expectations& expectations) {
    auto fail = [](std::string why) { return CheckResult{false, std::move(why)}; };

    if (expectations.all_accepted) {
        for (const TranscriptEvent& e : transcript.events)
            if (e.type == TranscriptEvent::Type::Reject)
                return fail("expected no rejections, found: " + e.to_line());
    }

    for (const auto& [party, needle] : expectations.rejections) {
        bool found = false;
        for (const TranscriptEvent& e : transcript.events) {
            if (e.type == TranscriptEvent::Type::Reject && e.from == party &&
                e.detail.find(needle) != std::string::npos) {
                found = true;
                break;
            }
        }
        if (!found)
            return fail("expected a rejection by " + party + " matching \"" + needle + "\"");
    }

    auto delivered = [&](std::size_t j) {
        std::string tag = "j=" + std::to_string(j);
        for (const TranscriptEvent& e : transcript.events)
            if (e.type == TranscriptEvent::Type::Message && e.kind == MessageKind::SecretDelivery &&
                e.detail == tag)
                return true;
        return false;
    };
    auto verified_by_someone = [&](std::size_t j) {
        std::string tag = "secret-valid j=" + std::to_string(j);
        for (const TranscriptEvent& e : transcript.events)
            if (e.type == TranscriptEvent::Type::Accept && e.detail == tag) return true;
        return false;
    };

    for (std::size_t j : expectations.recovered) {
        if (!delivered(j))
            return fail("expected secret " + std::to_string(j) + " to be delivered");
        if (!verified_by_someone(j))
            return fail("expected secret " + std::to_string(j) + " to verify against r*");
    }
    for (std::size_t j : expectations.not_recovered) {
        if (delivered(j))
            return fail("expected secret " + std::to_string(j) + " to stay sealed");
    }

    return {};
}

} // namespace hsss
