#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsss/bytes.hpp"

namespace hsss {

enum class MessageKind {
    ShareDelivery,
    BundlePublish,
    RecoveryRequest,
    ShareSubmission,
    SecretDelivery,
    Rejection
};

const char* message_kind_name(MessageKind kind);

enum class FaultKind {
    DealerCorrupt,      // dealer delivers a corrupted share to P
    ParticipantCorrupt, // P submits a corrupted share at recovery
    ParticipantStale    // P submits its pre-refresh share at recovery
};

struct Fault {
    FaultKind kind;
    std::string participant;
};

// A deterministic script: identical seed and faults produce byte-identical
// transcripts. An empty fault list is an honest run.
struct Scenario {
    std::vector<std::size_t> group_sizes;
    std::size_t secret_count = 1;
    std::uint64_t seed = 0;
    std::vector<Fault> faults;
};

Scenario scenario_from_string(const std::string& text);
std::string scenario_to_string(const Scenario& scenario);

struct TranscriptEvent {
    enum class Type { Message, Accept, Reject };
    Type type = Type::Message;
    MessageKind kind = MessageKind::Rejection; // meaningful for Type::Message
    std::string from;                          // deciding party for Accept/Reject
    std::string to;
    std::string detail;
    Bytes payload; // share or secret bytes; carried for structural checks,
                   // rendered only as a hash prefix

    std::string to_line() const;
};

struct Transcript {
    std::vector<TranscriptEvent> events;
    std::string to_string() const; // one line per event, trailing newline
};

// Runs setup -> distribution -> participant verification -> recovery ->
// secret verification, applying the scripted faults. Protocol faults are
// recorded in the transcript, never thrown; only an ill-formed scenario
// (unknown participant, bad sizes) throws.
Transcript run_scenario(const Scenario& scenario);

// Declarative expectations over a transcript.
struct Expectations {
    bool all_accepted = false; // no reject event anywhere
    // (party, detail substring) pairs that must each match a reject event
    std::vector<std::pair<std::string, std::string>> rejections;
    std::vector<std::size_t> recovered;     // delivered and verified by someone
    std::vector<std::size_t> not_recovered; // never delivered
};

struct CheckResult {
    bool ok = true;
    std::string divergence; // first mismatch, empty when ok
};

CheckResult transcript_check(const Transcript& transcript, const Expectations& expectations);

} // namespace hsss
