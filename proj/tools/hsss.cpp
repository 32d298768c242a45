// Command-line front end: dealer-side operations (setup, proactive
// maintenance), participant-side checks (verify-share, verify-secret),
// combiner recovery, the baseline benchmark and the protocol simulator.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/format/state error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hsss/bench.hpp"
#include "hsss/bytes.hpp"
#include "hsss/dealer.hpp"
#include "hsss/error.hpp"
#include "hsss/harness.hpp"
#include "hsss/hashcore.hpp"
#include "hsss/recovery.hpp"
#include "hsss/rng.hpp"
#include "hsss/vault.hpp"

namespace fs = std::filesystem;
using namespace hsss;

namespace {

constexpr const char* kStateName = "dealer.state";
constexpr const char* kBundleName = "public.bundle";
constexpr const char* kVaultName = "secrets.vault";

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Bytes read_bytes(const fs::path& path) {
    std::string s = read_text(path);
    return Bytes(s.begin(), s.end());
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out.flush()) throw FormatError("cannot write " + path.string());
}

std::unique_ptr<Rng> make_rng(const std::optional<std::uint64_t>& seed) {
    if (seed) return std::make_unique<SeededRng>(*seed);
    return std::make_unique<SystemRng>();
}

std::vector<std::size_t> parse_sizes(const std::string& csv) {
    std::vector<std::size_t> sizes;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            throw ConfigError("bad group size: " + item);
        }
        if (pos != item.size() || v == 0) throw ConfigError("bad group size: " + item);
        sizes.push_back(v);
    }
    if (sizes.empty()) throw ConfigError("--groups needs a comma-separated size list");
    return sizes;
}

Share share_from_file(const fs::path& path) {
    std::string text = read_text(path);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return share_from_hex(text);
}

struct Artifacts {
    DealerState state;
    PublicBundle bundle;
    VaultFile vault;
};

Artifacts load_artifacts(const fs::path& dir) {
    Artifacts a;
    a.state = dealer_state_from_string(read_text(dir / kStateName));
    a.bundle = bundle_from_string(read_text(dir / kBundleName));
    a.vault = vault_from_string(read_text(dir / kVaultName));
    if (a.state.epoch != a.bundle.epoch || a.state.epoch != a.vault.epoch)
        throw EpochMismatchError("epoch mismatch: state " + std::to_string(a.state.epoch) +
                                 ", bundle " + std::to_string(a.bundle.epoch) + ", vault " +
                                 std::to_string(a.vault.epoch));
    return a;
}

void write_artifacts(const fs::path& dir, const SetupResult& result) {
    fs::create_directories(dir);
    write_text(dir / kStateName, dealer_state_to_string(result.state));
    write_text(dir / kBundleName, bundle_to_string(result.bundle));
    write_text(dir / kVaultName, vault_to_string(result.vault));
}

// The dealer holds the whole basis, so it can re-open every secret; the
// maintenance subcommands need the plaintexts to re-seal under new keys.
std::vector<Bytes> open_all_secrets(const DealerState& state, const VaultFile& vault) {
    std::vector<Bytes> secrets;
    for (std::size_t j = 0; j < state.secret_digests.size(); ++j) {
        const VaultEntry* entry = nullptr;
        for (const VaultEntry& e : vault.entries)
            if (e.index == j) entry = &e;
        if (!entry) throw FormatError("vault entry missing for secret " + std::to_string(j));
        secrets.push_back(open_entry(*entry, state.key_for(j)));
    }
    return secrets;
}

} // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("HSSS_HASH")) {
        if (std::string(env) != kHashAlgId) {
            std::cerr << "error: HSSS_HASH=" << env << " is not supported (only " << kHashAlgId
                      << ")\n";
            return 2;
        }
    }

    CLI::App app{"hash-based (t,n) multi-secret sharing"};
    app.require_subcommand(1);
    int exit_code = 0;

    // --- setup ---
    auto* setup_cmd = app.add_subcommand("setup", "generate a share basis and seal the secrets");
    std::size_t setup_t = 0;
    std::string setup_groups;
    std::vector<std::string> setup_secret_files;
    std::string setup_out;
    std::optional<std::uint64_t> setup_seed;
    setup_cmd->add_option("--t", setup_t, "threshold (must equal the group count)")->required();
    setup_cmd->add_option("--groups", setup_groups, "group sizes, e.g. 2,3")->required();
    setup_cmd->add_option("--secret-file", setup_secret_files, "secret plaintext file (repeatable)")
        ->required();
    setup_cmd->add_option("--out-dir", setup_out, "artifact directory")->required();
    setup_cmd->add_option("--seed", setup_seed, "deterministic RNG seed");
    setup_cmd->callback([&] {
        std::vector<std::size_t> sizes = parse_sizes(setup_groups);
        if (setup_t != sizes.size())
            throw ConfigError("--t must equal the number of groups (one share per group)");
        std::vector<Bytes> secrets;
        for (const std::string& f : setup_secret_files) secrets.push_back(read_bytes(f));
        auto rng = make_rng(setup_seed);
        SetupResult result = setup(setup_t, sizes, secrets, *rng);
        write_artifacts(setup_out, result);
        std::cout << "setup: t=" << result.state.threshold << " groups=" << sizes.size()
                  << " secrets=" << secrets.size() << " epoch=" << result.state.epoch << '\n';
    });

    // --- distribute ---
    auto* dist_cmd = app.add_subcommand("distribute", "write one share file per participant");
    std::string dist_state, dist_out;
    dist_cmd->add_option("--state", dist_state, "dealer state file")->required();
    dist_cmd->add_option("--out-dir", dist_out, "share file directory")->required();
    dist_cmd->callback([&] {
        DealerState state = dealer_state_from_string(read_text(dist_state));
        fs::create_directories(dist_out);
        auto shares = distribute(state);
        for (const auto& [pid, share] : shares)
            write_text(fs::path(dist_out) / (pid + ".share"), share_to_hex(share) + "\n");
        std::cout << "distributed " << shares.size() << " shares\n";
    });

    // --- verify-share ---
    auto* vshare_cmd = app.add_subcommand("verify-share", "check a share against g*");
    std::string vshare_file, vshare_bundle;
    vshare_cmd->add_option("--share", vshare_file, "share file")->required();
    vshare_cmd->add_option("--bundle", vshare_bundle, "public bundle file")->required();
    vshare_cmd->callback([&] {
        Share share = share_from_file(vshare_file);
        PublicBundle bundle = bundle_from_string(read_text(vshare_bundle));
        if (validate_share(share, bundle)) {
            std::cout << "OK\n";
        } else {
            std::cout << "REJECTED: not in g*\n";
            exit_code = 1;
        }
    });

    // --- recover ---
    auto* rec_cmd = app.add_subcommand("recover", "combine submitted shares and open one secret");
    std::size_t rec_index = 0;
    std::vector<std::string> rec_share_files;
    std::string rec_state, rec_bundle, rec_vault, rec_out;
    rec_cmd->add_option("--index", rec_index, "secret index j")->required();
    rec_cmd->add_option("--share", rec_share_files, "submitted share file (repeatable)")->required();
    rec_cmd->add_option("--state", rec_state, "dealer state file")->required();
    rec_cmd->add_option("--bundle", rec_bundle, "public bundle file")->required();
    rec_cmd->add_option("--vault", rec_vault, "vault file")->required();
    rec_cmd->add_option("--out", rec_out, "output file for the recovered secret")->required();
    rec_cmd->callback([&] {
        RecoveryRequest req;
        req.secret_index = rec_index;
        for (const std::string& f : rec_share_files)
            req.submitted.emplace_back(fs::path(f).stem().string(), share_from_file(f));
        DealerState state = dealer_state_from_string(read_text(rec_state));
        PublicBundle bundle = bundle_from_string(read_text(rec_bundle));
        VaultFile vault = vault_from_string(read_text(rec_vault));
        Bytes secret = recover(req, state, bundle, vault);
        write_text(rec_out, std::string(secret.begin(), secret.end()));
        std::cout << "recovered secret " << rec_index << " -> " << rec_out << '\n';
    });

    // --- verify-secret ---
    auto* vsec_cmd = app.add_subcommand("verify-secret", "check a recovered secret against r*");
    std::string vsec_file, vsec_bundle;
    std::size_t vsec_index = 0;
    vsec_cmd->add_option("--file", vsec_file, "recovered secret file")->required();
    vsec_cmd->add_option("--index", vsec_index, "secret index j")->required();
    vsec_cmd->add_option("--bundle", vsec_bundle, "public bundle file")->required();
    vsec_cmd->callback([&] {
        Bytes secret = read_bytes(vsec_file);
        PublicBundle bundle = bundle_from_string(read_text(vsec_bundle));
        if (verify_recovered_secret(secret, vsec_index, bundle)) {
            std::cout << "OK\n";
        } else {
            std::cout << "REJECTED: r* mismatch\n";
            exit_code = 1;
        }
    });

    // --- dealer maintenance (operate on an artifact directory in place) ---
    std::string dir = ".";
    std::optional<std::uint64_t> op_seed;
    std::size_t op_b = 0;
    bool swap_controlling = false;
    std::size_t upd_index = 0;
    std::string upd_secret_file;

    auto add_dir_seed = [&](CLI::App* cmd) {
        cmd->add_option("--dir", dir, "artifact directory (dealer.state, public.bundle, secrets.vault)");
        cmd->add_option("--seed", op_seed, "deterministic RNG seed");
    };

    auto* refresh_cmd = app.add_subcommand("refresh", "re-randomize the whole basis");
    add_dir_seed(refresh_cmd);
    refresh_cmd->callback([&] {
        Artifacts a = load_artifacts(dir);
        auto rng = make_rng(op_seed);
        SetupResult result = refresh(a.state, open_all_secrets(a.state, a.vault), *rng);
        write_artifacts(dir, result);
        std::cout << "refreshed basis, epoch=" << result.state.epoch << '\n';
    });

    auto* rshare_cmd = app.add_subcommand("refresh-share", "re-randomize a single basis share");
    add_dir_seed(rshare_cmd);
    rshare_cmd->add_option("--b", op_b, "basis index to refresh")->required();
    rshare_cmd->callback([&] {
        Artifacts a = load_artifacts(dir);
        auto rng = make_rng(op_seed);
        SetupResult result = refresh_share(a.state, op_b, open_all_secrets(a.state, a.vault), *rng);
        write_artifacts(dir, result);
        std::cout << "refreshed share " << op_b << ", epoch=" << result.state.epoch << '\n';
    });

    auto* revoke_cmd = app.add_subcommand("revoke", "remove a basis share and its group");
    add_dir_seed(revoke_cmd);
    revoke_cmd->add_option("--b", op_b, "basis index to revoke")->required();
    revoke_cmd->add_flag("--swap-controlling", swap_controlling,
                         "mint a controlling share to keep the threshold constant");
    revoke_cmd->callback([&] {
        Artifacts a = load_artifacts(dir);
        auto rng = make_rng(op_seed);
        std::vector<Bytes> secrets = open_all_secrets(a.state, a.vault);
        SetupResult result = revoke(a.state, op_b, secrets, *rng);
        if (swap_controlling) result = swap_in_controlling(result.state, op_b, secrets, *rng);
        write_artifacts(dir, result);
        std::cout << "revoked share " << op_b << ", t=" << result.state.threshold
                  << ", epoch=" << result.state.epoch << '\n';
    });

    auto* addc_cmd = app.add_subcommand("add-controlling", "mint a dealer-held controlling share");
    add_dir_seed(addc_cmd);
    addc_cmd->callback([&] {
        Artifacts a = load_artifacts(dir);
        auto rng = make_rng(op_seed);
        SetupResult result = add_controlling_share(a.state, open_all_secrets(a.state, a.vault), *rng);
        write_artifacts(dir, result);
        std::cout << "added controlling share, t=" << result.state.threshold
                  << ", epoch=" << result.state.epoch << '\n';
    });

    auto* upd_cmd = app.add_subcommand("update-secret", "re-key one secret, basis unchanged");
    add_dir_seed(upd_cmd);
    upd_cmd->add_option("--index", upd_index, "secret index j")->required();
    upd_cmd->add_option("--secret-file", upd_secret_file, "new secret plaintext file")->required();
    upd_cmd->callback([&] {
        Artifacts a = load_artifacts(dir);
        auto rng = make_rng(op_seed);
        SetupResult result = update_secret(a.state, a.vault, upd_index, read_bytes(upd_secret_file), *rng);
        write_artifacts(dir, result);
        std::cout << "updated secret " << upd_index << ", epoch=" << result.state.epoch << '\n';
    });

    // --- bench ---
    auto* bench_cmd = app.add_subcommand("bench", "compare recovery cost against the Shamir baseline");
    std::vector<std::size_t> bench_t, bench_n;
    std::size_t bench_trials = 100;
    std::optional<std::uint64_t> bench_seed;
    bench_cmd->add_option("--t", bench_t, "threshold (repeatable, zipped with --n)")->required();
    bench_cmd->add_option("--n", bench_n, "participant count (repeatable)")->required();
    bench_cmd->add_option("--trials", bench_trials, "trials per size");
    bench_cmd->add_option("--seed", bench_seed, "deterministic RNG seed");
    bench_cmd->callback([&] {
        if (bench_t.size() != bench_n.size())
            throw ConfigError("--t and --n must be given the same number of times");
        BenchConfig config;
        for (std::size_t i = 0; i < bench_t.size(); ++i)
            config.sizes.emplace_back(bench_t[i], bench_n[i]);
        config.trials = bench_trials;
        auto rng = make_rng(bench_seed);
        std::cout << format_report(bench_compare(config, *rng));
    });

    // --- simulate ---
    auto* sim_cmd = app.add_subcommand("simulate", "run a scripted protocol scenario");
    std::string sim_scenario;
    sim_cmd->add_option("--scenario", sim_scenario, "scenario file")->required();
    sim_cmd->callback([&] {
        Scenario scenario = scenario_from_string(read_text(sim_scenario));
        std::cout << run_scenario(scenario).to_string();
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const InvalidShareError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const InsufficientSharesError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ExcessSharesError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const AuthenticationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
