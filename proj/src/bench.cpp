#include "hsss/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "hsss/dealer.hpp"
#include "hsss/error.hpp"
#include "hsss/recovery.hpp"
#include "hsss/shamir.hpp"

namespace hsss {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_us(Clock::time_point start, Clock::time_point stop)
{
    return std::chrono::duration<double, std::micro>(stop - start).count();
}

double median(std::vector<double> samples)
{
    std::sort(samples.begin(), samples.end());
    std::size_t n = samples.size();
    if (n == 0)
        return 0;
    if (n % 2 == 1)
        return samples[n / 2];
    return (samples[n / 2 - 1] + samples[n / 2]) / 2;
}

std::vector<std::size_t> spread_groups(std::size_t t, std::size_t n)
{
    std::vector<std::size_t> sizes(t, n / t);
    for (std::size_t i = 0; i < n % t; ++i)
        sizes[i]++;
    return sizes;
}

} // namespace

std::vector<BenchRow> bench_compare(const BenchConfig& config, Rng& rng)
{
    std::vector<BenchRow> rows;
    for (auto [t, n] : config.sizes) {
        if (t < 1 || t > n)
            throw ConfigError("bench requires 1 <= t <= n");

        std::vector<double> setup_us, recover_us, split_us, reconstruct_us;
        setup_us.reserve(config.trials);
        recover_us.reserve(config.trials);
        split_us.reserve(config.trials);
        reconstruct_us.reserve(config.trials);

        shamir::PrimeField field(shamir::default_prime());
        std::vector<std::size_t> group_sizes = spread_groups(t, n);

        for (std::size_t trial = 0; trial < config.trials; ++trial) {
            std::vector<Bytes> secrets{rng.bytes(32)};

            auto t0 = Clock::now();
            SetupResult deal = setup(t, group_sizes, secrets, rng);
            auto t1 = Clock::now();
            setup_us.push_back(elapsed_us(t0, t1));

            // one member per group submits
            RecoveryRequest req;
            req.secret_index = 0;
            for (const auto& [b, members] : deal.state.groups.groups())
                req.submitted.emplace_back(members.front(), deal.state.entry(b).share);

            auto t2 = Clock::now();
            Bytes recovered = recover(req, deal.state, deal.bundle, deal.vault);
            auto t3 = Clock::now();
            recover_us.push_back(elapsed_us(t2, t3));
            if (recovered != secrets[0])
                throw Error("bench: hash-scheme recovery mismatch");

            shamir::Int shamir_secret = field.random_element(rng);

            auto t4 = Clock::now();
            auto shares = shamir::split(shamir_secret, t, n, field, rng);
            auto t5 = Clock::now();
            split_us.push_back(elapsed_us(t4, t5));

            std::vector<shamir::ShamirShare> subset(shares.begin(),
                                                    shares.begin() + static_cast<long>(t));
            auto t6 = Clock::now();
            shamir::Int reconstructed = shamir::reconstruct(subset, t, field);
            auto t7 = Clock::now();
            reconstruct_us.push_back(elapsed_us(t6, t7));
            if (reconstructed != shamir_secret)
                throw Error("bench: Shamir reconstruction mismatch");
        }

        BenchRow row;
        row.t = t;
        row.n = n;
        row.hash_setup_us = median(std::move(setup_us));
        row.hash_recover_us = median(std::move(recover_us));
        row.shamir_split_us = median(std::move(split_us));
        row.shamir_reconstruct_us = median(std::move(reconstruct_us));
        rows.push_back(row);
    }
    return rows;
}

std::string format_report(const std::vector<BenchRow>& rows)
{
    std::ostringstream out;
    out << "t n hash_us shamir_us ratio\n";
    out.setf(std::ios::fixed);
    out.precision(2);
    for (const BenchRow& r : rows) {
        double ratio = r.hash_recover_us > 0 ? r.shamir_reconstruct_us / r.hash_recover_us : 0;
        out << r.t << ' ' << r.n << ' ' << r.hash_recover_us << ' ' << r.shamir_reconstruct_us
            << ' ' << ratio << "\n";
    }
    return out.str();
}

} // namespace hsss
