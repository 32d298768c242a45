#include "hsss/hashcore.hpp"

#include <algorithm>
#include <stdexcept>

#include <openssl/evp.h>

#include "hsss/error.hpp"

namespace hsss {

std::string hex_encode(std::span<const std::uint8_t> data)
{
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(data.size() * 2);
    for (std::uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

// Lowercase only: the formats are bit-exact, so a value has one spelling.
static int hex_nibble(char c)
{
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}

Bytes hex_decode(std::string_view hex)
{
    if (hex.size() % 2 != 0)
        throw FormatError("hex string has odd length");
    Bytes out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        int hi = hex_nibble(hex[2 * i]);
        int lo = hex_nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0)
            throw FormatError("invalid hex character");
        out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
    }
    return out;
}

Digest hash(std::span<const std::uint8_t> data)
{
    Digest d;
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), d.bytes.data(), &len, EVP_sha512(), nullptr) != 1 ||
        len != kDigestLen)
        throw Error("SHA-512 computation failed");
    return d;
}

Digest hash(const Bytes& data)
{
    return hash(std::span<const std::uint8_t>(data));
}

Digest hash(const Digest& d)
{
    return hash(std::span<const std::uint8_t>(d.bytes));
}

std::vector<Share> order_shares(std::vector<Share> shares)
{
    std::erase_if(shares, [](const Share& s) { return s.empty(); });
    std::sort(shares.begin(), shares.end());
    shares.erase(std::unique(shares.begin(), shares.end()), shares.end());
    return shares;
}

Bytes concat_shares(const std::vector<Share>& ordered)
{
    Bytes out;
    std::size_t total = 0;
    for (const Share& s : ordered)
        total += s.bytes.size();
    out.reserve(total);
    for (const Share& s : ordered)
        out.insert(out.end(), s.bytes.begin(), s.bytes.end());
    return out;
}

Bytes xi(const std::vector<Share>& basis)
{
    return concat_shares(order_shares(basis));
}

SecretKey derive_key(const Digest& q, const std::vector<Share>& basis)
{
    Bytes input(q.bytes.begin(), q.bytes.end());
    Bytes tail = xi(basis);
    input.insert(input.end(), tail.begin(), tail.end());
    Digest d = hash(input);
    SecretKey k;
    k.bytes = d.bytes;
    return k;
}

std::string digest_to_hex(const Digest& d)
{
    return hex_encode(d.bytes);
}

Digest digest_from_hex(std::string_view hex)
{
    Bytes raw = hex_decode(hex);
    if (raw.size() != kDigestLen)
        throw FormatError("digest must be exactly 128 hex chars");
    Digest d;
    std::copy(raw.begin(), raw.end(), d.bytes.begin());
    return d;
}

std::string share_to_hex(const Share& s)
{
    if (s.empty())
        return "-";
    return hex_encode(s.bytes);
}

Share share_from_hex(std::string_view hex)
{
    if (hex == "-")
        return Share{};
    if (hex.size() != 2 * kShareLen)
        throw FormatError("share must be 128 hex chars or '-'");
    return Share{hex_decode(hex)};
}

} // namespace hsss
