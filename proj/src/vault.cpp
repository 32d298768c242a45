#include "hsss/vault.hpp"

#include <memory>
#include <sstream>

#include <openssl/evp.h>

#include "hsss/error.hpp"
#include "parse_util.hpp"

namespace hsss {

namespace {

struct CtxDeleter {
    void operator()(EVP_CIPHER_CTX* ctx) const { EVP_CIPHER_CTX_free(ctx); }
};
using CtxPtr = std::unique_ptr<EVP_CIPHER_CTX, CtxDeleter>;

CtxPtr new_ctx()
{
    CtxPtr ctx(EVP_CIPHER_CTX_new());
    if (!ctx)
        throw Error("EVP_CIPHER_CTX_new failed");
    return ctx;
}

} // namespace

VaultEntry seal(std::size_t index, const Bytes& secret, const SecretKey& key, Rng& rng)
{
    if (secret.empty())
        throw ConfigError("refusing to seal an empty secret");

    VaultEntry entry;
    entry.index = index;
    rng.fill(entry.nonce);
    entry.ciphertext.resize(secret.size());

    CtxPtr ctx = new_ctx();
    if (EVP_EncryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key.bytes.data(),
                           entry.nonce.data()) != 1)
        throw Error("EVP_EncryptInit_ex failed");

    int len = 0;
    if (EVP_EncryptUpdate(ctx.get(), entry.ciphertext.data(), &len, secret.data(),
                          static_cast<int>(secret.size())) != 1)
        throw Error("EVP_EncryptUpdate failed");
    int total = len;
    if (EVP_EncryptFinal_ex(ctx.get(), entry.ciphertext.data() + len, &len) != 1)
        throw Error("EVP_EncryptFinal_ex failed");
    total += len;
    if (static_cast<std::size_t>(total) != secret.size())
        throw Error("unexpected GCM ciphertext length");

    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_GET_TAG, kTagLen, entry.tag.data()) != 1)
        throw Error("EVP_CTRL_GCM_GET_TAG failed");
    return entry;
}

Bytes open_entry(const VaultEntry& entry, const SecretKey& key)
{
    CtxPtr ctx = new_ctx();
    if (EVP_DecryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key.bytes.data(),
                           entry.nonce.data()) != 1)
        throw Error("EVP_DecryptInit_ex failed");

    Bytes plaintext(entry.ciphertext.size());
    int len = 0;
    if (EVP_DecryptUpdate(ctx.get(), plaintext.data(), &len, entry.ciphertext.data(),
                          static_cast<int>(entry.ciphertext.size())) != 1)
        throw AuthenticationError("vault entry authentication failed");
    int total = len;

    std::array<std::uint8_t, kTagLen> tag = entry.tag;
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_TAG, kTagLen, tag.data()) != 1)
        throw Error("EVP_CTRL_GCM_SET_TAG failed");

    // Tag check happens here; fail closed without releasing plaintext.
    if (EVP_DecryptFinal_ex(ctx.get(), plaintext.data() + total, &len) != 1)
        throw AuthenticationError("vault entry authentication failed");
    total += len;
    if (static_cast<std::size_t>(total) != entry.ciphertext.size())
        throw Error("unexpected GCM plaintext length");
    return plaintext;
}

std::string vault_to_string(const VaultFile& vault)
{
    std::ostringstream out;
    out << "HSSS-VAULT v1\n";
    out << "cipher " << kCipherId << "\n";
    out << "epoch " << vault.epoch << "\n";
    for (const VaultEntry& e : vault.entries) {
        out << "entry " << e.index << ' ' << hex_encode(e.nonce) << ' '
            << hex_encode(e.ciphertext) << ' ' << hex_encode(e.tag) << "\n";
    }
    return out.str();
}

VaultFile vault_from_string(const std::string& text)
{
    using detail::expect_field;
    using detail::parse_u64;

    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "HSSS-VAULT v1")
        throw FormatError("vault: bad or missing version line");
    if (expect_field(in, "cipher", "vault") != kCipherId)
        throw FormatError("vault: unsupported cipher");

    VaultFile vault;
    vault.epoch = parse_u64(expect_field(in, "epoch", "vault"), "vault");

    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag != "entry")
            throw FormatError("vault: unexpected line '" + line + "'");
        VaultEntry e;
        std::string nonce_hex, ct_hex, tag_hex;
        if (!(ls >> e.index >> nonce_hex >> ct_hex >> tag_hex))
            throw FormatError("vault: malformed entry line");
        Bytes nonce = hex_decode(nonce_hex);
        if (nonce.size() != kNonceLen)
            throw FormatError("vault: nonce must be 24 hex chars");
        std::copy(nonce.begin(), nonce.end(), e.nonce.begin());
        e.ciphertext = hex_decode(ct_hex);
        Bytes t = hex_decode(tag_hex);
        if (t.size() != kTagLen)
            throw FormatError("vault: tag must be 32 hex chars");
        std::copy(t.begin(), t.end(), e.tag.begin());
        if (!vault.entries.empty() && e.index <= vault.entries.back().index)
            throw FormatError("vault: entries must be in ascending index order");
        vault.entries.push_back(std::move(e));
    }
    return vault;
}

} // namespace hsss
