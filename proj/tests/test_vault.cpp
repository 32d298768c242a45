#include "doctest.h"

#include <string>

#include "hsss/error.hpp"
#include "hsss/hashcore.hpp"
#include "hsss/rng.hpp"
#include "hsss/vault.hpp"

using namespace hsss;

namespace {

SecretKey key_from_byte(std::uint8_t b) {
    SecretKey k;
    k.bytes.fill(b);
    return k;
}

VaultEntry sealed_probe(const SecretKey& k, const Bytes& secret) {
    SeededRng rng(99);
    return seal(7, secret, k, rng);
}

} // namespace

TEST_CASE("seal/open round-trips across plaintext sizes") {
    SeededRng rng(1);
    SecretKey k = key_from_byte(0x5a);
    for (std::size_t n : {1u, 2u, 15u, 16u, 17u, 63u, 64u, 65u, 1000u, 4096u}) {
        Bytes secret = rng.bytes(n);
        VaultEntry e = seal(0, secret, k, rng);
        CHECK(e.ciphertext.size() == n);
        CHECK(open_entry(e, k) == secret);
    }
}

TEST_CASE("aes-256-gcm matches the frozen zero-key vector") {
    // key = 0^32, nonce = 0^12, plaintext = 0^16, no associated data;
    // frozen from an independent implementation.
    VaultEntry e;
    e.index = 0;
    e.nonce.fill(0);
    e.ciphertext = hex_decode("cea7403d4d606b6e074ec5d3baf39d18");
    Bytes tag = hex_decode("d0d1c8a799996bf0265b98b5d48ab919");
    std::copy(tag.begin(), tag.end(), e.tag.begin());

    SecretKey zero = key_from_byte(0); // AES key is the first 32 bytes
    CHECK(open_entry(e, zero) == Bytes(16, 0));
}

TEST_CASE("only the first 32 key bytes reach the cipher") {
    SecretKey a = key_from_byte(0x21), b = a;
    for (std::size_t i = 32; i < b.bytes.size(); ++i) b.bytes[i] ^= 0xff;
    VaultEntry e = sealed_probe(a, to_bytes("payload"));
    CHECK(open_entry(e, b) == to_bytes("payload"));
}

TEST_CASE("empty secrets are refused") {
    SeededRng rng(2);
    CHECK_THROWS_AS(seal(0, Bytes{}, key_from_byte(1), rng), ConfigError);
}

TEST_CASE("tampering with any field fails closed") {
    SecretKey k = key_from_byte(0x33);
    Bytes secret = to_bytes("the cache is under the bridge");
    VaultEntry good = sealed_probe(k, secret);

    VaultEntry e = good;
    e.ciphertext[0] ^= 0x01;
    CHECK_THROWS_AS(open_entry(e, k), AuthenticationError);

    e = good;
    e.tag[15] ^= 0x80;
    CHECK_THROWS_AS(open_entry(e, k), AuthenticationError);

    e = good;
    e.nonce[3] ^= 0x10;
    CHECK_THROWS_AS(open_entry(e, k), AuthenticationError);

    SecretKey wrong = k;
    wrong.bytes[0] ^= 0x01;
    CHECK_THROWS_AS(open_entry(good, wrong), AuthenticationError);

    // untouched entry still opens
    CHECK(open_entry(good, k) == secret);
}

TEST_CASE("truncated ciphertext fails closed") {
    SecretKey k = key_from_byte(0x44);
    VaultEntry e = sealed_probe(k, to_bytes("0123456789abcdef0123"));
    e.ciphertext.pop_back();
    CHECK_THROWS_AS(open_entry(e, k), AuthenticationError);
}

TEST_CASE("serialization matches the pinned format") {
    VaultEntry e;
    e.index = 0;
    for (std::size_t i = 0; i < kNonceLen; ++i) e.nonce[i] = static_cast<std::uint8_t>(i);
    e.ciphertext = {0xca, 0xfe};
    for (std::size_t i = 0; i < kTagLen; ++i) e.tag[i] = 0xab;

    VaultFile v;
    v.epoch = 3;
    v.entries = {e};

    std::string expected =
        "HSSS-VAULT v1\n"
        "cipher aes256gcm\n"
        "epoch 3\n"
        "entry 0 000102030405060708090a0b cafe abababababababababababababababab\n";
    CHECK(vault_to_string(v) == expected);
    CHECK(vault_from_string(expected) == v);
}

TEST_CASE("serialization round-trips a sealed vault") {
    SeededRng rng(17);
    SecretKey k = key_from_byte(0x77);
    VaultFile v;
    v.epoch = 12;
    v.entries.push_back(seal(0, to_bytes("alpha"), k, rng));
    v.entries.push_back(seal(1, to_bytes("beta"), k, rng));
    VaultFile back = vault_from_string(vault_to_string(v));
    CHECK(back == v);
    CHECK(open_entry(back.entries[1], k) == to_bytes("beta"));
}

TEST_CASE("parser rejects malformed vault files") {
    const std::string good =
        "HSSS-VAULT v1\n"
        "cipher aes256gcm\n"
        "epoch 0\n"
        "entry 0 000000000000000000000000 00 abababababababababababababababab\n";
    CHECK_NOTHROW(vault_from_string(good));

    CHECK_THROWS_AS(vault_from_string(""), FormatError);
    CHECK_THROWS_AS(vault_from_string("HSSS-VAULT v2\ncipher aes256gcm\nepoch 0\n"), FormatError);
    CHECK_THROWS_AS(vault_from_string("HSSS-VAULT v1\ncipher rot13\nepoch 0\n"), FormatError);
    CHECK_THROWS_AS(vault_from_string("HSSS-VAULT v1\ncipher aes256gcm\nepoch x\n"), FormatError);

    // short nonce
    CHECK_THROWS_AS(vault_from_string("HSSS-VAULT v1\ncipher aes256gcm\nepoch 0\n"
                                      "entry 0 0000 00 abababababababababababababababab\n"),
                    FormatError);
    // short tag
    CHECK_THROWS_AS(vault_from_string("HSSS-VAULT v1\ncipher aes256gcm\nepoch 0\n"
                                      "entry 0 000000000000000000000000 00 abab\n"),
                    FormatError);
    // stray line
    CHECK_THROWS_AS(vault_from_string("HSSS-VAULT v1\ncipher aes256gcm\nepoch 0\nbogus\n"),
                    FormatError);
    // out-of-order entries
    CHECK_THROWS_AS(vault_from_string("HSSS-VAULT v1\ncipher aes256gcm\nepoch 0\n"
                                      "entry 1 000000000000000000000000 00 abababababababababababababababab\n"
                                      "entry 0 000000000000000000000000 00 abababababababababababababababab\n"),
                    FormatError);
}

TEST_CASE("distinct keys give distinct ciphertexts for one plaintext") {
    Bytes secret = to_bytes("same plaintext");
    VaultEntry a = sealed_probe(key_from_byte(0x01), secret);
    VaultEntry b = sealed_probe(key_from_byte(0x02), secret);
    CHECK(a.ciphertext != b.ciphertext);
}
