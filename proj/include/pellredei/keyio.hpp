#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pellredei/cryptosystem.hpp"

namespace pellredei::keyio {

// Malformed key or ciphertext text. The message names the offending field.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Key files are flat `name=value` maps, one field per line, integers in
// lowercase hex without leading zeros, trailing newline. Field order is
// canonical on write ({version, scheme, n, e} then p, q, d, d_robust?,
// convention for secret keys); the parser accepts any order but rejects
// duplicate, unknown, or missing fields.
std::string serialize_public(const PublicKey& pub);
std::string serialize_secret(const SecretKey& sec);
PublicKey parse_public(const std::string& text);
SecretKey parse_secret(const std::string& text);

// Ciphertext stream: one `C=<hex> D=<hex>` record per line, trailing
// newline; an empty stream is an empty string.
std::string serialize_ciphertexts(const std::vector<CiphertextPair>& cts);
std::vector<CiphertextPair> parse_ciphertexts(const std::string& text);

// Whole-file helpers; throw std::runtime_error naming the path on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace pellredei::keyio
