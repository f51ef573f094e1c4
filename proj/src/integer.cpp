#include "pellredei/integer.hpp"

#include <cctype>
#include <stdexcept>

namespace pellredei {

std::string to_hex(const Int& v) {
    if (v < 0) throw std::invalid_argument("to_hex: negative value");
    return v.get_str(16);
}

Int from_hex(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("from_hex: empty string");
    for (char c : s) {
        if (!std::isxdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("from_hex: invalid digit");
    }
    Int v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 16) != 0)
        throw std::invalid_argument("from_hex: parse failure");
    return v;
}

std::vector<std::uint8_t> to_bytes(const Int& v) {
    if (v < 0) throw std::invalid_argument("to_bytes: negative value");
    if (v == 0) return {};
    std::size_t count = 0;
    std::vector<std::uint8_t> out((mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8);
    mpz_export(out.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
    out.resize(count);
    return out;
}

Int from_bytes(const std::uint8_t* data, std::size_t len) {
    Int v = 0;
    if (len > 0) mpz_import(v.get_mpz_t(), len, 1, 1, 1, 0, data);
    return v;
}

}  // namespace pellredei
