#include "pellredei/keyio.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace pellredei::keyio {

namespace {

constexpr const char* kScheme = "pell-redei";

std::map<std::string, std::string> parse_map(const std::string& text) {
    std::map<std::string, std::string> fields;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ParseError("malformed key file line: " + line);
        }
        const std::string name = line.substr(0, eq);
        if (!fields.emplace(name, line.substr(eq + 1)).second) {
            throw ParseError("duplicate field: " + name);
        }
    }
    return fields;
}

// Extracts a required field, erasing it so leftovers can be flagged.
std::string take(std::map<std::string, std::string>& fields, const std::string& name) {
    const auto it = fields.find(name);
    if (it == fields.end()) throw ParseError("missing field: " + name);
    std::string value = it->second;
    fields.erase(it);
    return value;
}

Int take_int(std::map<std::string, std::string>& fields, const std::string& name) {
    try {
        return from_hex(take(fields, name));
    } catch (const std::invalid_argument&) {
        throw ParseError("field is not valid hex: " + name);
    }
}

void check_header(std::map<std::string, std::string>& fields) {
    if (take(fields, "version") != "1") throw ParseError("unsupported field value: version");
    if (take(fields, "scheme") != kScheme) throw ParseError("unsupported field value: scheme");
}

void check_empty(const std::map<std::string, std::string>& fields) {
    if (!fields.empty()) throw ParseError("unknown field: " + fields.begin()->first);
}

}  // namespace

std::string serialize_public(const PublicKey& pub) {
    std::ostringstream out;
    out << "version=1\n"
        << "scheme=" << kScheme << "\n"
        << "n=" << to_hex(pub.n) << "\n"
        << "e=" << to_hex(pub.e) << "\n";
    return out.str();
}

std::string serialize_secret(const SecretKey& sec) {
    std::ostringstream out;
    out << "version=1\n"
        << "scheme=" << kScheme << "\n"
        << "n=" << to_hex(sec.n) << "\n"
        << "e=" << to_hex(sec.e) << "\n"
        << "p=" << to_hex(sec.p) << "\n"
        << "q=" << to_hex(sec.q) << "\n"
        << "d=" << to_hex(sec.d) << "\n";
    if (sec.d_robust) out << "d_robust=" << to_hex(*sec.d_robust) << "\n";
    out << "convention=" << (sec.convention == Convention::Lcm ? "lcm" : "product") << "\n";
    return out.str();
}

PublicKey parse_public(const std::string& text) {
    auto fields = parse_map(text);
    check_header(fields);
    PublicKey pub;
    pub.n = take_int(fields, "n");
    pub.e = take_int(fields, "e");
    check_empty(fields);
    return pub;
}

SecretKey parse_secret(const std::string& text) {
    auto fields = parse_map(text);
    check_header(fields);
    SecretKey sec;
    sec.n = take_int(fields, "n");
    sec.e = take_int(fields, "e");
    sec.p = take_int(fields, "p");
    sec.q = take_int(fields, "q");
    sec.d = take_int(fields, "d");
    if (fields.count("d_robust") != 0) sec.d_robust = take_int(fields, "d_robust");
    const std::string convention = take(fields, "convention");
    if (convention == "lcm") {
        sec.convention = Convention::Lcm;
    } else if (convention == "product") {
        sec.convention = Convention::Product;
    } else {
        throw ParseError("unsupported field value: convention");
    }
    check_empty(fields);
    return sec;
}

std::string serialize_ciphertexts(const std::vector<CiphertextPair>& cts) {
    std::ostringstream out;
    for (const auto& ct : cts) {
        out << "C=" << to_hex(ct.c) << " D=" << to_hex(ct.d_pub) << "\n";
    }
    return out.str();
}

std::vector<CiphertextPair> parse_ciphertexts(const std::string& text) {
    std::vector<CiphertextPair> cts;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto space = line.find(' ');
        if (space == std::string::npos || line.rfind("C=", 0) != 0 ||
            line.compare(space + 1, 2, "D=") != 0) {
            throw ParseError("malformed ciphertext record: " + line);
        }
        try {
            cts.push_back({from_hex(line.substr(2, space - 2)),
                           from_hex(line.substr(space + 3))});
        } catch (const std::invalid_argument&) {
            throw ParseError("ciphertext record is not valid hex: " + line);
        }
    }
    return cts;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw std::runtime_error("read failure: " + path);
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failure: " + path);
}

}  // namespace pellredei::keyio
