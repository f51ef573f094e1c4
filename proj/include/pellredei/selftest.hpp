#pragma once

#include <string>
#include <vector>

namespace pellredei::selftest {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // frozen values or first failure, printable as-is
};

// The worked reference pipeline (p=11, q=13, e=5): every intermediate value
// of key derivation, validation, encryption, decryption, the competing
// scheme's encoding step, and the RSA baseline, all against frozen numbers.
std::vector<CheckResult> example_pipeline();

// Exhaustive conic/parameter-line algebra over every odd prime p <= max_p
// and every (h, d) in [0,p)^2 with x^2 - hx - d irreducible: point count
// p+1, closure, commutativity, identity, inverses, associativity (all
// triples, via the multiplication table), order-(p+1) and power-(p+2)
// identities, the isomorphism with the parameter line (homomorphism +
// bijection on all pairs), and the parameter-line power identities.
std::vector<CheckResult> group_law_suite(unsigned max_p);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace pellredei::selftest
