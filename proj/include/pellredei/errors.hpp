#pragma once

#include <stdexcept>
#include <string>

#include "pellredei/integer.hpp"

namespace pellredei {

// A required modular inverse does not exist. Carries gcd(value, n): over a
// composite modulus a gcd strictly between 1 and n is a nontrivial factor,
// which is exactly the leak the decoding worked example turns on, so callers
// must be able to see it.
class NotInvertible : public std::runtime_error {
public:
    NotInvertible(Int gcd_value, const std::string& what_arg)
        : std::runtime_error(what_arg), gcd(std::move(gcd_value)) {}
    Int gcd;
};

// Mixing elements that live over different (H, D, n) parameter sets.
class ParamMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Exhaustive enumeration requested over a modulus beyond the scan bound.
class TooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Public exponent unusable: even, < 3, or not coprime to the group order
// after the configured number of prime retries.
class BadExponent : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Prime sampling did not hit a probable prime within the retry bound.
class ExhaustedAttempts : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Message pair failed validation (non-unit coordinate or bad residue class).
class InvalidMessage : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Byte encoding could not produce a valid pair within 256 padding retries.
class EncodingExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A decoded block does not carry a well-formed frame.
class FrameError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Neither secret exponent recovered a self-consistent plaintext.
class DecryptionFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pellredei
