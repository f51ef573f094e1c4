#include "pellredei/rng.hpp"

#include <random>
#include <stdexcept>

namespace pellredei {

RandomSource::RandomSource() {
    gmp_randinit_mt(state_);
    std::random_device rd;
    unsigned long seed = (static_cast<unsigned long>(rd()) << 32) ^ rd();
    gmp_randseed_ui(state_, seed);
}

RandomSource::RandomSource(const Int& seed) {
    gmp_randinit_mt(state_);
    gmp_randseed(state_, seed.get_mpz_t());
}

RandomSource::RandomSource(unsigned long seed) {
    gmp_randinit_mt(state_);
    gmp_randseed_ui(state_, seed);
}

RandomSource::~RandomSource() { gmp_randclear(state_); }

Int RandomSource::bits(std::size_t nbits) {
    Int r;
    if (nbits > 0) mpz_urandomb(r.get_mpz_t(), state_, nbits);
    return r;
}

Int RandomSource::below(const Int& n) {
    if (n <= 0) throw std::invalid_argument("RandomSource::below: n must be positive");
    Int r;
    mpz_urandomm(r.get_mpz_t(), state_, n.get_mpz_t());
    return r;
}

Int RandomSource::odd_bits(std::size_t nbits, bool force_top_two) {
    if (nbits < 2) throw std::invalid_argument("RandomSource::odd_bits: need at least 2 bits");
    Int r = bits(nbits);
    mpz_setbit(r.get_mpz_t(), nbits - 1);
    if (force_top_two && nbits >= 3) mpz_setbit(r.get_mpz_t(), nbits - 2);
    mpz_setbit(r.get_mpz_t(), 0);
    return r;
}

}  // namespace pellredei
