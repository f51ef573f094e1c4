#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pellredei::ops {

// One modular exponentiation, as seen by the cost accounting. The cost table
// treats an exponentiation as a unit, so multiplications performed inside it
// are recorded on the event rather than on the surrounding counters.
// core_mults covers the square-and-multiply (or ladder) steps and satisfies
// k <= core_mults <= 2k for a k-bit exponent; aux_mults and invs are the
// constant-size bookkeeping some exponentiation kernels carry around the
// ladder.
struct ExpEvent {
    std::size_t exponent_bits = 0;
    std::uint64_t core_mults = 0;
    std::uint64_t aux_mults = 0;
    std::uint64_t invs = 0;
};

struct OpCounters {
    std::uint64_t mults = 0;  // modular multiplications outside exponentiations
    std::uint64_t invs = 0;   // modular inversions outside exponentiations
    std::vector<ExpEvent> exps;

    void reset() {
        mults = 0;
        invs = 0;
        exps.clear();
    }
};

// Binds counters to the current thread for the scope's lifetime. Counting is
// off (and free apart from a thread-local null check) when no scope is open.
class CountScope {
public:
    explicit CountScope(OpCounters& counters);
    ~CountScope();
    CountScope(const CountScope&) = delete;
    CountScope& operator=(const CountScope&) = delete;

private:
    OpCounters* prev_;
};

// Marks an exponentiation: multiplications and inversions noted while the
// scope is open land on this event, which is appended to the active counters
// (if any) on destruction. Nesting shadows the outer event.
class ExpScope {
public:
    explicit ExpScope(std::size_t exponent_bits);
    ~ExpScope();
    ExpScope(const ExpScope&) = delete;
    ExpScope& operator=(const ExpScope&) = delete;

private:
    ExpEvent event_;
    ExpEvent* prev_;
};

// Tally hooks used by the modular arithmetic layer.
void note_mult();       // general multiplication (squarings count too)
void note_core_mult();  // ladder-step multiplication inside an ExpScope
void note_inv();

}  // namespace pellredei::ops
