#include "pellredei/opcount.hpp"

namespace pellredei::ops {

namespace {
thread_local OpCounters* tl_counters = nullptr;
thread_local ExpEvent* tl_event = nullptr;
}  // namespace

CountScope::CountScope(OpCounters& counters) : prev_(tl_counters) {
    tl_counters = &counters;
}

CountScope::~CountScope() { tl_counters = prev_; }

ExpScope::ExpScope(std::size_t exponent_bits) : prev_(tl_event) {
    event_.exponent_bits = exponent_bits;
    tl_event = &event_;
}

ExpScope::~ExpScope() {
    tl_event = prev_;
    if (tl_counters) tl_counters->exps.push_back(event_);
}

void note_mult() {
    if (tl_event)
        ++tl_event->aux_mults;
    else if (tl_counters)
        ++tl_counters->mults;
}

void note_core_mult() {
    if (tl_event)
        ++tl_event->core_mults;
    else if (tl_counters)
        ++tl_counters->mults;
}

void note_inv() {
    if (tl_event)
        ++tl_event->invs;
    else if (tl_counters)
        ++tl_counters->invs;
}

}  // namespace pellredei::ops
