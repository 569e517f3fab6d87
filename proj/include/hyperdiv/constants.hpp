#pragma once

#include "hyperdiv/divisor.hpp"

namespace hyperdiv {

enum class TailMode { crude, abel };

// A numeric value with a certified bound on its distance from the true limit.
// tail is nonincreasing in cutoff for fixed mode.
struct RigorousValue {
    double value = 0.0;
    double tail = 0.0;  // bound on |true - value|
    u64 cutoff = 0;
    TailMode mode = TailMode::crude;
};

// C1 = sum_{d>=1} tau(d)/(d(d+1)).
//   crude: value = partial sum to cutoff, tail = 4/sqrt(cutoff) from tau(d) <= 2 sqrt(d).
//   abel:  value = partial sum + closed-form integral of the smooth part of the
//          remainder, tail = Delta-envelope contribution (|Delta(t)| <= sqrt(t)+4)
//          plus series truncation; needs cutoff >= 3.
RigorousValue compute_c1(const DivisorTable& table, u64 cutoff, TailMode mode);

// C3 = sum_{d>=1} tau(d) (log d/d - log(d+1)/(d+1)); same two modes.
// Crude tail formula 4(log cutoff + 2)/sqrt(cutoff) holds for cutoff >= 3;
// smaller cutoffs extend it with the explicitly summed missing terms.
RigorousValue compute_c3(const DivisorTable& table, u64 cutoff, TailMode mode);

// C2 = (2*gamma - 1)*C1 - C3 with linear tail propagation. Mixed input modes
// are labeled crude; cutoff is the smaller of the two inputs.
RigorousValue compute_c2(const RigorousValue& c1, const RigorousValue& c3);

}  // namespace hyperdiv
