#pragma once

// Integer solution streams for two Diophantine families and the derived
// membership sets S1 (orders admitting a balanced one-clique weighting)
// and S2 (perfect squares). All arithmetic is arbitrary precision; every
// emitted term is re-verified against its defining equation.

#include <gmpxx.h>

#include <vector>

namespace zsum::pell {

using BigInt = mpz_class;

enum class Family {
    NegPell,  // y^2 - 2x^2 = -1
    BalClique // 8x^2 - 8x + 1 = y^2
};

struct PellSolution {
    int k = 0; // 1-based position in the stream
    BigInt x;
    BigInt y;
    Family family = Family::NegPell;
};

// First `count` solutions of y^2 - 2x^2 = -1, ascending.
// Seed (1,1); successor (x,y) -> (3x+2y, 4x+3y), validated per term.
std::vector<PellSolution> neg_pell_stream(int count);

// First `count` solutions of 8x^2 - 8x + 1 = y^2, ascending.
// (x1,y1)=(1,1), (x2,y2)=(3,7), y_k = 6y_{k-1} - y_{k-2},
// x_k = (y_k + x_{k-1} + 1)/3 with the division checked exact.
std::vector<PellSolution> bal_clique_stream(int count);

// All n = (1+y_k)/2 <= limit, ascending.
std::vector<BigInt> s1_members(const BigInt& limit);

// All perfect squares <= limit, ascending.
std::vector<BigInt> s2_members(const BigInt& limit);

// Sorted intersection of the two membership streams up to limit,
// computed by merging the streams.
std::vector<BigInt> s1_s2_intersection(const BigInt& limit);

// True iff 2w^4 - 1 is a perfect square.
bool ljunggren_check(const BigInt& w);

bool is_perfect_square(const BigInt& v);

} // namespace zsum::pell
