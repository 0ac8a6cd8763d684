#include "zsum/pell.hpp"

#include "zsum/errors.hpp"

namespace zsum::pell {

namespace {

void require_count(int count) {
    if (count < 1) throw ArgumentOutOfRange("count must be >= 1");
}

void check_neg_pell(const BigInt& x, const BigInt& y) {
    if (y * y - 2 * x * x != -1)
        throw InternalInconsistency("emitted term fails y^2 - 2x^2 = -1");
    if (mpz_odd_p(x.get_mpz_t()) == 0 || mpz_odd_p(y.get_mpz_t()) == 0)
        throw InternalInconsistency("neg-pell term with even coordinate");
}

void check_bal_clique(const BigInt& x, const BigInt& y) {
    if (8 * x * x - 8 * x + 1 != y * y)
        throw InternalInconsistency("emitted term fails 8x^2 - 8x + 1 = y^2");
}

// Incremental generator for 8x^2 - 8x + 1 = y^2. Every term is validated
// on construction and on each advance.
struct BalCliqueIter {
    int k = 1;
    BigInt x = 1, y = 1;
    BigInt px = 0, py = 0;

    BalCliqueIter() { check_bal_clique(x, y); }

    void advance() {
        BigInt nx, ny;
        if (k == 1) {
            nx = 3;
            ny = 7;
        } else {
            ny = 6 * y - py;
            BigInt numer = ny + x + 1;
            if (!mpz_divisible_ui_p(numer.get_mpz_t(), 3))
                throw InternalInconsistency("x_k recursion: (y_k + x_{k-1} + 1) not divisible by 3");
            mpz_divexact_ui(nx.get_mpz_t(), numer.get_mpz_t(), 3);
        }
        px = x;
        py = y;
        x = nx;
        y = ny;
        ++k;
        check_bal_clique(x, y);
        if (x <= px || y <= py) throw InternalInconsistency("stream not strictly increasing");
    }
};

} // namespace

std::vector<PellSolution> neg_pell_stream(int count) {
    require_count(count);
    std::vector<PellSolution> out;
    out.reserve(count);
    BigInt x = 1, y = 1;
    for (int k = 1; k <= count; ++k) {
        check_neg_pell(x, y);
        out.push_back({k, x, y, Family::NegPell});
        BigInt nx = 3 * x + 2 * y;
        BigInt ny = 4 * x + 3 * y;
        x = nx;
        y = ny;
    }
    return out;
}

std::vector<PellSolution> bal_clique_stream(int count) {
    require_count(count);
    std::vector<PellSolution> out;
    out.reserve(count);
    BalCliqueIter it;
    for (int k = 1; k <= count; ++k) {
        out.push_back({it.k, it.x, it.y, Family::BalClique});
        it.advance();
    }
    return out;
}

std::vector<BigInt> s1_members(const BigInt& limit) {
    if (limit < 1) throw ArgumentOutOfRange("limit must be >= 1");
    std::vector<BigInt> out;
    // n = (1+y)/2 <= limit  <=>  y <= 2*limit - 1
    BigInt ybound = 2 * limit - 1;
    for (BalCliqueIter it; it.y <= ybound; it.advance()) out.push_back((1 + it.y) / 2);
    return out;
}

std::vector<BigInt> s2_members(const BigInt& limit) {
    if (limit < 1) throw ArgumentOutOfRange("limit must be >= 1");
    std::vector<BigInt> out;
    for (BigInt k = 1; k * k <= limit; ++k) out.push_back(k * k);
    return out;
}

std::vector<BigInt> s1_s2_intersection(const BigInt& limit) {
    if (limit < 1) throw ArgumentOutOfRange("limit must be >= 1");
    std::vector<BigInt> out;
    // Walk the square stream alongside the S1 stream; S1 is far sparser.
    BigInt k = 1, square = 1;
    for (const BigInt& n : s1_members(limit)) {
        while (square < n) {
            ++k;
            square = k * k;
        }
        if (square == n) out.push_back(n);
    }
    return out;
}

bool is_perfect_square(const BigInt& v) {
    if (v < 0) return false;
    return mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

bool ljunggren_check(const BigInt& w) {
    if (w < 1) throw ArgumentOutOfRange("w must be >= 1");
    BigInt v = 2 * w * w * w * w - 1;
    return is_perfect_square(v);
}

} // namespace zsum::pell
