#pragma once

#include <cstdint>
#include <vector>

#include "congrlab/rational.hpp"
#include "congrlab/residue.hpp"
#include "congrlab/verdict.hpp"

namespace congrlab {

// Exact Bernoulli numbers B_0..B_N (B_1 = -1/2), grown on demand from
//   sum_{k=0}^{n} C(n+1, k) B_k = 0.
// Not synchronized; build it up front and share it read-only.
class BernoulliCache {
public:
    BernoulliCache();

    // Extends the table through index n.
    void ensure(unsigned n);
    unsigned size() const { return static_cast<unsigned>(b_.size()); }

    // Throws if n has not been computed.
    const ExactRational& at(unsigned n) const;

private:
    std::vector<ExactRational> b_;
};

// Process-wide cache, guarded by a mutex. Returns a copy of B_n.
ExactRational bernoulli_exact(unsigned n);

// Grows the process-wide cache through n before workers start.
void warm_bernoulli(unsigned n);

// B_n in Z/p^j. Throws NonPIntegerBernoulli when p divides the denominator.
Residue bernoulli_mod(std::uint64_t p, unsigned n, unsigned j);

// S_1 = -1/3 p^2 B_{p-3} mod p^3 and S_2 = 2/3 p B_{p-3} mod p^2 (p >= 5).
std::vector<Verdict> check_lemma4(std::uint64_t p);

} // namespace congrlab
