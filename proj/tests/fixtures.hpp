#pragma once

#include "congrlab/catalog.hpp"

namespace fixtures {

// The default catalog plus one case that is false at every prime, used to
// exercise the failure exit status.
inline congrlab::Catalog catalog_with_false_case() {
    congrlab::Catalog cat = congrlab::default_catalog();
    congrlab::CongruenceCase c;
    c.id = "always_false";
    c.statement = "1 = 2 mod p";
    c.min_prime = 3;
    c.exponent = [](std::uint64_t) { return 1U; };
    c.evaluate = [](congrlab::PrimeContext& ctx, const congrlab::PIntegerRational*) {
        return congrlab::Sides{ctx.constant(1), ctx.constant(2), true};
    };
    cat.push_back(std::move(c));
    return cat;
}

} // namespace fixtures
