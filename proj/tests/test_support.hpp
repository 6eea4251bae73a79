#pragma once

// Hand-rolled generators for property tests.

#include "seifert/invariants.hpp"

#include <cstdint>
#include <numeric>
#include <random>

namespace seifert::test_support {

/// A random descriptor: any base, 0..6 pairs (some with q = 1, some with p
/// outside [0,q)), b in [-6,6]. Every q >= 2 pair is coprime.
inline SeifertInvariants random_descriptor(std::mt19937_64& rng, bool allow_nonorientable = true)
{
    std::uniform_int_distribution<int> small(-12, 12);
    std::uniform_int_distribution<int> order(1, 9);
    std::uniform_int_distribution<int> count(0, 6);
    std::uniform_int_distribution<int> genus(0, 5);
    std::bernoulli_distribution coin(0.5);

    SeifertInvariants m;
    m.base.orientable = !allow_nonorientable || coin(rng);
    m.base.genus = genus(rng) + (m.base.orientable ? 0 : 1);
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
        const int q = order(rng);
        int p = small(rng);
        while (q >= 2 && std::gcd(p, q) != 1) p = small(rng);
        m.exceptional.push_back({q, p});
    }
    m.b = small(rng) / 2;
    return m;
}

} // namespace seifert::test_support
