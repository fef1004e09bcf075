#pragma once

#include <fgs/hopf.hpp>

#include <string>
#include <utility>
#include <vector>

namespace testsupport {

/// One representative Hopf algebra per constructor family and base ring.
inline std::vector<std::pair<std::string, fgs::HopfAlgebra>> named_hopf_zoo() {
    using namespace fgs;
    const RingSpec z = RingSpec::integers();
    std::vector<std::pair<std::string, HopfAlgebra>> zoo;
    zoo.emplace_back("C1/Z", constant_group(CayleyTable::cyclic(1), z));
    zoo.emplace_back("C2/Z", constant_group(CayleyTable::cyclic(2), z));
    zoo.emplace_back("C3/Z", constant_group(CayleyTable::cyclic(3), z));
    zoo.emplace_back("C4/Z", constant_group(CayleyTable::cyclic(4), z));
    zoo.emplace_back("Klein/Z", constant_group(CayleyTable::klein(), z));
    zoo.emplace_back("S3/Z", constant_group(CayleyTable::symmetric3(), z));
    zoo.emplace_back("mu2/Z", mu_n(2, z));
    zoo.emplace_back("mu3/Z", mu_n(3, z));
    zoo.emplace_back("alpha2/F2", alpha_p(2, RingSpec::integers_mod(2)));
    zoo.emplace_back("alpha3/F3", alpha_p(3, RingSpec::integers_mod(3)));
    zoo.emplace_back("C2xmu2/Z", direct_product(constant_group(CayleyTable::cyclic(2), z), mu_n(2, z)));
    zoo.emplace_back("alpha2xmu2/F2", direct_product(alpha_p(2, RingSpec::integers_mod(2)),
                                                     mu_n(2, RingSpec::integers_mod(2))));
    zoo.emplace_back("C2/F2", base_change(constant_group(CayleyTable::cyclic(2), z), RingSpec::integers_mod(2)));
    zoo.emplace_back("C3/Z4", base_change(constant_group(CayleyTable::cyclic(3), z), RingSpec::integers_mod(4)));
    zoo.emplace_back("mu2/Q", base_change(mu_n(2, z), RingSpec::rationals()));
    zoo.emplace_back("C2/Q", base_change(constant_group(CayleyTable::cyclic(2), z), RingSpec::rationals()));
    return zoo;
}

}  // namespace testsupport
