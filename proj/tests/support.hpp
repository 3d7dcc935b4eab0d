#pragma once

#include "torfan/instance.hpp"

#include <initializer_list>
#include <string>

namespace torfan::testing {

inline IntVector iv(std::initializer_list<long> xs) {
    IntVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline RatVector rv(std::initializer_list<long> xs) {
    RatVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline ToricInstance shipped(const std::string& name) {
    return load_instance_file(std::string(TORFAN_INSTANCE_DIR) + "/" + name + ".json");
}

}  // namespace torfan::testing
