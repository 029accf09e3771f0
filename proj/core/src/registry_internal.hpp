#ifndef TQMEAN_SRC_REGISTRY_INTERNAL_HPP
#define TQMEAN_SRC_REGISTRY_INTERNAL_HPP

#include <vector>

#include "tqmean/inequality_registry.hpp"

namespace tqmean::detail {

std::vector<InequalityCase> build_registry();

} // namespace tqmean::detail

#endif
