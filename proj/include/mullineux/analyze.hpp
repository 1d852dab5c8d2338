#pragma once

#include "mullineux/json_io.hpp"
#include "mullineux/partition.hpp"

namespace mlx {

/// Full report on one partition: residue diagram, content, n-vector, core,
/// weight, both symbols, node and Mullineux sequences, normal/good nodes,
/// JS status and type, Mullineux image and fixedness. Fields that require
/// p-regularity are null for non-p-regular input, with "p_regular" false.
json analyze_partition(const Partition& lambda, int p);

}  // namespace mlx
