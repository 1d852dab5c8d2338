#pragma once

#include <string>

#include "json.hpp"
#include "mullineux/cores.hpp"
#include "mullineux/js.hpp"
#include "mullineux/partition.hpp"
#include "mullineux/signatures.hpp"
#include "mullineux/symbols.hpp"

namespace mlx {

using json = nlohmann::ordered_json;

// Wire formats:
//   Partition        [6,6,5,4]
//   NVector          [2,-1,0,-1,0]
//   CoreShape        {"kind":"empty"} | {"kind":"rect","l":2,"a":2}
//   MullineuxSymbol  {"top":[...],"bottom":[...]}
//   ResidueSymbol    {"x":[...],"y":[...]}
//   Signature        [{"res":1,"sign":"+"}, ...]
//   JSGraph          {"schema":1,"p":...,"alpha":...,"fixed":...,
//                     "vertices":[{"x":..,"y":..}],
//                     "starts":[{"x":..,"y":..,"d0":..}],
//                     "edges":[{"src":{..},"dst":{..},"d":..,"e":..}]}

json to_json(const Partition& lambda);
Partition partition_from_json(const json& j);

json to_json(const CoreShape& shape);
CoreShape core_shape_from_json(const json& j);

json to_json(const MullineuxSymbol& symbol);
MullineuxSymbol mullineux_symbol_from_json(const json& j);

json to_json(const ResidueSymbol& symbol);
ResidueSymbol residue_symbol_from_json(const json& j);

json to_json(const SignatureSequence& seq);
SignatureSequence signature_from_json(const json& j, int p);

json to_json(const JSGraph& graph);

}  // namespace mlx
