#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "abacus.hpp"
#include "block.hpp"
#include "decomp.hpp"
#include "labeled_matrix.hpp"
#include "pairs.hpp"
#include "partition.hpp"
#include "vpoly.hpp"
#include "weight2.hpp"

namespace w2b {

using ojson = nlohmann::ordered_json;

/// "3,1" / "" — bare comma-joined parts, used for CSV headers and DOT nodes.
std::string partition_token(const Partition& la);
/// "[3,1]" / "[]" — used by the text format.
std::string bracket_str(const Partition& la);

ojson json_partition(const Partition& la);
ojson json_block_id(const BlockId& b);
ojson json_display(const AbacusDisplay& d);
/// {"a":..,"b":..,"partial":..,"eps":..}; "colour" added only when present.
ojson json_label(const Weight2Label& l);
ojson json_vpoly(const VPoly& p);  // ascending coefficient array
ojson json_classes(const BlockData& bd);
ojson json_matrix(const LabeledMatrix<long long>& m);
ojson json_matrix(const LabeledMatrix<VPoly>& m);
/// json_matrix plus leading "rows_block"/"cols_block" headers.
ojson json_ac_matrix(const LabeledMatrix<long long>& m, const BlockId& rows_block,
                     const BlockId& cols_block);
ojson json_quiver(const std::vector<Partition>& vertices,
                  const std::vector<std::pair<Partition, Partition>>& edges);
ojson json_layers(const Partition& la, const std::vector<std::vector<Partition>>& layers);
/// Includes the six exceptional partitions when k == 1.
ojson json_pair(const PairInfo& pr);

std::string csv_matrix(const LabeledMatrix<long long>& m);
std::string csv_matrix(const LabeledMatrix<VPoly>& m);
std::string text_matrix(const LabeledMatrix<long long>& m);
std::string text_matrix(const LabeledMatrix<VPoly>& m);
std::string dot_quiver(const std::vector<Partition>& vertices,
                       const std::vector<std::pair<Partition, Partition>>& edges);

}  // namespace w2b
