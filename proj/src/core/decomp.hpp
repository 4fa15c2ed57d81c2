#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "abacus.hpp"
#include "block.hpp"
#include "labeled_matrix.hpp"
#include "vpoly.hpp"
#include "weight2.hpp"

namespace w2b {

/// Everything derived from a single weight-2 block.  Rows and columns of all
/// matrices are the block's partitions in descending lexicographic order.
struct BlockData {
  BlockId id;
  std::vector<Partition> partitions;
  std::vector<AbacusDisplay> displays;  // at the default frame
  std::vector<Weight2Label> labels;
  std::vector<int> sign;  // relative sign, computed by peeling hooks
  std::vector<bool> regular, restricted;
  DeltaClasses classes;
  /// Next member down the same class (towards the singular one); -1 at the
  /// bottom.  For e-regular la this is the conjugate of its Mullineux image.
  std::vector<int> class_successor;
  LabeledMatrix<VPoly> dv;
  LabeledMatrix<long long> d;          // dv at v = 1
  LabeledMatrix<long long> d_inverse;  // signed inverse
  LabeledMatrix<long long> cartan;     // d^T d

  int index_of(const Partition& la) const;  // not_found if absent

private:
  friend std::shared_ptr<const BlockData> analyze_block(const BlockId&);
  std::map<Partition, int> index_;
};

using BlockPtr = std::shared_ptr<const BlockData>;

/// Analyze a weight-2 block; results are cached per BlockId.
BlockPtr analyze_block(const BlockId& b);

/// Index of the partition carrying label (a, b); not_found if absent.
int partition_of_label(const BlockData& bd, int a, int b);

/// Mullineux image of an e-regular la, via the class chain: the conjugate of
/// the class successor.  Lives in the conjugate block.
Partition mullineux(const BlockData& bd, const Partition& la);
/// The same map computed from the label alone; conj must be the analysis of
/// the conjugate block.
Partition mullineux_by_label(const BlockData& bd, const BlockData& conj, const Partition& la);

/// Polynomial inverse-decomposition matrix of bd's block: the inverse of the
/// conjugate block's dv with both indices conjugated and v -> -v.  Entries
/// vanish unless the row dominates the column.
LabeledMatrix<VPoly> e_poly_matrix(const BlockData& bd, const BlockData& conj);

/// Undirected Ext-quiver edges of the block: la, mu joined when d_{la mu}(v)
/// or d_{mu la}(v) equals v.  Each edge appears once as (larger, smaller).
std::vector<std::pair<Partition, Partition>> ext_quiver(const BlockData& bd);

/// Radical layers of the Weyl module of la: layers[k] lists the mu with
/// d_{la mu}(v) = v^k, for k = 0, 1, 2.
std::vector<std::vector<Partition>> weyl_layers(const BlockData& bd, const Partition& la);

/// counts[i] = number of composition factors of the Weyl module of la whose
/// label has partial value i.
std::vector<int> composition_stats(const BlockData& bd, const Partition& la);

}  // namespace w2b
