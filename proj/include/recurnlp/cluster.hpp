#ifndef RECURNLP_CLUSTER_HPP
#define RECURNLP_CLUSTER_HPP

#include <string>
#include <vector>

namespace recurnlp {

// Binary merge tree from agglomerative clustering. Nodes 0..n_leaves-1
// are the leaves in input order; internal nodes follow in merge order
// with the root last. Leaf height is 0.
struct DendrogramNode {
    int left = -1;
    int right = -1;
    double height = 0.0;
    std::string label; // leaves only
};

struct Dendrogram {
    std::vector<DendrogramNode> nodes;
    int root = -1;

    // Newick with branch lengths = parent height - child height; labels
    // containing Newick metacharacters are single-quoted.
    std::string to_newick() const;
};

// Complete-linkage agglomeration over Euclidean distances between rows.
// Ties are broken deterministically by the ascending (smallest-leaf-
// label) order of the candidate pair. Requires >= 2 rows; throws
// DataError on duplicate labels and ShapeError on ragged rows.
Dendrogram hclust_complete(const std::vector<std::vector<double>>& rows,
                           const std::vector<std::string>& labels);

} // namespace recurnlp

#endif
