// Copyright (c) the ledgerbft authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lbft/crypto.hpp"
#include "lbft/encoding.hpp"

namespace lbft {

// Domain separation: leaf digests are H(0x00 || body), interior nodes
// H(0x01 || left || right).
Digest merkle_leaf(BytesView body);
Digest merkle_interior(const Digest& left, const Digest& right);
Digest merkle_empty_root();

enum class Side : uint8_t { Left = 0, Right = 1 };

struct MerklePath {
    uint64_t leaf_index = 0;
    std::vector<std::pair<Digest, Side>> siblings;

    void encode(Encoder& e) const;
    static MerklePath decode(Decoder& d);
};

bool verify_path(const Digest& root, const Digest& leaf, const MerklePath& path);
Digest replay_path(const Digest& leaf, const MerklePath& path);

// State needed to resume appending to a tree without its full history:
// leaf count plus the stable subtree roots on the right edge (the
// "connecting branches"), the newest leaf, and the root.
struct MerkleAnchor {
    uint64_t leaf_count = 0;
    Digest root;                                      // root at leaf_count
    Digest newest_leaf;                               // zero when empty
    std::vector<std::pair<uint32_t, Digest>> frontier; // (level, node), high to low

    void encode(Encoder& e) const;
    static MerkleAnchor decode(Decoder& d);
    Digest digest() const;
};

// Append-only binary Merkle tree with duplicate-free promotion: the odd
// node at a level is promoted unhashed; a single-leaf tree's root is the
// leaf digest; the empty root is the digest of the empty string. Supports
// truncation of a rightmost suffix. Node values never change once their
// subtree is complete, which is what makes anchors sound.
class MerkleTree {
public:
    MerkleTree() = default;

    // Resumes from an anchor; leaves below the anchor are unavailable for
    // paths and truncation.
    static MerkleTree from_anchor(const MerkleAnchor& anchor);

    void append(const Digest& leaf);
    Digest root() const;
    uint64_t leaf_count() const { return n_; }
    uint64_t base() const { return base_; }

    // pre: base() <= index < leaf_count(); full history required below base.
    MerklePath path(uint64_t leaf_index) const;
    Digest leaf_at(uint64_t index) const;

    // pre: base() <= new_count <= leaf_count()
    void truncate(uint64_t new_count);

    MerkleAnchor anchor() const;

private:
    Digest node(uint32_t level, uint64_t index) const;
    uint64_t eff_count(uint32_t level) const;

    uint64_t n_ = 0;
    uint64_t base_ = 0;
    Digest base_newest_; // newest leaf at the anchor point, for re-export
    // levels_[k] holds stable (complete aligned span) nodes starting at
    // level_base_[k]; level 0 is the stored leaves.
    std::vector<std::vector<Digest>> levels_;
    std::vector<uint64_t> level_base_;
};

} // namespace lbft
