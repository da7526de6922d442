// Copyright (c) the ledgerbft authors.
// SPDX-License-Identifier: Apache-2.0
#include "lbft/merkle.hpp"

#include <cassert>
#include <stdexcept>

namespace lbft {

Digest merkle_leaf(BytesView body) {
    Encoder e;
    e.u8(0x00).raw(body);
    return hash(e.data());
}

Digest merkle_interior(const Digest& left, const Digest& right) {
    Encoder e;
    e.u8(0x01).raw(left.view()).raw(right.view());
    return hash(e.data());
}

Digest merkle_empty_root() {
    return hash(BytesView{});
}

void MerklePath::encode(Encoder& e) const {
    e.u64(leaf_index);
    e.u32(static_cast<uint32_t>(siblings.size()));
    for (const auto& [d, side] : siblings) {
        e.u8(static_cast<uint8_t>(side));
        encode_digest(e, d);
    }
}

MerklePath MerklePath::decode(Decoder& d) {
    MerklePath p;
    p.leaf_index = d.u64();
    uint32_t n = d.u32();
    if (n > 64) throw DecodeError("merkle path too long");
    p.siblings.reserve(n);
    for (uint32_t i = 0; i < n; i++) {
        uint8_t s = d.u8();
        if (s > 1) throw DecodeError("bad path side");
        Digest dg = decode_digest(d);
        p.siblings.emplace_back(dg, static_cast<Side>(s));
    }
    return p;
}

Digest replay_path(const Digest& leaf, const MerklePath& path) {
    Digest cur = leaf;
    for (const auto& [sib, side] : path.siblings)
        cur = side == Side::Left ? merkle_interior(sib, cur) : merkle_interior(cur, sib);
    return cur;
}

bool verify_path(const Digest& root, const Digest& leaf, const MerklePath& path) {
    return replay_path(leaf, path) == root;
}

void MerkleAnchor::encode(Encoder& e) const {
    e.u64(leaf_count);
    encode_digest(e, root);
    encode_digest(e, newest_leaf);
    e.u32(static_cast<uint32_t>(frontier.size()));
    for (const auto& [lvl, d] : frontier) {
        e.u32(lvl);
        encode_digest(e, d);
    }
}

MerkleAnchor MerkleAnchor::decode(Decoder& d) {
    MerkleAnchor a;
    a.leaf_count = d.u64();
    a.root = decode_digest(d);
    a.newest_leaf = decode_digest(d);
    uint32_t n = d.u32();
    if (n > 64) throw DecodeError("anchor frontier too long");
    for (uint32_t i = 0; i < n; i++) {
        uint32_t lvl = d.u32();
        Digest dg = decode_digest(d);
        a.frontier.emplace_back(lvl, dg);
    }
    return a;
}

Digest MerkleAnchor::digest() const {
    Encoder e;
    encode(e);
    return hash(e.data());
}

uint64_t MerkleTree::eff_count(uint32_t level) const {
    uint64_t c = n_;
    for (uint32_t k = 0; k < level; k++) c = (c + 1) / 2;
    return c;
}

Digest MerkleTree::node(uint32_t level, uint64_t index) const {
    if (level == 0) {
        assert(index >= level_base_[0]);
        return levels_[0][index - level_base_[0]];
    }
    uint64_t stable_total = n_ >> level;
    if (index < stable_total) {
        assert(level < levels_.size() && index >= level_base_[level]);
        return levels_[level][index - level_base_[level]];
    }
    uint64_t m_prev = eff_count(level - 1);
    if (2 * index + 1 < m_prev)
        return merkle_interior(node(level - 1, 2 * index), node(level - 1, 2 * index + 1));
    return node(level - 1, 2 * index); // odd node promoted unhashed
}

void MerkleTree::append(const Digest& leaf) {
    if (levels_.empty()) {
        levels_.emplace_back();
        level_base_.push_back(base_);
    }
    levels_[0].push_back(leaf);
    n_++;
    // Complete freshly filled spans bottom-up.
    for (uint32_t k = 1; (n_ & ((1ULL << k) - 1)) == 0 && (n_ >> k) > 0; k++) {
        if (levels_.size() <= k) {
            levels_.emplace_back();
            uint64_t lb = (base_ >> k);
            if ((base_ >> k) & 1) lb -= 1; // anchor node occupies the odd slot
            level_base_.push_back(lb);
        }
        uint64_t j = (n_ >> k) - 1;
        if (j < level_base_[k]) break;
        assert(level_base_[k] + levels_[k].size() == j);
        Digest l = node(k - 1, 2 * j);
        Digest r = node(k - 1, 2 * j + 1);
        levels_[k].push_back(merkle_interior(l, r));
    }
}

Digest MerkleTree::root() const {
    if (n_ == 0) return merkle_empty_root();
    uint32_t k = 0;
    while (eff_count(k) > 1) k++;
    return node(k, 0);
}

Digest MerkleTree::leaf_at(uint64_t index) const {
    if (index < base_ || index >= n_) throw std::out_of_range("merkle leaf index");
    return levels_[0][index - level_base_[0]];
}

MerklePath MerkleTree::path(uint64_t leaf_index) const {
    if (leaf_index >= n_) throw std::out_of_range("merkle leaf index out of range");
    if (base_ != 0) throw std::logic_error("paths need full leaf history");
    MerklePath p;
    p.leaf_index = leaf_index;
    uint64_t j = leaf_index;
    for (uint32_t k = 0; eff_count(k) > 1; k++) {
        uint64_t m = eff_count(k);
        uint64_t sib = j ^ 1;
        if (sib < m)
            p.siblings.emplace_back(node(k, sib), (j & 1) ? Side::Left : Side::Right);
        j >>= 1;
    }
    return p;
}

void MerkleTree::truncate(uint64_t new_count) {
    if (new_count > n_) throw std::invalid_argument("truncate beyond leaf count");
    if (new_count < base_) throw std::invalid_argument("truncate below anchor base");
    n_ = new_count;
    for (size_t k = 0; k < levels_.size(); k++) {
        uint64_t stable_total = k == 0 ? n_ : (n_ >> k);
        uint64_t keep = stable_total > level_base_[k] ? stable_total - level_base_[k] : 0;
        if (levels_[k].size() > keep) levels_[k].resize(keep);
    }
}

MerkleAnchor MerkleTree::anchor() const {
    MerkleAnchor a;
    a.leaf_count = n_;
    a.root = root();
    if (n_ > base_)
        a.newest_leaf = leaf_at(n_ - 1);
    else if (n_ > 0)
        a.newest_leaf = node(0, n_ - 1);
    for (int k = 63; k >= 0; k--) {
        if (n_ & (1ULL << k)) {
            uint64_t j = (n_ >> k) - 1;
            a.frontier.emplace_back(static_cast<uint32_t>(k), node(static_cast<uint32_t>(k), j));
        }
    }
    return a;
}

MerkleTree MerkleTree::from_anchor(const MerkleAnchor& anchor) {
    MerkleTree t;
    t.n_ = anchor.leaf_count;
    t.base_ = anchor.leaf_count;
    uint32_t max_level = 0;
    for (const auto& [lvl, d] : anchor.frontier) max_level = std::max(max_level, lvl);
    t.levels_.resize(max_level + 1);
    t.level_base_.resize(max_level + 1);
    for (uint32_t k = 0; k <= max_level; k++) {
        uint64_t lb = t.base_ >> k;
        if ((t.base_ >> k) & 1) lb -= 1;
        t.level_base_[k] = lb;
    }
    for (const auto& [lvl, d] : anchor.frontier) {
        // frontier node sits exactly at the odd slot of its level
        assert(((t.base_ >> lvl) & 1) == 1);
        t.levels_[lvl].push_back(d);
    }
    if (t.levels_.empty()) {
        t.levels_.emplace_back();
        t.level_base_.push_back(0);
    }
    if (t.root() != anchor.root) throw std::invalid_argument("anchor root mismatch");
    return t;
}

} // namespace lbft
