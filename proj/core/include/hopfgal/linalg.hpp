#pragma once

#include <map>
#include <vector>

#include "hopfgal/scalar.hpp"

namespace hopfgal {

// Sparse vector over Scalar, indexed by long keys. No zero entries.
using SparseVec = std::map<long, Scalar>;

void vec_add(SparseVec& a, const SparseVec& b, const Scalar& coeff);
SparseVec vec_scale(const SparseVec& a, const Scalar& c);
bool vec_is_zero(const SparseVec& a);

// Row space in echelon form over the Scalar field. Pivot = smallest index of
// a row. Deterministic: rows are fully reduced against existing pivots before
// insertion and existing rows are back-substituted.
class RowSpace {
  public:
    // reduce v against the pivots (returns the residue)
    SparseVec reduce(SparseVec v) const;
    // reduce and insert if nonzero; returns true if the row was added
    bool insert(SparseVec v);
    size_t rank() const { return pivots_.size(); }
    bool contains(const SparseVec& v) const { return vec_is_zero(reduce(v)); }
    const std::map<long, SparseVec>& pivots() const { return pivots_; }

  private:
    std::map<long, SparseVec> pivots_;   // leading index -> monic row
};

// Kernel of the linear map sending basis vector i to images[i]: returns
// coefficient vectors (indexed by i) spanning the kernel, in echelon form.
std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& images);

// Solve sum_i x_i * columns[i] = b. Returns empty optional-like flag via
// `ok`; solution coefficients indexed by column position.
bool solve_in_span(const std::vector<SparseVec>& columns, const SparseVec& b, SparseVec* solution);

// Interns arbitrary ordered keys to long indices (deterministic by insertion).
template <typename Key>
class KeyIndex {
  public:
    long intern(const Key& k) {
        auto it = map_.find(k);
        if (it != map_.end()) return it->second;
        long id = (long)keys_.size();
        map_.emplace(k, id);
        keys_.push_back(k);
        return id;
    }
    const Key& key(long id) const { return keys_[id]; }
    long find(const Key& k) const {
        auto it = map_.find(k);
        return it == map_.end() ? -1 : it->second;
    }
    size_t size() const { return keys_.size(); }

  private:
    std::map<Key, long> map_;
    std::vector<Key> keys_;
};

}  // namespace hopfgal
