#include "hopfgal/linalg.hpp"

namespace hopfgal {

void vec_add(SparseVec& a, const SparseVec& b, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    for (const auto& [i, c] : b) {
        auto it = a.find(i);
        if (it == a.end()) {
            Scalar v = c * coeff;
            if (!v.is_zero()) a[i] = v;
        } else {
            it->second += c * coeff;
            if (it->second.is_zero()) a.erase(it);
        }
    }
}

SparseVec vec_scale(const SparseVec& a, const Scalar& c) {
    SparseVec r;
    if (c.is_zero()) return r;
    for (const auto& [i, v] : a) r[i] = v * c;
    return r;
}

bool vec_is_zero(const SparseVec& a) { return a.empty(); }

SparseVec RowSpace::reduce(SparseVec v) const {
    // rows are kept fully back-substituted, so each pivot column is hit at
    // most once
    while (true) {
        long hit = -1;
        Scalar c;
        for (const auto& [i, cv] : v) {
            if (pivots_.count(i)) {
                hit = i;
                c = cv;
                break;
            }
        }
        if (hit < 0) break;
        vec_add(v, pivots_.at(hit), -c);
    }
    return v;
}

bool RowSpace::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    long lead = v.begin()->first;
    Scalar inv = v.begin()->second.inv();
    v = vec_scale(v, inv);
    // back-substitute into existing rows
    for (auto& [piv, row] : pivots_) {
        auto it = row.find(lead);
        if (it != row.end()) {
            Scalar c = it->second;
            vec_add(row, v, -c);
        }
    }
    pivots_.emplace(lead, std::move(v));
    return true;
}

std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& images) {
    // rows: image part at even offsets; tag part offset by OFFSET
    constexpr long OFFSET = 1L << 42;
    RowSpace rs;
    std::vector<SparseVec> kernel;
    for (size_t i = 0; i < images.size(); ++i) {
        SparseVec row = images[i];
        row[OFFSET + (long)i] = Scalar(1);
        row = rs.reduce(std::move(row));
        bool image_zero = row.empty() || row.begin()->first >= OFFSET;
        if (image_zero) {
            SparseVec combo;
            for (const auto& [k, c] : row) combo[k - OFFSET] = c;
            if (!combo.empty()) kernel.push_back(std::move(combo));
        } else {
            rs.insert(std::move(row));
        }
    }
    return kernel;
}

bool solve_in_span(const std::vector<SparseVec>& columns, const SparseVec& b, SparseVec* solution) {
    constexpr long OFFSET = 1L << 42;
    RowSpace rs;
    for (size_t i = 0; i < columns.size(); ++i) {
        SparseVec row = columns[i];
        if (row.empty()) continue;
        row[OFFSET + (long)i] = Scalar(1);
        rs.insert(std::move(row));
    }
    SparseVec res = rs.reduce(b);
    // the residue must be supported entirely on the tag columns
    for (const auto& [k, c] : res)
        if (k < OFFSET) return false;
    if (solution) {
        solution->clear();
        for (const auto& [k, c] : res) (*solution)[k - OFFSET] = -c;
    }
    return true;
}

}  // namespace hopfgal
