#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mfcat/cyclofield.hpp"

namespace mfcat {

// Sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<uint32_t, CycNumber>>;

SparseVec sparse_axpy(const SparseVec& a, const CycNumber& c, const SparseVec& b);  // a + c*b

// Row echelon basis built one vector at a time. The pivot of a stored vector is
// its lowest nonzero index, normalised to 1. Each stored vector may carry a
// "track" recording it as a combination of caller-chosen generators.
class Echelon {
public:
    struct Reduced {
        SparseVec rest;
        SparseVec track;
    };

    // Reduces v (with its track) against the stored basis.
    Reduced reduce(const SparseVec& v, const SparseVec& track = {}) const;
    // Reduces and stores; returns true if v was independent.
    bool insert(const SparseVec& v, const SparseVec& track = {});
    // Stores an already reduced, nonzero vector.
    void insert_reduced(Reduced r);

    std::size_t rank() const { return rows_.size(); }
    bool in_span(const SparseVec& v) const { return reduce(v).rest.empty(); }

private:
    std::vector<SparseVec> rows_, tracks_;
    std::vector<int32_t> pivot_row_;  // index -> stored row, or -1
    uint32_t max_end_ = 0;
};

}  // namespace mfcat
