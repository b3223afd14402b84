#include "mfcat/sparse.hpp"

#include <algorithm>

namespace mfcat {

SparseVec sparse_axpy(const SparseVec& a, const CycNumber& c, const SparseVec& b) {
    if (c.is_zero()) return a;
    SparseVec out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
            out.emplace_back(j->first, j->second * c);
            ++j;
        } else {
            CycNumber v = i->second + j->second * c;
            if (!v.is_zero()) out.emplace_back(i->first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

namespace {

// Dense scratch buffer over [lo, hi) used while eliminating.
struct Accumulator {
    uint32_t lo = 0;
    std::vector<CycNumber> val;
    std::vector<char> nz;

    void load(const SparseVec& v, uint32_t hi) {
        lo = v.empty() ? 0 : v.front().first;
        val.assign(hi > lo ? hi - lo : 0, CycNumber());
        nz.assign(val.size(), 0);
        for (auto& [k, c] : v) {
            val[k - lo] = c;
            nz[k - lo] = 1;
        }
    }
    void sub(const SparseVec& row, const CycNumber& f) {
        for (auto& [k, c] : row) {
            CycNumber& slot = val[k - lo];
            slot.sub_mul(f, c);
            nz[k - lo] = !slot.is_zero();
        }
    }
    SparseVec dump() const {
        SparseVec out;
        for (std::size_t i = 0; i < val.size(); ++i)
            if (nz[i]) out.emplace_back(static_cast<uint32_t>(i + lo), val[i]);
        return out;
    }
};

uint32_t end_index(const SparseVec& v) { return v.empty() ? 0 : v.back().first + 1; }

}  // namespace

Echelon::Reduced Echelon::reduce(const SparseVec& v, const SparseVec& track) const {
    Reduced r{{}, track};
    if (v.empty()) return r;
    uint32_t hi = std::max(end_index(v), max_end_);
    Accumulator acc;
    acc.load(v, hi);
    for (std::size_t i = 0; i < acc.val.size(); ++i) {
        if (!acc.nz[i]) continue;
        uint32_t idx = static_cast<uint32_t>(i + acc.lo);
        if (idx >= pivot_row_.size() || pivot_row_[idx] < 0) continue;
        int p = pivot_row_[idx];
        CycNumber f = acc.val[i];
        acc.sub(rows_[p], f);
        if (!tracks_[p].empty()) r.track = sparse_axpy(r.track, -f, tracks_[p]);
    }
    r.rest = acc.dump();
    return r;
}

void Echelon::insert_reduced(Reduced r) {
    CycNumber inv = r.rest.front().second.inverse();
    for (auto& e : r.rest) e.second *= inv;
    for (auto& e : r.track) e.second *= inv;
    uint32_t piv = r.rest.front().first;
    if (pivot_row_.size() <= piv) pivot_row_.resize(piv + 1, -1);
    pivot_row_[piv] = static_cast<int32_t>(rows_.size());
    max_end_ = std::max(max_end_, end_index(r.rest));
    rows_.push_back(std::move(r.rest));
    tracks_.push_back(std::move(r.track));
}

bool Echelon::insert(const SparseVec& v, const SparseVec& track) {
    Reduced r = reduce(v, track);
    if (r.rest.empty()) return false;
    insert_reduced(std::move(r));
    return true;
}

}  // namespace mfcat
