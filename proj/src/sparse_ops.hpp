#ifndef FHOPF_SRC_SPARSE_OPS_HPP
#define FHOPF_SRC_SPARSE_OPS_HPP

#include <algorithm>
#include <vector>

#include "fhopf/linalg.hpp"

namespace fhopf::detail {

/// Dense scratch vector that remembers which coordinates were written, so it
/// can be read back as a sparse vector and reset in time proportional to the
/// number of touched entries.
template <class S>
class Accumulator {
   public:
    Accumulator(const Field<S>& F, Index n) : field_(F), vals_(static_cast<size_t>(n)), used_(n, false) {}

    void add(Index i, const S& v) {
        if (!used_[i]) {
            used_[i] = true;
            touched_.push_back(i);
            vals_[i] = field_.tag(v);
        } else {
            vals_[i] += v;
        }
    }

    void add_column(const SpMat<S>& M, Index col, const S& c) {
        for (typename SpMat<S>::InnerIterator it(M, col); it; ++it) add(it.row(), c * it.value());
    }

    /// Returns the accumulated vector (zeros dropped) and clears the scratch.
    SpVec<S> take() {
        std::sort(touched_.begin(), touched_.end());
        SpVec<S> out(static_cast<Index>(used_.size()));
        for (Index i : touched_) {
            if (!is_zero(vals_[i])) out.insert(i) = vals_[i];
            used_[i] = false;
        }
        touched_.clear();
        return out;
    }

   private:
    Field<S> field_;
    std::vector<S> vals_;
    std::vector<bool> used_;
    std::vector<Index> touched_;
};

/// Equality of sparse vectors whose stored entries are all nonzero.
template <class S>
bool sparse_equal(const SpVec<S>& a, const SpVec<S>& b) {
    if (a.size() != b.size() || a.nonZeros() != b.nonZeros()) return false;
    typename SpVec<S>::InnerIterator ia(a), ib(b);
    for (; ia && ib; ++ia, ++ib)
        if (ia.index() != ib.index() || ia.value() != ib.value()) return false;
    return true;
}

template <class S>
SpVec<S> sparse_unit(Index n, Index i, const S& one) {
    SpVec<S> v(n);
    v.insert(i) = one;
    return v;
}

template <class S>
SpVec<S> sparse_column(const SpMat<S>& M, Index col) {
    SpVec<S> v(M.rows());
    for (typename SpMat<S>::InnerIterator it(M, col); it; ++it)
        if (!is_zero(it.value())) v.insert(it.row()) = it.value();
    return v;
}

/// Incrementally maintained echelon basis used for span membership tests.
template <class S>
class SpanTracker {
   public:
    SpanTracker(const Field<S>& F, Index n) : field_(F), n_(n) {}

    /// Adds v if it is independent of the tracked vectors; returns true if added.
    bool add(const Vec<S>& v) {
        Vec<S> r = reduce(v);
        Index p = 0;
        while (p < n_ && is_zero(r(p))) ++p;
        if (p == n_) return false;
        r /= r(p);
        basis_.push_back(r);
        pivots_.push_back(p);
        return true;
    }

    bool contains(const Vec<S>& v) const {
        Vec<S> r = reduce(v);
        for (Index i = 0; i < n_; ++i)
            if (!is_zero(r(i))) return false;
        return true;
    }

    Index rank() const { return static_cast<Index>(basis_.size()); }

   private:
    Vec<S> reduce(const Vec<S>& v) const {
        Vec<S> r = v;
        for (size_t k = 0; k < basis_.size(); ++k) {
            const S c = r(pivots_[k]);
            if (is_zero(c)) continue;
            r -= c * basis_[k];
        }
        return r;
    }

    Field<S> field_;
    Index n_;
    std::vector<Vec<S>> basis_;
    std::vector<Index> pivots_;
};

}  // namespace fhopf::detail

#endif  // FHOPF_SRC_SPARSE_OPS_HPP
