// Copyright 2026 The noethops authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOETHOPS_LINALG_HPP
#define NOETHOPS_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "noethops/errors.hpp"

namespace noethops {

/// Dense exact linear algebra over an arbitrary field type F.
/// Rows are vectors of F; the caller supplies zero/one exemplars since field
/// elements may carry context (residue fields) and have no default value.
template <class F>
struct LinAlg {
    using Row = std::vector<F>;

    F zero;
    F one;

    explicit LinAlg(F zero_elem, F one_elem) : zero(std::move(zero_elem)), one(std::move(one_elem)) {}

    /// In-place reduced row echelon form, leftmost-pivot convention.
    /// Returns the pivot column of each surviving row; zero rows are removed.
    std::vector<size_t> rref(std::vector<Row>& m) const {
        std::vector<size_t> pivots;
        if (m.empty()) return pivots;
        const size_t cols = m[0].size();
        size_t rank = 0;
        for (size_t c = 0; c < cols && rank < m.size(); ++c) {
            size_t sel = rank;
            while (sel < m.size() && m[sel][c].is_zero()) ++sel;
            if (sel == m.size()) continue;
            std::swap(m[rank], m[sel]);
            F inv = one / m[rank][c];
            for (size_t j = c; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
            for (size_t r = 0; r < m.size(); ++r) {
                if (r == rank || m[r][c].is_zero()) continue;
                F f = m[r][c];
                for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] - f * m[rank][j];
            }
            pivots.push_back(c);
            ++rank;
        }
        m.resize(rank, Row());
        return pivots;
    }

    /// Canonical basis of {x : M x = 0}; rows come back in reduced echelon
    /// form with leftmost pivots, so equal kernels give identical bases.
    std::vector<Row> kernel(std::vector<Row> m, size_t cols) const {
        std::vector<size_t> pivots = rref(m);
        std::vector<bool> is_pivot(cols, false);
        for (size_t p : pivots) is_pivot[p] = true;
        std::vector<Row> basis;
        for (size_t c = 0; c < cols; ++c) {
            if (is_pivot[c]) continue;
            Row v(cols, zero);
            v[c] = one;
            for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = zero - m[r][c];
            basis.push_back(std::move(v));
        }
        rref(basis);  // canonicalize
        return basis;
    }

    /// Solve M x = b; nullopt when inconsistent. Underdetermined systems get
    /// the representative with free coordinates set to zero.
    std::optional<Row> solve(std::vector<Row> m, const Row& b) const {
        const size_t cols = m.empty() ? 0 : m[0].size();
        for (size_t r = 0; r < m.size(); ++r) m[r].push_back(b[r]);
        std::vector<size_t> pivots = rref(m);
        Row x(cols, zero);
        for (size_t r = 0; r < pivots.size(); ++r) {
            if (pivots[r] == cols) return std::nullopt;  // pivot in the augmented column
            x[pivots[r]] = m[r][cols];
        }
        return x;
    }

    /// Is v in the row space of an rref'd matrix?
    bool in_span(Row v, const std::vector<Row>& rref_rows, const std::vector<size_t>& pivots) const {
        for (size_t r = 0; r < rref_rows.size(); ++r) {
            const F& c = v[pivots[r]];
            if (c.is_zero()) continue;
            F f = c;
            for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - f * rref_rows[r][j];
        }
        for (const F& c : v)
            if (!c.is_zero()) return false;
        return true;
    }

    bool span_equal(std::vector<Row> a, std::vector<Row> b) const {
        rref(a);
        rref(b);
        return a == b;
    }

    /// Basis of rowspace(a) + rowspace(b).
    std::vector<Row> span_sum(std::vector<Row> a, const std::vector<Row>& b) const {
        a.insert(a.end(), b.begin(), b.end());
        rref(a);
        return a;
    }

    /// Basis of rowspace(a) ∩ rowspace(b) via the Zassenhaus block trick.
    std::vector<Row> span_intersect(const std::vector<Row>& a, const std::vector<Row>& b) const {
        if (a.empty() || b.empty()) return {};
        const size_t n = a[0].size();
        std::vector<Row> block;
        for (const Row& u : a) {
            Row r(u);
            r.insert(r.end(), u.begin(), u.end());
            block.push_back(std::move(r));
        }
        for (const Row& w : b) {
            Row r(w);
            r.insert(r.end(), n, zero);
            block.push_back(std::move(r));
        }
        rref(block);
        std::vector<Row> out;
        for (const Row& r : block) {
            bool left_zero = true;
            for (size_t j = 0; j < n && left_zero; ++j) left_zero = r[j].is_zero();
            if (left_zero) out.emplace_back(r.begin() + n, r.end());
        }
        rref(out);
        return out;
    }
};

}  // namespace noethops

#endif
