#ifndef EXCALG_ECHELON_HPP
#define EXCALG_ECHELON_HPP

#include <excalg/matrix.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace excalg {

/*
 * Incremental reduced row echelon form over an exact field, with a
 * transformation record so that any vector in the span can be re-expressed
 * in terms of the *original* inserted vectors (greedy deterministic basis).
 *
 * This is the workhorse behind span_rank, nullspace, operator-span bases,
 * centralizer solves, and structure-constant extraction.
 */
template <typename F>
class Echelon {
public:
    explicit Echelon(std::size_t ambient) : ambient_(ambient) {}

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return rows_.size(); }

    // Insert a vector; returns true iff it enlarged the span (and was kept
    // as a new basis member).
    bool insert(const Vec<F>& v) {
        if (v.size() != ambient_) throw std::invalid_argument("Echelon: wrong length");
        Vec<F> r = v;
        Vec<F> mult(rows_.size(), F(0));
        reduce(r, mult);
        std::size_t lead = ambient_;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!r[j].is_zero()) { lead = j; break; }
        if (lead == ambient_) return false;

        const F inv = r[lead].inv();
        for (F& x : r) x = x * inv;
        // Combination of this echelon row in terms of inserted basis vectors:
        // row = (v - sum mult_i * rows_i) / r[lead].
        Vec<F> combo(rank() + 1, F(0));
        combo[rank()] = inv;
        for (std::size_t i = 0; i < mult.size(); ++i) {
            if (mult[i].is_zero()) continue;
            const F f = mult[i] * inv;
            for (std::size_t t = 0; t < combos_[i].size(); ++t)
                combo[t] -= f * combos_[i][t];
        }
        // Back-substitute into existing rows to keep the form fully reduced.
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const F f = rows_[i][lead];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                if (!r[j].is_zero()) rows_[i][j] -= f * r[j];
            combos_[i].resize(rank() + 1, F(0));
            for (std::size_t t = 0; t < combo.size(); ++t)
                if (!combo[t].is_zero()) combos_[i][t] -= f * combo[t];
        }
        for (auto& c : combos_) c.resize(rank() + 1, F(0));
        rows_.push_back(std::move(r));
        combos_.push_back(std::move(combo));
        pivots_.push_back(lead);
        return true;
    }

    bool contains(const Vec<F>& v) const {
        Vec<F> r = v;
        Vec<F> mult(rows_.size(), F(0));
        reduce(r, mult);
        for (const F& x : r)
            if (!x.is_zero()) return false;
        return true;
    }

    // Coordinates of v with respect to the inserted basis vectors, or nullopt
    // if v lies outside the span.
    std::optional<Vec<F>> coords(const Vec<F>& v) const {
        Vec<F> r = v;
        Vec<F> mult(rows_.size(), F(0));
        reduce(r, mult);
        for (const F& x : r)
            if (!x.is_zero()) return std::nullopt;
        Vec<F> c(rank(), F(0));
        for (std::size_t i = 0; i < mult.size(); ++i) {
            if (mult[i].is_zero()) continue;
            for (std::size_t t = 0; t < combos_[i].size(); ++t)
                if (!combos_[i][t].is_zero()) c[t] += mult[i] * combos_[i][t];
        }
        return c;
    }

    const std::vector<Vec<F>>& reduced_rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    void reduce(Vec<F>& r, Vec<F>& mult) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const F f = r[pivots_[i]];
            if (f.is_zero()) continue;
            mult[i] = f;
            const Vec<F>& row = rows_[i];
            for (std::size_t j = pivots_[i]; j < ambient_; ++j)
                if (!row[j].is_zero()) r[j] -= f * row[j];
        }
    }

    std::size_t ambient_;
    std::vector<Vec<F>> rows_;     // reduced rows, unit pivots
    std::vector<Vec<F>> combos_;   // row i = sum_t combos_[i][t] * inserted[t]
    std::vector<std::size_t> pivots_;
};

// Rank of a span plus the greedy (input-order) choice of a maximal
// independent subset.
template <typename F>
std::pair<std::size_t, std::vector<std::size_t>> span_rank(const std::vector<Vec<F>>& vectors) {
    if (vectors.empty()) return {0, {}};
    Echelon<F> ech(vectors.front().size());
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != vectors.front().size())
            throw std::invalid_argument("span_rank: mixed vector lengths");
        if (ech.insert(vectors[i])) chosen.push_back(i);
    }
    return {ech.rank(), chosen};
}

template <typename F>
std::size_t rank_of(const Matrix<F>& m) {
    Echelon<F> ech(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Vec<F> row(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m(i, j);
        ech.insert(row);
    }
    return ech.rank();
}

// Basis of { v : M v = 0 }; size is guaranteed to be cols - rank.
template <typename F>
std::vector<Vec<F>> nullspace(const Matrix<F>& m) {
    Echelon<F> ech(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Vec<F> row(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m(i, j);
        ech.insert(row);
    }
    const auto& rows = ech.reduced_rows();
    const auto& piv = ech.pivots();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : piv) is_pivot[p] = true;
    std::vector<Vec<F>> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        Vec<F> v(m.cols(), F(0));
        v[j] = F(1);
        for (std::size_t i = 0; i < rows.size(); ++i) v[piv[i]] = -rows[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace excalg

#endif // EXCALG_ECHELON_HPP
