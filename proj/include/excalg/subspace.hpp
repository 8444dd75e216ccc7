#ifndef EXCALG_SUBSPACE_HPP
#define EXCALG_SUBSPACE_HPP

#include <excalg/echelon.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace excalg {

/*
 * A subspace of an ambient coordinate space with a stored (ordered) basis
 * and exact coordinate solves against it.
 */
template <typename F>
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ech_(ambient) {}

    std::size_t ambient_dim() const { return ech_.ambient_dim(); }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec<F>>& basis() const { return basis_; }

    bool insert(const Vec<F>& v) {
        if (!ech_.insert(v)) return false;
        basis_.push_back(v);
        return true;
    }

    bool contains(const Vec<F>& v) const { return ech_.contains(v); }

    std::optional<Vec<F>> coords(const Vec<F>& v) const { return ech_.coords(v); }

    Vec<F> coords_or_throw(const Vec<F>& v, const char* what) const {
        auto c = ech_.coords(v);
        if (!c) throw std::logic_error(std::string("subspace membership failed: ") + what);
        return *c;
    }

    Vec<F> lift(const Vec<F>& c) const {
        Vec<F> v(ambient_dim(), F(0));
        for (std::size_t t = 0; t < c.size(); ++t) {
            if (c[t].is_zero()) continue;
            for (std::size_t i = 0; i < ambient_dim(); ++i)
                if (!basis_[t][i].is_zero()) v[i] += c[t] * basis_[t][i];
        }
        return v;
    }

private:
    Echelon<F> ech_;
    std::vector<Vec<F>> basis_;
};

} // namespace excalg

#endif // EXCALG_SUBSPACE_HPP
