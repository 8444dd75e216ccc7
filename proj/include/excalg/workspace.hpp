#ifndef EXCALG_WORKSPACE_HPP
#define EXCALG_WORKSPACE_HPP

#include <excalg/composition.hpp>
#include <excalg/jordan.hpp>
#include <excalg/lie.hpp>
#include <excalg/structurable.hpp>

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace excalg {

/*
 * Lazily-built shared cache of every constructed algebra, so that suites
 * running in the same process build the expensive objects (the 248-dim
 * Lie algebras in particular) exactly once.
 *
 * Index conventions:
 *   composition chain:   0 = k, 1 = K, 2 = B, 3 = C
 *   tensor algebras:     0 = kxB, 1 = kxC, 2 = KxC, 3 = BxC, 4 = CxC
 *   Freudenthal:         0..3 over J_k, J_K, J_B, J_C
 */
template <typename F>
class Workspace {
public:
    Workspace() : chain_(build_chain<F>()) {}

    const CompositionChain<F>& chain() const { return chain_; }

    const CompositionAlgebra<F>& comp(std::size_t i) const {
        switch (i) {
            case 0: return chain_.k;
            case 1: return chain_.K;
            case 2: return chain_.B;
        }
        return chain_.C;
    }

    const JordanAlgebra<F>& jordan(std::size_t i) {
        if (!jordan_[i]) jordan_[i] = std::make_unique<JordanAlgebra<F>>(build_jordan(comp(i)));
        return *jordan_[i];
    }

    static constexpr std::array<std::pair<std::size_t, std::size_t>, 5> tensor_pairs{
        {{0, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 3}}};

    const StructurableAlgebra<F>& tensor(std::size_t i) {
        if (!tensor_[i]) {
            auto [a, b] = tensor_pairs[i];
            tensor_[i] = std::make_unique<StructurableAlgebra<F>>(build_tensor(comp(a), comp(b)));
        }
        return *tensor_[i];
    }

    const StructurableAlgebra<F>& freudenthal(std::size_t i) {
        if (!freud_[i])
            freud_[i] = std::make_unique<StructurableAlgebra<F>>(build_freudenthal(jordan(i)));
        return *freud_[i];
    }

    const KoecherAlgebra<F>& koecher_alg(std::size_t i) {
        if (!koecher_[i]) koecher_[i] = std::make_unique<KoecherAlgebra<F>>(koecher(jordan(i)));
        return *koecher_[i];
    }

    const AllisonAlgebra<F>& allison_tensor(std::size_t i) {
        if (!allison_t_[i]) allison_t_[i] = std::make_unique<AllisonAlgebra<F>>(allison(tensor(i)));
        return *allison_t_[i];
    }

    const AllisonAlgebra<F>& allison_freud(std::size_t i) {
        if (!allison_f_[i])
            allison_f_[i] = std::make_unique<AllisonAlgebra<F>>(allison(freudenthal(i)));
        return *allison_f_[i];
    }

    // All 13 constructed graded Lie algebras under their export names.
    static const std::vector<std::string>& algebra_names() {
        static const std::vector<std::string> names = {
            "koecher-Jk",  "koecher-JK",  "koecher-JB",  "koecher-JC",  "allison-kxB",
            "allison-kxC", "allison-KxC", "allison-BxC", "allison-CxC", "allison-Fk",
            "allison-FK",  "allison-FB",  "allison-FC"};
        return names;
    }

    const GradedLie<F>& lie_by_name(const std::string& name) {
        const auto& names = algebra_names();
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i] != name) continue;
            if (i < 4) return koecher_alg(i).lie;
            if (i < 9) return allison_tensor(i - 4).lie;
            return allison_freud(i - 9).lie;
        }
        throw std::invalid_argument("unknown algebra name: " + name);
    }

private:
    CompositionChain<F> chain_;
    std::array<std::unique_ptr<JordanAlgebra<F>>, 4> jordan_;
    std::array<std::unique_ptr<StructurableAlgebra<F>>, 5> tensor_;
    std::array<std::unique_ptr<StructurableAlgebra<F>>, 4> freud_;
    std::array<std::unique_ptr<KoecherAlgebra<F>>, 4> koecher_;
    std::array<std::unique_ptr<AllisonAlgebra<F>>, 5> allison_t_;
    std::array<std::unique_ptr<AllisonAlgebra<F>>, 4> allison_f_;
};

} // namespace excalg

#endif // EXCALG_WORKSPACE_HPP
