#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fermiphase/errors.hpp"
#include "fermiphase/scalar.hpp"

namespace fermiphase {

enum class GeneratorKind {
    grassmann_variable,
    grassmann_conjugate_variable,
    mode_creation,
    mode_annihilation,
};

inline bool is_grassmann_variable(GeneratorKind k) {
    return k == GeneratorKind::grassmann_variable ||
           k == GeneratorKind::grassmann_conjugate_variable;
}

inline bool is_mode_operator(GeneratorKind k) {
    return k == GeneratorKind::mode_creation || k == GeneratorKind::mode_annihilation;
}

struct GeneratorInfo {
    std::string name;
    GeneratorKind kind;
    int conj; // index of the conjugate partner generator
};

/// A declared pair of Grassmann variables (variable, conjugate), by index.
struct GrassmannPair {
    int var;
    int conj;
};

/// Immutable generator table fixing the canonical order of the odd
/// generators: Grassmann variables in declaration order (variable before
/// its conjugate), then the mode creation operator, then annihilation.
/// A context owns at most one CAR mode pair.
class AlgebraContext {
public:
    /// `grassmann_pairs` lists (name, conjugate name) pairs, e.g.
    /// {{"alpha","alphas"},{"beta","betas"}}. The mode pair is named
    /// ("ad", "a") when present.
    static std::shared_ptr<const AlgebraContext> create(
        SymbolTablePtr symbols,
        const std::vector<std::pair<std::string, std::string>>& grassmann_pairs,
        bool with_mode = true);

    int generator_count() const { return (int)gens_.size(); }
    const GeneratorInfo& gen(int index) const { return gens_[(size_t)index]; }
    int find(const std::string& name) const; // -1 if absent

    bool has_mode() const { return creation_ >= 0; }
    int creation_index() const { return creation_; }
    int annihilation_index() const { return annihilation_; }

    int pair_count() const { return (int)pairs_.size(); }
    GrassmannPair grassmann_pair(int pair_index) const { return pairs_[(size_t)pair_index]; }
    /// Pair lookup by the name of either member; throws if not a pair member.
    GrassmannPair grassmann_pair_of(const std::string& name) const;

    int conj_index(int g) const { return gens_[(size_t)g].conj; }
    const SymbolTablePtr& symbols() const { return symbols_; }

private:
    std::vector<GeneratorInfo> gens_;
    std::vector<GrassmannPair> pairs_;
    SymbolTablePtr symbols_;
    int creation_ = -1;
    int annihilation_ = -1;
};

using AlgebraContextPtr = std::shared_ptr<const AlgebraContext>;

} // namespace fermiphase
