#include "fermiphase/algebra.hpp"

namespace fermiphase {

std::shared_ptr<const AlgebraContext> AlgebraContext::create(
    SymbolTablePtr symbols,
    const std::vector<std::pair<std::string, std::string>>& grassmann_pairs,
    bool with_mode) {
    auto ctx = std::make_shared<AlgebraContext>();
    ctx->symbols_ = std::move(symbols);
    auto check_fresh = [&ctx](const std::string& name) {
        for (const auto& g : ctx->gens_)
            if (g.name == name)
                throw context_error("AlgebraContext: duplicate generator '" + name + "'");
    };
    for (const auto& [var, conj] : grassmann_pairs) {
        check_fresh(var);
        check_fresh(conj);
        int v = (int)ctx->gens_.size();
        ctx->gens_.push_back({var, GeneratorKind::grassmann_variable, v + 1});
        ctx->gens_.push_back({conj, GeneratorKind::grassmann_conjugate_variable, v});
        ctx->pairs_.push_back({v, v + 1});
    }
    if (with_mode) {
        check_fresh("ad");
        check_fresh("a");
        int c = (int)ctx->gens_.size();
        ctx->gens_.push_back({"ad", GeneratorKind::mode_creation, c + 1});
        ctx->gens_.push_back({"a", GeneratorKind::mode_annihilation, c});
        ctx->creation_ = c;
        ctx->annihilation_ = c + 1;
    }
    return ctx;
}

int AlgebraContext::find(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return (int)i;
    return -1;
}

GrassmannPair AlgebraContext::grassmann_pair_of(const std::string& name) const {
    int idx = find(name);
    if (idx < 0) throw context_error("AlgebraContext: unknown generator '" + name + "'");
    const GeneratorInfo& g = gens_[(size_t)idx];
    if (!is_grassmann_variable(g.kind))
        throw invalid_measure_error("AlgebraContext: '" + name + "' is not a Grassmann variable");
    if (g.kind == GeneratorKind::grassmann_variable) return {idx, g.conj};
    return {g.conj, idx};
}

} // namespace fermiphase
